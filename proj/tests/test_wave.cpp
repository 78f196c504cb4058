#include <doctest.h>

#include "aztec/errors.hpp"
#include "aztec/wave.hpp"

using aztec::DyadicGaussian;
using namespace aztec::wave;

namespace {

DyadicGaussian dy(long re, long im, std::uint64_t e) { return DyadicGaussian::from_parts(re, im, e); }

SolverOptions full() {
    SolverOptions o;
    o.history = History::Full;
    return o;
}

}  // namespace

TEST_CASE("fundamental solution hand values") {
    const auto f0 = fundamental_solution(3, full());
    CHECK(f0.at(0, 0, 1) == DyadicGaussian(1));
    CHECK(f0.at(1, 0, 2) == dy(1, 0, 1));
    CHECK(f0.at(0, -1, 2) == dy(1, 0, 1));
    CHECK(f0.at(0, 0, 3) == DyadicGaussian(0));
    CHECK(f0.at(1, 1, 3) == dy(1, 0, 1));
    CHECK(f0.at(2, 0, 3) == dy(1, 0, 2));
    CHECK(f0.at(5, 0, 2) == DyadicGaussian(0));
}

TEST_CASE("cone solution hand values for (0;1,i,-1,-i)") {
    const auto f = cone_solve(temb_bc(), 4, full());
    CHECK(f.at(1, 0, 2) == dy(1, 0, 1));
    CHECK(f.at(0, 1, 2) == dy(0, 1, 1));
    CHECK(f.at(2, 0, 3) == dy(3, 0, 2));
    CHECK(f.at(1, 1, 3) == dy(1, 1, 2));
    CHECK(f.at(0, 0, 3) == DyadicGaussian(0));
    CHECK(f.at(1, 0, 4) == dy(1, 0, 3));
    CHECK(f.at(0, 0, 1) == DyadicGaussian(0));
}

TEST_CASE("edge closed form 2^-n b0 + (1 - 2^-n) bE") {
    BoundaryConditions bc = parse_bc("3;1,0,0,0");
    ConeSolver<DyadicGaussian> s(bc);
    for (int n = 1; n <= 200; ++n) {
        s.advance();
        // f(n, 0, n+1) lives in slice n+1; slice n holds f(n-1, 0, n).
        const DyadicGaussian pow = DyadicGaussian(1).scaled_pow2(-(n - 1));
        const DyadicGaussian want = pow * bc.b0 + (DyadicGaussian(1) - pow) * bc.bE;
        REQUIRE(s.current().value(n - 1, 0) == want);
    }
    const auto f = cone_solve(edge_bc(Direction::East), 4, full());
    CHECK(f.at(3, 0, 4) == dy(7, 0, 3));
}

TEST_CASE("tip data reproduces the fundamental solution") {
    const auto f0 = fundamental_solution(60, full());
    const auto cone = cone_solve(tip_bc(), 60, full());
    for (int n = 0; n <= 60; ++n) REQUIRE(f0.slice(n) == cone.slice(n));
}

TEST_CASE("moving source convolution matches the cone solve") {
    const auto f0 = fundamental_solution(40, full());
    const auto east = cone_solve(edge_bc(Direction::East), 40, full());
    CHECK(convolve_moving_source(Direction::East, {1, 0, 2}, f0) == dy(1, 0, 1));
    CHECK(convolve_moving_source(Direction::East, {0, 0, 3}, f0) == dy(1, 0, 2));
    CHECK(convolve_moving_source(Direction::East, {0, 0, 1}, f0) == DyadicGaussian(0));
    for (int n = 1; n <= 40; n += 3) {
        east.slice(n).for_each([&](int j, int k, const DyadicGaussian& v) {
            REQUIRE(convolve_moving_source(Direction::East, {j, k, n}, f0) == v);
        });
    }
    CHECK_THROWS_AS(convolve_moving_source(Direction::East, {0, 0, 2}, f0), aztec::ArgumentError);
}

TEST_CASE("linearity: four edge fields rebuild the symmetric data") {
    const int n = 30;
    const auto t = cone_solve(temb_bc(), n);
    const auto e = cone_solve(edge_bc(Direction::East), n);
    const auto no = cone_solve(edge_bc(Direction::North), n);
    const auto w = cone_solve(edge_bc(Direction::West), n);
    const auto s = cone_solve(edge_bc(Direction::South), n);
    t.slice(n).for_each([&](int j, int k, const DyadicGaussian& v) {
        const DyadicGaussian rebuilt = e.at(j, k, n) + no.at(j, k, n).mul_i() - w.at(j, k, n) - s.at(j, k, n).mul_i();
        REQUIRE(rebuilt == v);
    });
}

TEST_CASE("slice_max") {
    const auto f0 = fundamental_solution(2, full());
    CHECK(slice_max(f0, 0) == 0.0);
    CHECK(slice_max(f0, 1) == 1.0);
    CHECK(slice_max(f0, 2) == 0.5);
}

TEST_CASE("recursion holds exactly and symmetry of the symmetric data") {
    const auto f = cone_solve(temb_bc(), 40, full());
    CHECK(count_recursion_violations(f, true) == 0);
    const auto f0 = fundamental_solution(40, full());
    CHECK(count_recursion_violations(f0, false) == 0);
    // Rotation by i: f(-k, j, n) = i f(j, k, n).
    f.slice(40).for_each([&](int j, int k, const DyadicGaussian& v) { REQUIRE(f.at(-k, j, 40) == v.mul_i()); });
}

TEST_CASE("float solver drift stays small") {
    const auto r = measure_float_drift(temb_bc(), 200);
    CHECK(r.max_abs_drift < 1e-12);
    CHECK(r.max_abs_value <= 1.0);
}

TEST_CASE("rolling history keeps the last two slices") {
    const auto f = cone_solve(temb_bc(), 10);
    CHECK(f.has_slice(10));
    CHECK(f.has_slice(9));
    CHECK_FALSE(f.has_slice(8));
    CHECK_THROWS_AS(f.slice(8), aztec::ArgumentError);
    CHECK_THROWS_AS(f.slice(11), aztec::ArgumentError);
}

TEST_CASE("lattice parity and support") {
    Slice<DyadicGaussian> s(3);
    CHECK(s.in_support(1, 1));
    CHECK_FALSE(s.in_support(3, 0));
    CHECK_THROWS_AS(s.value(1, 0), aztec::ArgumentError);
    CHECK(s.value(4, 0) == DyadicGaussian(0));
    CHECK(LatticePoint{0, 0, 1}.valid());
    CHECK_FALSE(LatticePoint{0, 0, 2}.valid());
    CHECK_FALSE(LatticePoint{0, 1, -1}.valid());
}

TEST_CASE("boundary condition text") {
    const auto bc = parse_bc("0;1,i,-1,-i");
    CHECK(bc.bE == DyadicGaussian(1));
    CHECK(bc.bN == DyadicGaussian(0, 1));
    CHECK(bc.bS == DyadicGaussian(0, -1));
    CHECK(parse_bc(format_bc(bc)).bW == bc.bW);
    CHECK(parse_bc("1+2i;0,0,0,(1)+(0)i / 2^1").bS == dy(1, 0, 1));
    CHECK_THROWS_AS(parse_bc("0;1,i,-1"), aztec::ArgumentError);
    CHECK_THROWS_AS(parse_bc("0;1,i,-1,x"), aztec::ArgumentError);
}

TEST_CASE("memory cap is enforced") {
    SolverOptions o;
    o.memory_cap = 1024;
    CHECK_THROWS_AS(cone_solve(temb_bc(), 100, o), aztec::ResourceError);
}

TEST_CASE("threads give identical slices") {
    SolverOptions one, four;
    four.threads = 4;
    const auto a = cone_solve(temb_bc(), 80, one);
    const auto b = cone_solve(temb_bc(), 80, four);
    CHECK(a.slice(80) == b.slice(80));
}
