#include <doctest.h>

#include <random>

#include "aztec/dyadic.hpp"
#include "aztec/errors.hpp"

using aztec::DyadicGaussian;
using aztec::RationalGaussian;

namespace {

DyadicGaussian dy(long re, long im, std::uint64_t e) { return DyadicGaussian::from_parts(re, im, e); }

// Value of a dyadic as an exact rational pair, computed without the class.
std::pair<mpq_class, mpq_class> as_rationals(const DyadicGaussian& d) {
    mpz_class den = 1;
    den <<= d.exp();
    mpq_class re(d.re_num(), den), im(d.im_num(), den);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

DyadicGaussian random_dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<int> e(0, 12);
    return dy(num(rng), num(rng), static_cast<std::uint64_t>(e(rng)));
}

}  // namespace

TEST_CASE("normalization keeps one odd numerator") {
    const auto x = dy(4, 8, 3);
    CHECK(x.exp() == 1);
    CHECK(x.re_num() == 1);
    CHECK(x.im_num() == 2);
    CHECK(x.is_normalized());
    CHECK(dy(0, 0, 7) == DyadicGaussian());
    CHECK(dy(0, 0, 7).exp() == 0);
    CHECK(DyadicGaussian(4, 2).halved() == DyadicGaussian(2, 1));
    CHECK(DyadicGaussian(4, 2).scaled_pow2(-2) == dy(2, 1, 1));
    CHECK(DyadicGaussian(4, 2).scaled_pow2(-2).is_normalized());
}

TEST_CASE("arithmetic hand values") {
    CHECK(dy(1, 0, 1) + dy(1, 0, 1) == DyadicGaussian(1));
    CHECK(DyadicGaussian(1, 1).halved() == dy(1, 1, 1));
    CHECK(dy(1, 1, 2) * dy(1, -1, 2) == dy(1, 0, 3));
    CHECK(DyadicGaussian(3, 2).mul_i() == DyadicGaussian(-2, 3));
    CHECK(DyadicGaussian(3, 2).conj() == DyadicGaussian(3, -2));
    CHECK(DyadicGaussian(3, 4).norm2() == DyadicGaussian(25));
    CHECK(dy(3, 0, 2).scaled_pow2(2) == DyadicGaussian(3));
    CHECK(cross(DyadicGaussian(1), DyadicGaussian(0, 1)) == DyadicGaussian(1));
    CHECK(dot(DyadicGaussian(1, 2), DyadicGaussian(3, 4)) == DyadicGaussian(11));
}

TEST_CASE("conversion to double") {
    CHECK(dy(1, 0, 1).to_complex() == std::complex<double>(0.5, 0));
    CHECK(dy(1, 1, 2).to_complex() == std::complex<double>(0.25, 0.25));
    mpz_class big = 1;
    big <<= 1100;
    CHECK_THROWS_AS(DyadicGaussian(big, 0, 0).to_complex(), aztec::OverflowError);
    // Large exponents with matching numerators still convert.
    CHECK(DyadicGaussian(big, big, 1101).to_complex() == std::complex<double>(0.5, 0.5));
}

TEST_CASE("correct rounding at a tie") {
    // 1 + 2^-53 is halfway between 1 and the next double; ties go to even.
    mpz_class num = 1;
    num <<= 53;
    num += 1;
    CHECK(DyadicGaussian(num, 0, 53).to_complex().real() == 1.0);
    num += 2;  // 1 + 3*2^-53 rounds up to 1 + 2^-51
    CHECK(DyadicGaussian(num, 0, 53).to_complex().real() == 1.0 + 0x1p-51);
}

TEST_CASE("text form round trip") {
    const auto x = dy(1, 1, 2);
    CHECK(x.to_string() == "(1)+(1)i / 2^2");
    CHECK(DyadicGaussian::parse("(1)+(1)i / 2^2") == x);
    CHECK(DyadicGaussian::parse("(2)+(2)i / 2^3") == x);
    CHECK(DyadicGaussian::parse("(-3)+(0)i / 2^0") == DyadicGaussian(-3));
    CHECK_THROWS_AS(DyadicGaussian::parse("1+i"), aztec::ArgumentError);
    CHECK_THROWS_AS(DyadicGaussian::parse("(1)+(1)i / 2^"), aztec::ArgumentError);
}

TEST_CASE("rational division") {
    CHECK(rational_div(dy(1, 0, 1), dy(1, 0, 2)) == RationalGaussian(2));
    CHECK(rational_div(DyadicGaussian(0, 1), DyadicGaussian(1, 1)) == RationalGaussian(dy(1, 1, 1)));
    CHECK_THROWS_AS(rational_div(DyadicGaussian(1), DyadicGaussian()), aztec::DivisionByZeroError);
    const RationalGaussian third = rational_div(DyadicGaussian(1), DyadicGaussian(3));
    CHECK_FALSE(third.is_dyadic());
    CHECK_THROWS_AS(third.to_dyadic(), aztec::ArgumentError);
    CHECK((third * RationalGaussian(3)).to_dyadic() == DyadicGaussian(1));
}

TEST_CASE("property: ring laws against an mpq oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_dyadic(rng), b = random_dyadic(rng), c = random_dyadic(rng);
        const auto [ar, ai] = as_rationals(a);
        const auto [br, bi] = as_rationals(b);
        const auto sum = as_rationals(a + b);
        CHECK(sum.first == ar + br);
        CHECK(sum.second == ai + bi);
        const auto prod = as_rationals(a * b);
        CHECK(prod.first == ar * br - ai * bi);
        CHECK(prod.second == ar * bi + ai * br);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK((a + b).is_normalized());
        CHECK((a * b).is_normalized());
        CHECK(a.halved().is_normalized());
        CHECK(a.scaled_pow2(-3).is_normalized());
        CHECK(a.scaled_pow2(5).scaled_pow2(-5) == a);
        CHECK(DyadicGaussian::parse(a.to_string()) == a);
        if (!a.is_zero()) CHECK(rational_div(a, a) == RationalGaussian(1));
    }
}

TEST_CASE("property: wave_update matches the arithmetic it replaces") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_dyadic(rng), b = random_dyadic(rng), c = random_dyadic(rng);
        const auto d = random_dyadic(rng), e = random_dyadic(rng);
        DyadicGaussian out;
        wave_update(out, a, b, c, d, e);
        CHECK(out == (a + b + c + d).halved() - e);
    }
}
