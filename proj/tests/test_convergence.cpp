#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aztec/convergence.hpp"
#include "aztec/errors.hpp"

using namespace aztec::convergence;

TEST_CASE("f0 decay hand values") {
    const auto r = check_f0_decay({1, 2});
    CHECK(r.check == "f0-decay");
    CHECK(r.n_list == std::vector<int>{1, 2});
    REQUIRE(r.tables.size() == 1);
    CHECK(r.tables[0].rows[0].value == 1.0);
    CHECK(r.tables[0].rows[1].value == 0.5);
    CHECK(r.ok());
    CHECK(check_f0_decay({10, 20, 40, 80}).all_decreasing());
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(check_f0_decay({}), aztec::ArgumentError);
    CHECK_THROWS_AS(check_f0_decay({4, 2}), aztec::ArgumentError);
    CHECK_THROWS_AS(check_f0_decay({0, 2}), aztec::ArgumentError);
    CHECK_THROWS_AS(check_fE_limit({2, 4}, 0.0), aztec::ArgumentError);
    CHECK_THROWS_AS(check_embedding_limit({2, 4}, -1.0), aztec::ArgumentError);
}

TEST_CASE("edge field in the frozen and liquid zones") {
    aztec::wave::ConeSolver<aztec::DyadicGaussian> s(aztec::wave::edge_bc(aztec::wave::Direction::East));
    s.advance_to(201);
    // (150, 0) is deep in the frozen-E zone, (0, 0) at the center.
    CHECK(s.current().value(150, 0).to_complex().real() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(s.current().value(0, 0).to_complex().real() == doctest::Approx(0.25).epsilon(0.05));
}

TEST_CASE("a band wider than the diamond leaves no samples") {
    const auto r = check_fE_limit({10, 20}, 2.0);
    for (const auto& row : r.tables[0].rows) {
        CHECK(row.samples == 0);
        CHECK(row.value == 0.0);
    }
}

TEST_CASE("discontinuity distance and the sample region") {
    CHECK(distance_to_discontinuity(0, 0) == doctest::Approx(std::numbers::sqrt2 / 2));
    CHECK(distance_to_discontinuity(0.5, 0.7) == doctest::Approx(0.0));
    CHECK(distance_to_discontinuity(0.6, 0.0) == doctest::Approx(std::numbers::sqrt2 / 2 - 0.6));
    CHECK(in_region(0.1, 0.1, {}));
    CHECK_FALSE(in_region(0.7, 0.0, {}));   // within the band of the circle
    CHECK_FALSE(in_region(0.96, 0.0, {}));  // outside the compact set
    CHECK(in_region(0.85, 0.0, {}));
}

TEST_CASE("decreasing means below every earlier row") {
    Table t{"x", {{1, 3.0, 1}, {2, 2.0, 1}, {3, 2.5, 1}}};
    CHECK_FALSE(t.decreasing());
    t.rows[2].value = 1.0;
    CHECK(t.decreasing());
    t.rows[2].value = 2.0;
    CHECK_FALSE(t.decreasing());
}

TEST_CASE("embedding limit is internally consistent") {
    const auto r = check_embedding_limit({8, 16, 32}, 0.05);
    CHECK(r.consistency_failures.empty());
    REQUIRE(r.tables.size() == 3);
    CHECK(r.tables[0].name == "|T-z|");
    CHECK(r.tables[2].rows[0].samples == static_cast<std::size_t>(2 * 8 * 8 - 2 * 8 + 1));
    CHECK(format_report(r).find("|ReO'+theta|") != std::string::npos);
}
