#include "altmin/errors.hpp"
#include "altmin/problems/generators.hpp"

#include <doctest.h>

using namespace altmin;
using namespace altmin::problems;

TEST_CASE("generated quadratics hit their condition numbers") {
    struct Case {
        int dim;
        double kappa, kappa1, kappa2;
    };
    for (const Case c : {Case{100, 1000, 10, 10}, Case{40, 50, 5, 20}, Case{20, 1e4, 100, 1}}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const auto g = generate_quadratic(c.dim, c.kappa, c.kappa1, c.kappa2, seed);
            const int h = c.dim / 2;
            CHECK((g.W - g.W.transpose()).norm() == 0.0);
            CHECK(std::abs(symmetric_condition_number(g.W) / c.kappa - 1) <= 0.05);
            CHECK(std::abs(symmetric_condition_number(g.W.topLeftCorner(h, h)) / c.kappa1 - 1) <= 0.05);
            CHECK(std::abs(symmetric_condition_number(g.W.bottomRightCorner(h, h)) / c.kappa2 - 1) <= 0.05);
            CHECK((g.W * g.x_star - g.b).norm() <= 1e-10 * g.b.norm());
            CHECK(g.assembled().monitor_value(g.x_star) < 1e-18 * std::max(1.0, g.b.squaredNorm()));
        }
    }
}

TEST_CASE("generation is deterministic") {
    const auto a = generate_quadratic(30, 100, 5, 5, 42);
    const auto b = generate_quadratic(30, 100, 5, 5, 42);
    const auto c = generate_quadratic(30, 100, 5, 5, 43);
    CHECK(a.W == b.W);
    CHECK(a.b == b.b);
    CHECK(a.W != c.W);
}

TEST_CASE("identity case") {
    const auto g = generate_quadratic(10, 1, 1, 1, 1);
    CHECK(symmetric_condition_number(g.W) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(g.coupling == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(generate_quadratic(11, 100, 5, 5, 1), Error);
    CHECK_THROWS_AS(generate_quadratic(10, 4, 5, 5, 1), Error);
    CHECK_THROWS_AS(generate_quadratic(10, 100, 0.5, 5, 1), Error);
}
