#include "reference.hpp"

#include "altmin/coefficients.hpp"
#include "altmin/errors.hpp"

#include <doctest.h>

using namespace altmin;

TEST_CASE("known-L coefficient examples") {
    CHECK(solve_coefficient_known_L(0, 1, 0, 1) == doctest::Approx(1.0));
    CHECK(solve_coefficient_known_L(0, 1, 2, 4) == doctest::Approx(0.5));
    CHECK(solve_coefficient_known_L(1, 1, 0, 1) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    try {
        solve_coefficient_known_L(1, 1, 2, 2);
        FAIL("expected InvalidCoefficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidCoefficient);
    }
}

TEST_CASE("known-L coefficient solves its defining equation (property)") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < 2000; ++s) {
        const double A = s % 10 == 0 ? 0.0 : std::pow(10.0, 8 * unif(rng) - 4);
        const double mu = s % 3 == 0 ? 0.0 : std::pow(10.0, 6 * unif(rng) - 4);
        const double tau = 1.0 + mu * A;
        const double Ln = mu + std::pow(10.0, 8 * unif(rng) - 3);
        const double a = solve_coefficient_known_L(A, tau, mu, Ln);
        REQUIRE(a > 0);
        const double lhs = a * a / ((A + a) * (tau + mu * a));
        CHECK(std::abs(lhs * Ln - 1.0) <= 1e-10);
        // Independent quadratic formula.
        const double q = ref::quadratic_root(Ln - mu, -(tau + mu * A), -A * tau);
        CHECK(std::abs(a - q) <= 1e-9 * q);
    }
}

TEST_CASE("sufficient-decrease coefficient examples") {
    SufficientDecreaseInput in;
    in.grad_norm_sq = 1;
    in.delta = 0.5;
    CHECK(solve_sufficient_decrease(in) == doctest::Approx(1.0));

    in = {};
    in.A = 1;
    in.grad_norm_sq = 4;
    in.delta = 2;
    const double a = solve_sufficient_decrease(in);
    CHECK(a == doctest::Approx((2 + std::sqrt(20.0)) / 4));
    CHECK(std::abs(sufficient_decrease_residual(in, a)) <= 1e-12);

    in = {};
    in.mu = 1;
    in.tau = 1;
    in.grad_norm_sq = 2;
    in.delta = 0.5;
    CHECK(solve_sufficient_decrease(in) == doctest::Approx(1.0).epsilon(1e-10));
    in.delta = 0.25;
    CHECK(solve_sufficient_decrease(in) == doctest::Approx(0.25 / 0.75).epsilon(1e-10));

    in.delta = 0.0;
    try {
        solve_sufficient_decrease(in);
        FAIL("expected DegenerateStep");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateStep);
    }
}

TEST_CASE("sufficient-decrease mu = 0 closed form agrees with bisection") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < 1000; ++s) {
        SufficientDecreaseInput in;
        in.A = s % 7 == 0 ? 0.0 : std::pow(10.0, 6 * unif(rng) - 3);
        in.grad_norm_sq = std::pow(10.0, 4 * unif(rng) - 2);
        in.delta = std::pow(10.0, 4 * unif(rng) - 3);
        const double closed = solve_sufficient_decrease(in);
        // Independent bisection on the residual.
        double lo = 0.0, hi = 1.0;
        while (sufficient_decrease_residual(in, hi) < 0) hi *= 2;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (lo + hi);
            (sufficient_decrease_residual(in, mid) < 0 ? lo : hi) = mid;
        }
        CHECK(std::abs(closed - 0.5 * (lo + hi)) <= 1e-10 * closed);
    }
}

TEST_CASE("sufficient-decrease mu > 0 residual (property)") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int solved = 0;
    for (int s = 0; s < 1000; ++s) {
        SufficientDecreaseInput in;
        in.A = std::pow(10.0, 4 * unif(rng) - 2);
        in.mu = std::pow(10.0, 3 * unif(rng) - 3);
        in.tau = 1.0 + in.mu * in.A;
        in.grad_norm_sq = std::pow(10.0, 2 * unif(rng) - 1);
        in.vy_dist_sq = unif(rng) < 0.5 ? 0.0 : std::pow(10.0, 2 * unif(rng) - 2);
        in.delta = std::pow(10.0, 2 * unif(rng) - 3);
        try {
            const double a = solve_sufficient_decrease(in);
            CHECK(a > 0);
            CHECK(std::abs(sufficient_decrease_residual(in, a)) <= 1e-12 * std::max(1.0, in.delta));
            ++solved;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoRoot);
        }
    }
    CHECK(solved > 500);
}

TEST_CASE("local Lipschitz estimate") {
    CHECK(local_lipschitz_estimate(0, 1) == doctest::Approx(1.0));
    const double a = solve_coefficient_known_L(3.0, 1.0, 0.0, 7.0);
    CHECK(local_lipschitz_estimate(3.0, a) == doctest::Approx(7.0).epsilon(1e-12));
}
