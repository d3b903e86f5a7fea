#include "reference.hpp"

#include "altmin/errors.hpp"
#include "altmin/finite_diff.hpp"
#include "altmin/problems/generators.hpp"
#include "altmin/problems/quadratic.hpp"
#include "altmin/problems/serialization.hpp"
#include "altmin/problems/split_quadratic.hpp"

#include <doctest.h>

#include <sstream>

using namespace altmin;
using namespace altmin::problems;

TEST_CASE("quadratic value and gradient") {
    const QuadraticProblem q(Matrix::Identity(2, 2), Vector::Zero(2));
    const Point z = (Point(2) << 1, 2).finished();
    const auto [f, g] = q.value_and_gradient(z);
    CHECK(f == doctest::Approx(5.0));
    CHECK(g[0] == doctest::Approx(2.0));
    CHECK(g[1] == doctest::Approx(4.0));

    std::mt19937_64 rng(12);
    const Matrix M = ref::random_matrix(5, 5, rng);
    const Matrix W = M + M.transpose() + 10 * Matrix::Identity(5, 5);
    const Vector b = ref::random_vector(5, rng);
    const QuadraticProblem p(W, b);
    const Point zs = p.minimizer();
    CHECK(p.monitor_value(zs) < 1e-20);
    CHECK(p.monitor(zs).second.norm() < 1e-10);
    const Point z5 = ref::random_vector(5, rng);
    CHECK(ref::rel_err(finite_diff_gradient(p, z5), p.gradient(z5)) < 1e-6);

    CHECK_THROWS_AS(q.value(Point::Zero(3)), Error);
    Matrix asym = Matrix::Identity(2, 2);
    asym(0, 1) = 0.5;
    CHECK_THROWS_AS(QuadraticProblem(asym, Vector::Zero(2)), Error);
    CHECK_THROWS_AS(QuadraticProblem(Matrix::Identity(2, 2), Vector::Zero(3)), Error);
}

TEST_CASE("strong convexity constants") {
    auto sc = strong_convexity_constant(Matrix::Identity(3, 3));
    CHECK(sc.sqrt_lambda_min == doctest::Approx(1.0));
    CHECK(sc.hessian_value == doctest::Approx(2.0));
    sc = strong_convexity_constant((Matrix(2, 2) << 1, 0, 0, 3).finished());
    CHECK(sc.sqrt_lambda_min == doctest::Approx(1.0));
    CHECK(sc.hessian_value == doctest::Approx(2.0));
    CHECK(gradient_lipschitz_constant((Matrix(2, 2) << 1, 0, 0, 3).finished()) == doctest::Approx(18.0));

    const auto gen = generate_quadratic(30, 50, 5, 5, 8);
    const Matrix H = 2 * gen.W.transpose() * gen.W;
    const double power = ref::min_eigenvalue_power(H);
    CHECK(std::abs(strong_convexity_constant(gen.W).hessian_value - power) <= 1e-8 * H.norm());
}

TEST_CASE("split block minimizers") {
    SUBCASE("decoupled blocks update to c and d") {
        const int h = 3;
        const Vector c = (Vector(h) << 1, 2, 3).finished();
        const Vector d = (Vector(h) << -1, 0, 4).finished();
        const SplitQuadraticProblem p(Matrix::Identity(h, h), Matrix::Zero(h, h), Matrix::Zero(h, h),
                                      Matrix::Identity(h, h), c, d);
        std::mt19937_64 rng(1);
        const Point z0 = ref::random_vector(2 * h, rng);
        const Point z1 = p.block_minimize(z0, 0);
        CHECK((z1.head(h) - c).norm() < 1e-14);
        CHECK((z1.tail(h) - z0.tail(h)).norm() == 0.0);
        const Point z2 = p.block_minimize(z1, 1);
        CHECK(p.monitor_value(z2) < 1e-28);
        CHECK_FALSE(p.singular_fallback());
    }
    SUBCASE("block gradient vanishes and the value matches a dense solve") {
        const auto gen = generate_quadratic(20, 100, 10, 5, 3);
        const auto p = gen.split();
        const auto q = gen.assembled();
        std::mt19937_64 rng(2);
        for (int t = 0; t < 5; ++t) {
            const Point z = ref::random_vector(20, rng);
            for (std::size_t blk = 0; blk < 2; ++blk) {
                const Point zb = p.block_minimize(z, blk);
                const Vector g = p.monitor(zb).second;
                const Vector g_in = p.monitor(z).second;
                CHECK(std::sqrt(p.partition()->block_norm_sq(g, blk)) <= 1e-8 * (1 + g_in.norm()));
                // Dense oracle: minimize ||W z - b||^2 over the block with a normal-equation solve.
                const Matrix Wb = blk == 0 ? Matrix(gen.W.leftCols(10)) : Matrix(gen.W.rightCols(10));
                const Matrix Wo = blk == 0 ? Matrix(gen.W.rightCols(10)) : Matrix(gen.W.leftCols(10));
                const Vector other = blk == 0 ? Vector(z.tail(10)) : Vector(z.head(10));
                const Vector rhs = gen.b - Wo * other;
                const Vector sol = (Wb.transpose() * Wb).ldlt().solve(Wb.transpose() * rhs);
                const double dense = (Wb * sol - rhs).squaredNorm();
                CHECK(p.monitor_value(zb) == doctest::Approx(dense).epsilon(1e-9));
                CHECK(q.monitor_value(zb) == doctest::Approx(dense).epsilon(1e-9));
            }
        }
    }
    SUBCASE("singular normal matrix falls back to a least-norm solve") {
        const int h = 2;
        const SplitQuadraticProblem p(Matrix::Zero(h, h), Matrix::Identity(h, h), Matrix::Zero(h, h),
                                      Matrix::Identity(h, h), Vector::Ones(h), Vector::Ones(h));
        CHECK(p.singular_fallback());
        const Point z = p.block_minimize(Vector::Ones(2 * h), 0);
        CHECK(z.head(h).norm() < 1e-12);
    }
}

TEST_CASE("split and assembled forms agree") {
    const auto gen = generate_quadratic(16, 40, 4, 8, 11);
    const auto p = gen.split();
    const auto q = gen.assembled();
    CHECK(p.assembled_W().isApprox(gen.W, 0.0));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Point z = ref::random_vector(16, rng, 3.0);
        const auto [fp, gp] = p.monitor(z);
        const auto [fq, gq] = q.monitor(z);
        CHECK(std::abs(fp - fq) <= 1e-10 * std::max(1.0, std::abs(fq)));
        CHECK(ref::rel_err(gp, gq) <= 1e-10);
    }
    for (int t = 0; t < 20; ++t) {
        const Point z = ref::random_vector(16, rng);
        CHECK(ref::rel_err(finite_diff_gradient(p, z), p.gradient(z)) < 1e-5);
    }
    CHECK(*p.known_L() == doctest::Approx(*q.known_L()).epsilon(1e-10));
}

TEST_CASE("problem files round-trip") {
    const auto gen = generate_quadratic(8, 20, 4, 4, 2);
    for (const AnyProblem& prob : {AnyProblem(gen.assembled()), AnyProblem(gen.split())}) {
        std::stringstream ss;
        std::visit([&](const auto& p) { write_problem(ss, p); }, prob);
        const AnyProblem back = read_problem(ss);
        REQUIRE(back.index() == prob.index());
        const Point z = Vector::LinSpaced(8, -1, 1);
        const double a = std::visit([&](const auto& p) { return p.monitor_value(z); }, prob);
        const double b = std::visit([&](const auto& p) { return p.monitor_value(z); }, back);
        CHECK(a == b);
    }
    std::stringstream bad("quadratic\n2 2\n1 0\n");
    CHECK_THROWS_AS(read_problem(bad), Error);
    std::stringstream unknown("cubic\n");
    CHECK_THROWS_AS(read_problem(unknown), Error);
}
