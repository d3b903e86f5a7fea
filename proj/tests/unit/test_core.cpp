#include "reference.hpp"

#include "altmin/errors.hpp"
#include "altmin/estimate_sequence.hpp"
#include "altmin/finite_diff.hpp"
#include "altmin/oracle.hpp"
#include "altmin/partition.hpp"
#include "altmin/problems/entropic_ot.hpp"
#include "altmin/problems/quadratic.hpp"
#include "altmin/trace.hpp"

#include <doctest.h>

#include <limits>

using namespace altmin;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an altmin::Error");
    return ErrorCode::Unsupported;
}

FunctionOracle squared_norm(int dim) {
    return FunctionOracle(
        dim, [](const Vector& z) { return z.squaredNorm(); }, [](const Vector& z) -> Vector { return 2 * z; }, 2.0,
        2.0);
}

}  // namespace

TEST_CASE("partition validates its cover") {
    const auto p = BlockPartition::contiguous({2, 3});
    CHECK(p.size() == 2);
    CHECK(p.total_dim() == 5);
    CHECK(p.block(1) == std::vector<int>{2, 3, 4});
    Vector g(5);
    g << 1, 2, 3, 4, 5;
    CHECK(p.block_norm_sq(g, 0) == doctest::Approx(5.0));
    CHECK(p.block_norm_sq(g, 1) == doctest::Approx(50.0));

    CHECK(code_of([] { BlockPartition({{0, 1}, {1, 2}}, 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { BlockPartition({{0}, {2}}, 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { BlockPartition({{0, 1, 2}, {}}, 3); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { BlockPartition({{0, 3}}, 3); }) == ErrorCode::InvalidArgument);
    CHECK(BlockPartition::single(4).size() == 1);
}

TEST_CASE("oracle counts calls and checks its inputs") {
    auto f = squared_norm(2);
    Point x(2);
    x << 1, 2;
    CHECK(f.value(x) == doctest::Approx(5.0));
    f.gradient(x);
    f.value_and_gradient(x);
    f.monitor(x);
    const auto c = f.counts();
    CHECK(c.value == 2);
    CHECK(c.gradient == 2);
    CHECK(c.monitor == 1);
    CHECK(c.gradient_equivalent() == 2);

    CHECK(code_of([&] { f.value(Point::Zero(3)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { f.block_minimize(x, 0); }) == ErrorCode::Unsupported);
    CHECK(block_count(f) == 1);

    FunctionOracle bad(
        1, [](const Vector&) { return std::numeric_limits<double>::quiet_NaN(); },
        [](const Vector& z) -> Vector { return z; });
    CHECK(code_of([&] { bad.value(Point::Zero(1)); }) == ErrorCode::NonFiniteValue);

    const FunctionOracle copy(f);
    CHECK(copy.counts().value == 0);
    f.reset_counts();
    CHECK(f.counts().gradient == 0);
}

TEST_CASE("finite differences") {
    SUBCASE("squared norm at (1, 2)") {
        auto f = squared_norm(2);
        Point x(2);
        x << 1, 2;
        const Vector g = finite_diff_gradient(f, x, 1e-5);
        CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(g[1] == doctest::Approx(4.0).epsilon(1e-9));
        CHECK(f.counts().value == 0);
        CHECK(f.counts().monitor == 4);
    }
    SUBCASE("EOT dual is stationary at the origin for C = 0 and uniform marginals") {
        const int N = 3;
        const Vector r = Vector::Constant(N, 1.0 / N);
        const problems::EntropicOTDual p(Matrix::Zero(N, N), r, r, 1.0);
        CHECK(finite_diff_gradient(p, Point::Zero(2 * N)).norm() < 1e-10);
    }
    SUBCASE("random 5-dim least squares matches 2 W^T (W z - b)") {
        std::mt19937_64 rng(3);
        Matrix M = ref::random_matrix(5, 5, rng);
        const Matrix W = 0.5 * (M + M.transpose());
        const Vector b = ref::random_vector(5, rng);
        const problems::QuadraticProblem q(W, b);
        const Point z = ref::random_vector(5, rng);
        const Vector analytic = 2 * W.transpose() * (W * z - b);
        CHECK(ref::rel_err(finite_diff_gradient(q, z), analytic) < 1e-6);
    }
}

TEST_CASE("estimate sequence minimizer matches a dense solve") {
    std::mt19937_64 rng(11);
    for (double mu : {0.0, 0.3}) {
        const int m = 6;
        const Point x0 = ref::random_vector(m, rng);
        EstimateSequence psi(x0, mu);
        std::vector<double> a;
        std::vector<Vector> g, y;
        for (int k = 0; k < 5; ++k) {
            a.push_back(0.1 + 0.2 * k);
            g.push_back(ref::random_vector(m, rng));
            y.push_back(ref::random_vector(m, rng));
            psi.add(a.back(), 1.0 + k, g.back(), y.back());
        }
        const Vector dense = ref::psi_minimizer_dense(x0, mu, a, g, y);
        CHECK(ref::rel_err(psi.minimizer(), dense) < 1e-12);
        CHECK(psi.weight() == doctest::Approx(0.1 + 0.3 + 0.5 + 0.7 + 0.9));
        CHECK(psi.tau() == doctest::Approx(1.0 + mu * psi.weight()));

        // psi is minimized at its minimizer and matches a direct evaluation.
        const Point v = psi.minimizer();
        const Point w = v + 0.01 * ref::random_vector(m, rng);
        CHECK(psi.value(v) <= psi.value(w));
        double direct = 0.5 * (w - x0).squaredNorm();
        for (std::size_t i = 0; i < a.size(); ++i)
            direct += a[i] * (1.0 + static_cast<double>(i) + g[i].dot(w - y[i]) + 0.5 * mu * (w - y[i]).squaredNorm());
        CHECK(psi.value(w) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(psi.value_scale(w) >= std::abs(psi.value(w)));
    }
}

TEST_CASE("stopping rule threshold and noise floor") {
    StoppingRule s;
    s.grad_tol_rel = 1e-3;
    s.grad_tol_abs = 1e-6;
    CHECK(s.threshold(10.0) == doctest::Approx(1e-2));
    CHECK(s.threshold(1e-5) == doctest::Approx(1e-6));
    CHECK(decrease_noise_floor(0.0) == doctest::Approx(16 * std::numeric_limits<double>::epsilon()));
    CHECK(decrease_noise_floor(-100.0) == doctest::Approx(1600 * std::numeric_limits<double>::epsilon()));
    CHECK(to_string(StopReason::Stalled) == "stalled");
}

TEST_CASE("error codes render their names") {
    const Error e(ErrorCode::NoRoot, "x");
    CHECK(e.code() == ErrorCode::NoRoot);
    CHECK(std::string(e.what()).find("NoRoot") != std::string::npos);
}
