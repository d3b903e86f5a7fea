#include "altmin/problems/generators.hpp"

#include "altmin/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <random>

namespace altmin::problems {
namespace {

Matrix gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix M(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) M(i, j) = normal(rng);
    return M;
}

Matrix random_orthogonal(int n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(n, n, rng));
    Matrix Q = qr.householderQ();
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (R(j, j) < 0.0) Q.col(j) *= -1.0;
    return Q;
}

// Q diag(lambda) Q^T with lambda log-spaced on [1, kappa].
Matrix spd_with_condition(int n, double kappa, std::mt19937_64& rng) {
    Vector lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = n == 1 ? 1.0 : std::pow(kappa, static_cast<double>(i) / (n - 1));
    const Matrix Q = random_orthogonal(n, rng);
    Matrix S = Q * lambda.asDiagonal() * Q.transpose();
    return 0.5 * (S + S.transpose());
}

Vector symmetric_eigenvalues(const Matrix& S) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(S, Eigen::EigenvaluesOnly).eigenvalues();
}

Matrix assemble(const Matrix& A, const Matrix& G, const Matrix& D, double t) {
    const Eigen::Index h = A.rows();
    Matrix W(2 * h, 2 * h);
    W << A, t * G, t * G.transpose(), D;
    return W;
}

bool within(double achieved, double target) { return std::abs(achieved - target) <= 0.05 * target; }

}  // namespace

double symmetric_condition_number(const Matrix& S) {
    const Vector ev = symmetric_eigenvalues(S).cwiseAbs();
    return ev.maxCoeff() / ev.minCoeff();
}

GeneratedQuadratic generate_quadratic(int dim, double kappa, double kappa1, double kappa2, std::uint64_t seed) {
    if (dim <= 0 || dim % 2 != 0) raise(ErrorCode::InvalidArgument, "dimension must be positive and even");
    if (!(kappa1 >= 1.0 && kappa2 >= 1.0 && kappa >= std::max(kappa1, kappa2)))
        raise(ErrorCode::InvalidArgument, "need kappa >= max(kappa1, kappa2) >= 1");
    const int h = dim / 2;
    constexpr int kAttempts = 5;
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        GeneratedQuadratic out;
        const Matrix A = spd_with_condition(h, kappa1, rng);
        const Matrix D = spd_with_condition(h, kappa2, rng);
        Matrix G = gaussian(h, h, rng);
        G /= std::sqrt(symmetric_eigenvalues(G.transpose() * G).maxCoeff());

        // lambda_max(W(t)) - kappa lambda_min(W(t)) increases with |t|.
        const auto excess = [&](double t) {
            const Vector ev = symmetric_eigenvalues(assemble(A, G, D, t));
            return ev.maxCoeff() - kappa * ev.minCoeff();
        };
        double t = 0.0;
        if (excess(0.0) < 0.0) {
            double lo = 0.0;
            double hi = 1.0;
            int guard = 0;
            while (excess(hi) < 0.0 && guard++ < 60) {
                lo = hi;
                hi *= 2.0;
            }
            for (int i = 0; i < 100 && hi - lo > 1e-15 * hi; ++i) {
                const double mid = 0.5 * (lo + hi);
                (excess(mid) < 0.0 ? lo : hi) = mid;
            }
            t = lo;
        }

        out.W = assemble(A, G, D, t);
        out.coupling = t;
        out.kappa = symmetric_condition_number(out.W);
        out.kappa1 = symmetric_condition_number(A);
        out.kappa2 = symmetric_condition_number(D);
        if (symmetric_eigenvalues(out.W).minCoeff() <= 0.0) continue;
        if (!within(out.kappa, kappa) || !within(out.kappa1, kappa1) || !within(out.kappa2, kappa2)) continue;

        out.x_star = gaussian(dim, 1, rng).col(0) / std::sqrt(static_cast<double>(dim));
        out.b = out.W * out.x_star;
        return out;
    }
    raise(ErrorCode::GenerationFailure, "could not reach the requested condition numbers within 5%");
}

}  // namespace altmin::problems
