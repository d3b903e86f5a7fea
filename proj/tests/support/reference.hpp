#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the library's solvers.

#include "altmin/oracle.hpp"
#include "altmin/types.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace ref {

using altmin::Matrix;
using altmin::Vector;

/// argmin of phi over {lo, lo + step, ..., hi}.
inline std::pair<double, double> grid_scan(const std::function<double(double)>& phi, double lo, double hi,
                                           double step) {
    double best_t = lo, best = phi(lo);
    const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
    for (long i = 1; i <= n; ++i) {
        const double t = lo + static_cast<double>(i) * step;
        const double v = phi(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    return {best_t, best};
}

/// Larger root of p a^2 + q a + r = 0 by the textbook formula.
inline double quadratic_root(double p, double q, double r) { return (-q + std::sqrt(q * q - 4 * p * r)) / (2 * p); }

/// Classical Sinkhorn matrix scaling on K = exp(-C / gamma): alternately
/// a = r ./ (K b), b = c ./ (K^T a). Returns the scalings after every half
/// sweep, starting from b = exp(v0), a = exp(u0).
struct ScalingHistory {
    std::vector<Vector> a, b;
};

inline ScalingHistory matrix_scaling(const Matrix& C, const Vector& r, const Vector& c, double gamma,
                                     const Vector& u0, const Vector& v0, int half_sweeps) {
    const Matrix K = (-C / gamma).array().exp().matrix();
    Vector a = u0.array().exp().matrix();
    Vector b = v0.array().exp().matrix();
    ScalingHistory h;
    for (int s = 0; s < half_sweeps; ++s) {
        if (s % 2 == 0)
            a = r.cwiseQuotient(K * b);
        else
            b = c.cwiseQuotient(K.transpose() * a);
        h.a.push_back(a);
        h.b.push_back(b);
    }
    return h;
}

/// Smallest eigenvalue of a symmetric positive semidefinite H by power
/// iteration on (sigma I - H), sigma an upper bound from the largest power
/// iterate.
inline double min_eigenvalue_power(const Matrix& H, int iters = 20000) {
    const auto n = H.rows();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    auto power = [&](const Matrix& M) {
        Vector x(n);
        for (int i = 0; i < n; ++i) x[i] = g(rng);
        x.normalize();
        double lambda = 0.0;
        for (int k = 0; k < iters; ++k) {
            Vector y = M * x;
            const double next = x.dot(y);
            x = y.normalized();
            if (k > 50 && std::abs(next - lambda) <= 1e-15 * std::abs(next)) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        return lambda;
    };
    const double top = power(H);
    const double sigma = 1.01 * top;
    const Matrix shifted = sigma * Matrix::Identity(n, n) - H;
    return sigma - power(shifted);
}

/// Naive EOT dual value without any stabilization.
inline double eot_naive(const Matrix& C, const Vector& r, const Vector& c, double gamma, const Vector& u,
                        const Vector& v) {
    double s = 0.0;
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j) s += std::exp(u[i] + v[j] - C(i, j) / gamma);
    return gamma * (std::log(s) - u.dot(r) - v.dot(c));
}

/// Minimizer of psi(x) = 1/2||x - x0||^2 + sum_i a_i (f_i + <g_i, x - y_i> + mu/2 ||x - y_i||^2)
/// by a dense solve of its normal equations.
inline Vector psi_minimizer_dense(const Vector& x0, double mu, const std::vector<double>& a,
                                  const std::vector<Vector>& g, const std::vector<Vector>& y) {
    const auto m = x0.size();
    Matrix H = Matrix::Identity(m, m);
    Vector rhs = x0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        H += a[i] * mu * Matrix::Identity(m, m);
        rhs += a[i] * (mu * y[i] - g[i]);
    }
    return H.ldlt().solve(rhs);
}

inline Vector random_vector(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = scale * g(rng);
    return v;
}

inline Matrix random_matrix(int r, int c, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix M(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M(i, j) = g(rng);
    return M;
}

inline double rel_err(const Vector& a, const Vector& b) { return (a - b).norm() / std::max(1e-300, b.norm()); }

/// f(z) = 1/2 z^T diag(d) z with exact gradient.
inline altmin::FunctionOracle diag_quadratic(const Vector& d) {
    return altmin::FunctionOracle(
        static_cast<int>(d.size()), [d](const Vector& z) { return 0.5 * z.dot(d.cwiseProduct(z)); },
        [d](const Vector& z) -> Vector { return d.cwiseProduct(z); }, d.maxCoeff(), d.minCoeff());
}

}  // namespace ref
