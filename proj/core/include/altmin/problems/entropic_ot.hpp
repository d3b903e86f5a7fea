#pragma once

#include "altmin/oracle.hpp"

#include <cstdint>

namespace altmin::problems {

/// Dual of entropy-regularized discrete optimal transport
///   f(u, v) = gamma (ln 1^T B(u, v) 1 - <u, r> - <v, c>),
///   B_ij = exp(u_i + v_j - C_ij / gamma),
/// over the stacked point (u, v) in R^{2N}. All exponentials are evaluated in
/// the log domain with a max shift. f is constant along (1, -1).
class EntropicOTDual : public Oracle {
public:
    /// Throws InvalidArgument unless C is square, nonnegative and finite,
    /// gamma > 0, and r, c are positive (>= 1e-300) and sum to 1 within 1e-12.
    EntropicOTDual(Matrix cost, Vector r, Vector c, double gamma);

    int size() const noexcept { return static_cast<int>(r_.size()); }
    int dim() const override { return 2 * size(); }
    const BlockPartition* partition() const override { return &partition_; }
    bool has_block_minimizer() const override { return true; }
    /// 2 gamma: the Hessian is gamma times a covariance of vectors of norm sqrt(2).
    std::optional<double> known_L() const override { return 2.0 * gamma_; }

    const Matrix& cost() const noexcept { return cost_; }
    const Vector& r() const noexcept { return r_; }
    const Vector& c() const noexcept { return c_; }
    double gamma() const noexcept { return gamma_; }

    Point stack(const Vector& u, const Vector& v) const;
    Vector u_of(const Point& p) const { return p.head(size()); }
    Vector v_of(const Point& p) const { return p.tail(size()); }

    /// Shifts (u, v) along (1, -1) so that mean(u) == mean(v); f and its
    /// gradient are unchanged.
    Point canonicalize(const Point& p) const;

protected:
    double do_value(const Point& p) const override;
    Vector do_gradient(const Point& p) const override;
    std::pair<double, Vector> do_value_and_gradient(const Point& p) const override;
    /// Block 0: u_i = ln r_i - ln sum_j exp(v_j - C_ij / gamma); block 1 symmetric.
    Point do_block_minimize(const Point& p, std::size_t block) const override;

private:
    Matrix cost_;
    Matrix neg_cost_over_gamma_;
    Vector r_, c_;
    Vector log_r_, log_c_;
    double gamma_;
    BlockPartition partition_;
};

/// Squared distances on a uniform 1-D grid of N points, normalized to max 1.
Matrix grid_cost_1d(int N);

/// Smoothed random histogram on N bins (strictly positive, sums to 1).
Vector smoothed_histogram(int N, std::uint64_t seed);

/// Default benchmark instance: grid cost, smoothed histograms from `seed`.
EntropicOTDual make_desk_eot(int N, double gamma, std::uint64_t seed);

/// Random cost in [0, 1) and random positive marginals; for tests.
EntropicOTDual make_random_eot(int N, double gamma, std::uint64_t seed);

}  // namespace altmin::problems
