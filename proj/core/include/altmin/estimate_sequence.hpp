#pragma once

#include "altmin/types.hpp"

namespace altmin {

/// Accumulated lower model
///   psi_k(x) = 1/2 ||x - x0||^2
///            + sum_i a_{i+1} { f(y^i) + <g_i, x - y^i> + mu/2 ||x - y^i||^2 }.
///
/// Stored as three accumulators (weights, linear term, constant term), so
/// psi_k is evaluable anywhere in O(m) without keeping history.
class EstimateSequence {
public:
    EstimateSequence() = default;
    EstimateSequence(Point x0, double mu);

    /// Appends a_{k+1} { f(y) + <g, x - y> + mu/2 ||x - y||^2 }.
    void add(double a, double f_y, const Vector& g, const Point& y);

    double value(const Point& x) const;
    /// Upper bound on the magnitude of the terms summed in value(x); used to
    /// scale roundoff slack.
    double value_scale(const Point& x) const;

    /// argmin psi_k = (x0 - sum a (g - mu y)) / tau_k.
    Point minimizer() const;

    double weight() const noexcept { return weight_; }  ///< A_k
    double tau() const noexcept { return 1.0 + mu_ * weight_; }
    double mu() const noexcept { return mu_; }
    const Point& origin() const noexcept { return x0_; }

private:
    Point x0_;
    double mu_ = 0.0;
    double weight_ = 0.0;
    Vector linear_;
    double constant_ = 0.0;
    double magnitude_ = 0.0;
};

/// 1e-8 relative slack for A_k f(x^k) <= psi_k(v^k) comparisons.
double invariant_slack(double A_f, double psi_min);

}  // namespace altmin
