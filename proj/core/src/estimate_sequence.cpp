#include "altmin/estimate_sequence.hpp"

#include <algorithm>
#include <cmath>

namespace altmin {

EstimateSequence::EstimateSequence(Point x0, double mu)
    : x0_(std::move(x0)), mu_(mu), linear_(Vector::Zero(x0_.size())) {}

void EstimateSequence::add(double a, double f_y, const Vector& g, const Point& y) {
    const double gy = g.dot(y);
    const double yy = y.squaredNorm();
    weight_ += a;
    linear_ += a * (g - mu_ * y);
    constant_ += a * (f_y - gy + 0.5 * mu_ * yy);
    magnitude_ += a * (std::abs(f_y) + std::abs(gy) + 0.5 * mu_ * yy);
}

double EstimateSequence::value(const Point& x) const {
    return 0.5 * (x - x0_).squaredNorm() + 0.5 * mu_ * weight_ * x.squaredNorm() + linear_.dot(x) + constant_;
}

double EstimateSequence::value_scale(const Point& x) const {
    return 0.5 * (x - x0_).squaredNorm() + 0.5 * mu_ * weight_ * x.squaredNorm() + std::abs(linear_.dot(x)) +
           magnitude_;
}

Point EstimateSequence::minimizer() const { return (x0_ - linear_) / tau(); }

double invariant_slack(double A_f, double psi_min) {
    return 1e-8 * std::max({1.0, std::abs(A_f), std::abs(psi_min)});
}

}  // namespace altmin
