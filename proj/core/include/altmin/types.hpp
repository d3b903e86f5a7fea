#pragma once

#include <Eigen/Dense>

#include <functional>

namespace altmin {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Iterate type for x, y, v and z. All norms are Euclidean.
using Point = Vector;

using ScalarFunction = std::function<double(double)>;

bool all_finite(const Vector& x) noexcept;

}  // namespace altmin
