#include "altmin/problems/quadratic.hpp"

#include "altmin/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace altmin::problems {
namespace {

Eigen::VectorXd gram_eigenvalues(const Matrix& W) {
    const Matrix G = W.transpose() * W;
    return Eigen::SelfAdjointEigenSolver<Matrix>(G, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace

QuadraticProblem::QuadraticProblem(Matrix W, Vector b) : W_(std::move(W)), b_(std::move(b)) {
    if (W_.rows() != W_.cols() || W_.rows() != b_.size() || b_.size() == 0)
        raise(ErrorCode::DimensionMismatch, "W must be square and match b");
    const double scale = std::max(1.0, W_.cwiseAbs().maxCoeff());
    if ((W_ - W_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        raise(ErrorCode::InvalidArgument, "W must be symmetric");
    const Eigen::VectorXd ev = gram_eigenvalues(W_);
    L_ = 2.0 * ev.maxCoeff();
    mu_ = 2.0 * std::max(0.0, ev.minCoeff());
}

double QuadraticProblem::do_value(const Point& z) const { return (W_ * z - b_).squaredNorm(); }

Vector QuadraticProblem::do_gradient(const Point& z) const { return 2.0 * (W_.transpose() * (W_ * z - b_)); }

std::pair<double, Vector> QuadraticProblem::do_value_and_gradient(const Point& z) const {
    const Vector r = W_ * z - b_;
    return {r.squaredNorm(), 2.0 * (W_.transpose() * r)};
}

Point QuadraticProblem::minimizer() const { return W_.completeOrthogonalDecomposition().solve(b_); }

StrongConvexity strong_convexity_constant(const Matrix& W) {
    const double lmin = std::max(0.0, gram_eigenvalues(W).minCoeff());
    return {std::sqrt(lmin), 2.0 * lmin};
}

double gradient_lipschitz_constant(const Matrix& W) { return 2.0 * gram_eigenvalues(W).maxCoeff(); }

}  // namespace altmin::problems
