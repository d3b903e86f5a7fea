#include "altmin/problems/split_quadratic.hpp"

#include "altmin/errors.hpp"

#include <iostream>

namespace altmin::problems {

SplitQuadraticProblem::SplitQuadraticProblem(Matrix A, Matrix B, Matrix C, Matrix D, Vector c, Vector d)
    : half_(static_cast<int>(A.rows())),
      A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      D_(std::move(D)),
      c_(std::move(c)),
      d_(std::move(d)),
      partition_(BlockPartition::contiguous({std::max(half_, 1), std::max(half_, 1)})) {
    const auto square = [this](const Matrix& M) { return M.rows() == half_ && M.cols() == half_; };
    if (half_ == 0 || !square(A_) || !square(B_) || !square(C_) || !square(D_) || c_.size() != half_ ||
        d_.size() != half_)
        raise(ErrorCode::DimensionMismatch, "split quadratic blocks must all be h x h with h-vectors c, d");

    const Matrix nx = A_.transpose() * A_ + C_.transpose() * C_;
    const Matrix ny = B_.transpose() * B_ + D_.transpose() * D_;
    x_llt_.compute(nx);
    y_llt_.compute(ny);
    x_singular_ = x_llt_.info() != Eigen::Success;
    y_singular_ = y_llt_.info() != Eigen::Success;
    if (x_singular_) x_cod_.compute(nx);
    if (y_singular_) y_cod_.compute(ny);
    if (singular_fallback())
        std::cerr << "warning: " << to_string(ErrorCode::SingularBlock)
                  << ": block normal matrix is singular, using least-norm block solves\n";

    const Matrix W = assembled_W();
    L_ = gradient_lipschitz_constant(W);
    mu_ = strong_convexity_constant(W).hessian_value;
}

SplitQuadraticProblem SplitQuadraticProblem::from_assembled(const Matrix& W, const Vector& b) {
    if (W.rows() != W.cols() || W.rows() != b.size() || W.rows() % 2 != 0)
        raise(ErrorCode::DimensionMismatch, "assembled W must be square with even dimension matching b");
    const Eigen::Index h = W.rows() / 2;
    return SplitQuadraticProblem(W.topLeftCorner(h, h), W.topRightCorner(h, h), W.bottomLeftCorner(h, h),
                                 W.bottomRightCorner(h, h), b.head(h), b.tail(h));
}

Matrix SplitQuadraticProblem::assembled_W() const {
    Matrix W(2 * half_, 2 * half_);
    W << A_, B_, C_, D_;
    return W;
}

Vector SplitQuadraticProblem::assembled_b() const {
    Vector b(2 * half_);
    b << c_, d_;
    return b;
}

double SplitQuadraticProblem::do_value(const Point& z) const {
    const auto x = z.head(half_);
    const auto y = z.tail(half_);
    return (A_ * x + B_ * y - c_).squaredNorm() + (C_ * x + D_ * y - d_).squaredNorm();
}

Vector SplitQuadraticProblem::do_gradient(const Point& z) const { return do_value_and_gradient(z).second; }

std::pair<double, Vector> SplitQuadraticProblem::do_value_and_gradient(const Point& z) const {
    const auto x = z.head(half_);
    const auto y = z.tail(half_);
    const Vector r1 = A_ * x + B_ * y - c_;
    const Vector r2 = C_ * x + D_ * y - d_;
    Vector g(2 * half_);
    g.head(half_) = 2.0 * (A_.transpose() * r1 + C_.transpose() * r2);
    g.tail(half_) = 2.0 * (B_.transpose() * r1 + D_.transpose() * r2);
    return {r1.squaredNorm() + r2.squaredNorm(), std::move(g)};
}

Point SplitQuadraticProblem::do_block_minimize(const Point& z, std::size_t block) const {
    Point out = z;
    const auto x = z.head(half_);
    const auto y = z.tail(half_);
    if (block == 0) {
        const Vector rhs = A_.transpose() * (c_ - B_ * y) + C_.transpose() * (d_ - D_ * y);
        out.head(half_) = x_singular_ ? Vector(x_cod_.solve(rhs)) : Vector(x_llt_.solve(rhs));
    } else {
        const Vector rhs = B_.transpose() * (c_ - A_ * x) + D_.transpose() * (d_ - C_ * x);
        out.tail(half_) = y_singular_ ? Vector(y_cod_.solve(rhs)) : Vector(y_llt_.solve(rhs));
    }
    return out;
}

}  // namespace altmin::problems
