#pragma once

#include "altmin/oracle.hpp"

#include <optional>

namespace altmin::problems {

/// f(z) = ||W z - b||^2 with symmetric W.
class QuadraticProblem : public Oracle {
public:
    /// Throws DimensionMismatch on shape errors and InvalidArgument if W is
    /// not symmetric to 1e-12 (relative to its largest entry).
    QuadraticProblem(Matrix W, Vector b);

    int dim() const override { return static_cast<int>(b_.size()); }
    std::optional<double> known_L() const override { return L_; }
    std::optional<double> known_mu() const override { return mu_; }

    const Matrix& W() const noexcept { return W_; }
    const Vector& b() const noexcept { return b_; }

    /// Solution of W z = b (least-squares solution if W is singular).
    Point minimizer() const;

protected:
    double do_value(const Point& z) const override;
    Vector do_gradient(const Point& z) const override;
    std::pair<double, Vector> do_value_and_gradient(const Point& z) const override;

private:
    Matrix W_;
    Vector b_;
    double L_ = 0.0;
    double mu_ = 0.0;
};

/// Two readings of the strong-convexity constant of ||W z - b||^2.
struct StrongConvexity {
    double sqrt_lambda_min = 0.0;  ///< sqrt(lambda_min(W^T W))
    double hessian_value = 0.0;    ///< 2 lambda_min(W^T W), the modulus of the Hessian 2 W^T W
};

StrongConvexity strong_convexity_constant(const Matrix& W);

/// 2 lambda_max(W^T W).
double gradient_lipschitz_constant(const Matrix& W);

}  // namespace altmin::problems
