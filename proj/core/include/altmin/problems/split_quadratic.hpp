#pragma once

#include "altmin/oracle.hpp"
#include "altmin/problems/quadratic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace altmin::problems {

/// f(x, y) = ||A x + B y - c||^2 + ||C x + D y - d||^2 over z = (x, y), with
/// exact minimizers for the x block (0) and the y block (1):
///   x = (A^T A + C^T C)^{-1} [A^T (c - B y) + C^T (d - D y)]
///   y = (B^T B + D^T D)^{-1} [B^T (c - A x) + D^T (d - C x)]
class SplitQuadraticProblem : public Oracle {
public:
    /// Factorizations are computed once here. A singular normal matrix falls
    /// back to a least-norm solve (reported by singular_fallback()).
    SplitQuadraticProblem(Matrix A, Matrix B, Matrix C, Matrix D, Vector c, Vector d);

    /// Splits W and b into equal halves.
    static SplitQuadraticProblem from_assembled(const Matrix& W, const Vector& b);

    int dim() const override { return 2 * half_; }
    const BlockPartition* partition() const override { return &partition_; }
    bool has_block_minimizer() const override { return true; }
    std::optional<double> known_L() const override { return L_; }
    std::optional<double> known_mu() const override { return mu_; }

    Matrix assembled_W() const;
    Vector assembled_b() const;
    QuadraticProblem assembled() const { return QuadraticProblem(assembled_W(), assembled_b()); }

    bool singular_fallback() const noexcept { return x_singular_ || y_singular_; }

    const Matrix& A() const noexcept { return A_; }
    const Matrix& B() const noexcept { return B_; }
    const Matrix& C() const noexcept { return C_; }
    const Matrix& D() const noexcept { return D_; }
    const Vector& c() const noexcept { return c_; }
    const Vector& d() const noexcept { return d_; }

protected:
    double do_value(const Point& z) const override;
    Vector do_gradient(const Point& z) const override;
    std::pair<double, Vector> do_value_and_gradient(const Point& z) const override;
    Point do_block_minimize(const Point& z, std::size_t block) const override;

private:
    int half_;
    Matrix A_, B_, C_, D_;
    Vector c_, d_;
    BlockPartition partition_;
    Eigen::LLT<Matrix> x_llt_, y_llt_;
    Eigen::CompleteOrthogonalDecomposition<Matrix> x_cod_, y_cod_;
    bool x_singular_ = false;
    bool y_singular_ = false;
    double L_ = 0.0;
    double mu_ = 0.0;
};

}  // namespace altmin::problems
