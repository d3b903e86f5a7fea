#pragma once

#include "altmin/problems/quadratic.hpp"
#include "altmin/problems/split_quadratic.hpp"

#include <cstdint>

namespace altmin::problems {

/// Symmetric positive definite W = [[A, B], [B^T, D]] with prescribed
/// condition numbers of W, A and D, and b = W x* for a random x* (so f* = 0).
struct GeneratedQuadratic {
    Matrix W;
    Vector b;
    Point x_star;
    double kappa = 0.0;   ///< achieved cond(W)
    double kappa1 = 0.0;  ///< achieved cond(A)
    double kappa2 = 0.0;  ///< achieved cond(D)
    double coupling = 0.0;

    QuadraticProblem assembled() const { return QuadraticProblem(W, b); }
    SplitQuadraticProblem split() const { return SplitQuadraticProblem::from_assembled(W, b); }
};

/// A and D get log-spaced spectra on [1, kappa1] and [1, kappa2] conjugated by
/// random orthogonal matrices; the off-diagonal block t G (G Gaussian) is
/// scaled by bisection on t until cond(W) = kappa. Deterministic for a seed.
/// Requires dim even and kappa >= max(kappa1, kappa2) >= 1. Throws
/// GenerationFailure if any achieved condition number is off by more than 5%.
GeneratedQuadratic generate_quadratic(int dim, double kappa, double kappa1, double kappa2,
                                      std::uint64_t seed);

/// Condition number |lambda|_max / |lambda|_min of a symmetric matrix.
double symmetric_condition_number(const Matrix& S);

}  // namespace altmin::problems
