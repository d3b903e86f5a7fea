#pragma once

namespace altmin {

/// Positive root a of a^2 / ((A + a)(tau + mu a)) = 1 / Ln.
///
/// Equivalent to (Ln - mu) a^2 - (tau + mu A) a - A tau = 0. Throws
/// InvalidCoefficient when Ln <= mu.
double solve_coefficient_known_L(double A, double tau, double mu, double Ln);

struct SufficientDecreaseInput {
    double A = 0.0;
    double tau = 1.0;
    double mu = 0.0;
    double grad_norm_sq = 0.0;
    double vy_dist_sq = 0.0;  ///< ||v - y||^2
    double delta = 0.0;       ///< f(y) - f(x_next)
};

/// Positive root a of
///   a^2 g2 / (2 (A + a)(tau + mu a)) - mu tau a d2 / (2 (A + a)(tau + mu a)) = delta.
///
/// mu == 0 uses the closed form; mu > 0 brackets a sign change starting from
/// the mu == 0 root and bisects. Throws DegenerateStep if delta <= 0 and
/// NoRoot if no sign change is found within the doubling budget.
double solve_sufficient_decrease(const SufficientDecreaseInput& in);

/// Left-hand side minus delta; zero at the root returned above.
double sufficient_decrease_residual(const SufficientDecreaseInput& in, double a);

/// (A + a) / a^2: the curvature estimate implied by the coefficient equation.
double local_lipschitz_estimate(double A, double a_next);

}  // namespace altmin
