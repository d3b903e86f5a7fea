#include "altmin/coefficients.hpp"

#include "altmin/errors.hpp"

#include <cmath>
#include <limits>

namespace altmin {
namespace {

// Sign of the residual multiplied through by 2 (A + a)(tau + mu a) > 0.
double scaled_residual(const SufficientDecreaseInput& in, double a) {
    return a * a * in.grad_norm_sq - in.mu * in.tau * a * in.vy_dist_sq -
           2.0 * in.delta * (in.A + a) * (in.tau + in.mu * a);
}

double closed_form_mu_zero(const SufficientDecreaseInput& in) {
    const double dt = in.delta * in.tau;
    return (dt + std::sqrt(dt * dt + 2.0 * dt * in.A * in.grad_norm_sq)) / in.grad_norm_sq;
}

constexpr int kBracketSteps = 60;
constexpr int kBisectionSteps = 200;

}  // namespace

double solve_coefficient_known_L(double A, double tau, double mu, double Ln) {
    if (!(A >= 0.0) || !(tau > 0.0) || !(mu >= 0.0))
        raise(ErrorCode::InvalidArgument, "coefficient equation needs A >= 0, tau > 0, mu >= 0");
    if (!(Ln > mu)) raise(ErrorCode::InvalidCoefficient, "L n must exceed mu");
    const double q = Ln - mu;
    const double p = tau + mu * A;
    return (p + std::sqrt(p * p + 4.0 * q * A * tau)) / (2.0 * q);
}

double sufficient_decrease_residual(const SufficientDecreaseInput& in, double a) {
    const double denom = 2.0 * (in.A + a) * (in.tau + in.mu * a);
    return (a * a * in.grad_norm_sq - in.mu * in.tau * a * in.vy_dist_sq) / denom - in.delta;
}

double solve_sufficient_decrease(const SufficientDecreaseInput& in) {
    if (!(in.grad_norm_sq > 0.0)) raise(ErrorCode::InvalidArgument, "gradient norm must be positive");
    if (!(in.A >= 0.0) || !(in.tau > 0.0) || !(in.mu >= 0.0) || !(in.vy_dist_sq >= 0.0))
        raise(ErrorCode::InvalidArgument, "invalid sufficient-decrease inputs");
    if (!(in.delta > 0.0)) raise(ErrorCode::DegenerateStep, "no decrease: the coefficient equation has no positive root");

    const double warm = closed_form_mu_zero(in);
    if (in.mu == 0.0) return warm;

    double lo = 0.0;
    double hi = 0.0;
    if (scaled_residual(in, warm) > 0.0) {
        hi = warm;
        lo = warm;
        bool found = false;
        for (int i = 0; i < kBracketSteps; ++i) {
            lo *= 0.5;
            if (scaled_residual(in, lo) <= 0.0) {
                found = true;
                break;
            }
            hi = lo;
        }
        if (!found) raise(ErrorCode::NoRoot, "sufficient-decrease equation: no sign change below warm start");
    } else {
        lo = warm;
        hi = warm;
        bool found = false;
        for (int i = 0; i < kBracketSteps; ++i) {
            hi *= 2.0;
            if (scaled_residual(in, hi) > 0.0) {
                found = true;
                break;
            }
            lo = hi;
        }
        if (!found) raise(ErrorCode::NoRoot, "sufficient-decrease equation: no sign change above warm start");
    }

    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (scaled_residual(in, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return std::abs(sufficient_decrease_residual(in, lo)) <= std::abs(sufficient_decrease_residual(in, hi)) ? lo : hi;
}

double local_lipschitz_estimate(double A, double a_next) {
    if (!(a_next > 0.0)) raise(ErrorCode::InvalidArgument, "coefficient must be positive");
    return (A + a_next) / (a_next * a_next);
}

}  // namespace altmin
