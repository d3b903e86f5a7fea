#pragma once

// Internal helpers shared by the line-search methods.

#include "altmin/errors.hpp"
#include "altmin/oracle.hpp"
#include "altmin/trace.hpp"

#include <cmath>
#include <optional>

namespace altmin::detail {

enum class DecreaseVerdict { Proceed, Converged, Stalled };

/// Classifies the decrease delta = f(y) - f(x_next). Values at or below the
/// floating-point noise floor of f count as ties: converged if the gradient
/// is under the threshold, stalled if even the first-order predicted decrease
/// ||g||^2 / (2 L_hat) is unobservable at this magnitude of f, DegenerateStep
/// otherwise.
inline DecreaseVerdict classify_decrease(double delta, double f_y, double grad_norm_sq, double grad_threshold,
                                         std::optional<double> L_hat_prev) {
    const double floor = decrease_noise_floor(f_y);
    if (delta > floor) return DecreaseVerdict::Proceed;
    if (grad_norm_sq <= grad_threshold * grad_threshold) return DecreaseVerdict::Converged;
    if (L_hat_prev && grad_norm_sq / (2.0 * *L_hat_prev) <= 1e3 * floor) return DecreaseVerdict::Stalled;
    raise(ErrorCode::DegenerateStep, "no decrease at a non-negligible gradient");
}

inline TraceRecord initial_record(const Oracle& oracle, double f0, double g0_sq) {
    TraceRecord r;
    r.k = 0;
    r.f_val = f0;
    r.grad_norm_sq = g0_sq;
    r.A_k = 0.0;
    r.a_k = 0.0;
    r.tau_k = 1.0;
    r.calls = oracle.counts();
    return r;
}

inline bool budget_exhausted(const Oracle& oracle, const StoppingRule& stop) {
    return stop.max_grad_equiv > 0 && oracle.counts().gradient_equivalent() >= stop.max_grad_equiv;
}

}  // namespace altmin::detail
