#pragma once

#include "altmin/oracle.hpp"
#include "altmin/trace.hpp"

#include <functional>

namespace altmin {

/// Gradient descent with a backtracked curvature estimate L_t: a step
/// x - g / L_t is accepted when f(x - g/L_t) <= f(x) - ||g||^2 / (2 L_t)
/// (then L_t is halved), otherwise L_t is doubled and the step retried.
/// Stops as stalled once the required decrease is below decrease_noise_floor(f).
struct AdaptiveGdOptions {
    double grad_tol = 0.0;
    int max_iters = 1000;
    double L0 = 1.0;
    /// Extra stopping test evaluated at every iterate (including the start)
    /// with the point and its gradient.
    std::function<bool(const Point&, const Vector&)> stop_when;
    bool record_trace = true;
};

struct AdaptiveGdResult {
    Point x;
    Vector grad;        ///< gradient at x
    double f = 0.0;
    double L_estimate = 0.0;
    int iterations = 0;  ///< accepted steps
    bool stopped = false;  ///< grad_tol or stop_when fired
    /// The required decrease ||g||^2 / (2 L_t) fell below the floating-point
    /// resolution of f, or 60 doublings of L_t all failed.
    bool stalled = false;
    std::vector<TraceRecord> trace;
};

AdaptiveGdResult adaptive_gd(const Oracle& oracle, const Point& start,
                             const AdaptiveGdOptions& opts = {});

}  // namespace altmin
