#include "altmin/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace altmin {

std::string_view to_string(StopReason r) noexcept {
    switch (r) {
        case StopReason::Converged: return "converged";
        case StopReason::MaxIterations: return "max_iterations";
        case StopReason::Budget: return "budget";
        case StopReason::Stalled: return "stalled";
    }
    return "unknown";
}

double StoppingRule::threshold(double initial_grad_norm) const {
    return std::max(grad_tol_abs, grad_tol_rel * initial_grad_norm);
}

double decrease_noise_floor(double f) {
    return 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f));
}

}  // namespace altmin
