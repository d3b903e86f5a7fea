#pragma once

#include "altmin/oracle.hpp"
#include "altmin/types.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace altmin {

/// Per-iteration telemetry. Record 0 describes the starting point; record k
/// (k >= 1) the state after the k-th iteration.
struct TraceRecord {
    int k = 0;
    double f_val = 0.0;         ///< f at the primary iterate (x^k, or y^k for catalyst)
    double grad_norm_sq = 0.0;  ///< squared gradient norm at the point the method certified
    double A_k = 0.0;
    double a_k = 0.0;
    double tau_k = 1.0;
    std::optional<double> L_hat;
    OracleCounts calls;
    double wall_time = 0.0;

    // Method-specific diagnostics, absent where they do not apply.
    std::optional<double> f_y;       ///< f(y^{k-1}) for line-search methods
    std::optional<double> psi_min;   ///< psi_k(v^k)
    std::optional<double> psi_scale; ///< magnitude bound for roundoff in psi_min
    std::optional<double> beta;
    std::optional<int> block;
    std::optional<int> inner_iters;
    std::optional<double> ms_lhs;    ///< ||grad F(y^{k})||
    std::optional<double> ms_rhs;    ///< L_k / 2 ||y^{k} - x^{k}||
    bool coefficient_fallback = false;
};

struct StepOutcome {
    bool converged = false;
    /// Progress fell below floating-point resolution of f; no record.
    bool stalled = false;
    TraceRecord record;
};

enum class StopReason { Converged, MaxIterations, Budget, Stalled };

std::string_view to_string(StopReason r) noexcept;

struct StoppingRule {
    /// Stop once ||grad f|| <= max(grad_tol_abs, grad_tol_rel * ||grad f(x0)||).
    double grad_tol_rel = 1e-9;
    double grad_tol_abs = 0.0;
    int max_iters = 1000;
    /// Gradient-equivalent oracle calls (gradients plus block updates); <= 0
    /// disables the budget.
    std::int64_t max_grad_equiv = 0;

    double threshold(double initial_grad_norm) const;
};

struct RunResult {
    Point x;
    std::vector<TraceRecord> trace;
    StopReason reason = StopReason::MaxIterations;

    int iterations() const { return static_cast<int>(trace.size()) - 1; }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Decrease below this is indistinguishable from floating-point noise in f.
double decrease_noise_floor(double f);

}  // namespace altmin
