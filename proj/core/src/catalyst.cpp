#include "altmin/catalyst.hpp"

#include "altmin/errors.hpp"
#include "step_support.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace altmin {

void CatalystConfig::validate() const {
    if (!(alpha > beta && beta > gamma && gamma > 0.0))
        raise(ErrorCode::InvalidArgument, "catalyst parameters need alpha > beta > gamma > 0");
    if (!(L_d > 0.0 && L_d <= L0 && L0 <= L_u))
        raise(ErrorCode::InvalidArgument, "catalyst parameters need 0 < L_d <= L0 <= L_u");
    if (max_outer < 0 || inner_budget <= 0) raise(ErrorCode::InvalidArgument, "catalyst budgets must be positive");
}

ProxOracle::ProxOracle(const Oracle& base, Point center, double L) : base_(base), center_(std::move(center)), L_(L) {
    if (!(L > 0.0)) raise(ErrorCode::InvalidArgument, "prox weight must be positive");
    if (center_.size() != base.dim()) raise(ErrorCode::DimensionMismatch, "prox center dimension mismatch");
}

std::optional<double> ProxOracle::known_L() const {
    const auto L = base_.known_L();
    if (!L) return std::nullopt;
    return *L + L_;
}

double ProxOracle::do_value(const Point& y) const {
    return base_.value(y) + 0.5 * L_ * (y - center_).squaredNorm();
}

Vector ProxOracle::do_gradient(const Point& y) const { return base_.gradient(y) + L_ * (y - center_); }

std::pair<double, Vector> ProxOracle::do_value_and_gradient(const Point& y) const {
    auto [f, g] = base_.value_and_gradient(y);
    const Vector d = y - center_;
    return {f + 0.5 * L_ * d.squaredNorm(), g + L_ * d};
}

InnerSolveResult inner_solve(const ProxOracle& F, int budget, double gd_L0) {
    if (budget <= 0) raise(ErrorCode::InvalidArgument, "inner budget must be positive");
    const Point& center = F.center();
    const double half_L = 0.5 * F.L();
    AdaptiveGdOptions opts;
    opts.max_iters = budget;
    opts.L0 = gd_L0;
    opts.record_trace = false;
    opts.stop_when = [&](const Point& y, const Vector& g) { return g.norm() <= half_L * (y - center).norm(); };
    AdaptiveGdResult gd = adaptive_gd(F, center, opts);

    InnerSolveResult out;
    out.certified = gd.stopped;
    out.stalled = gd.stalled;
    out.iterations = gd.stopped ? gd.iterations : budget;
    out.ms_lhs = gd.grad.norm();
    out.ms_rhs = half_L * (gd.x - center).norm();
    out.L_estimate = gd.L_estimate;
    out.y = std::move(gd.x);
    return out;
}

double catalyst_coefficient(double A, double L) {
    if (!(L > 0.0) || !(A >= 0.0)) raise(ErrorCode::InvalidArgument, "catalyst coefficient needs L > 0, A >= 0");
    const double inv = 1.0 / L;
    return 0.5 * (inv + std::sqrt(inv * inv + 4.0 * A * inv));
}

CatalystState catalyst_init(const Oracle& oracle, const Point& x0, const CatalystConfig& config) {
    config.validate();
    if (x0.size() != oracle.dim()) raise(ErrorCode::DimensionMismatch, "start point dimension mismatch");
    CatalystState s;
    s.x = x0;
    s.y = x0;
    s.z = x0;
    s.L = config.L0;
    s.inner_L = config.L0;
    return s;
}

StepOutcome catalyst_outer_step(CatalystState& s, const Oracle& oracle, const CatalystConfig& config) {
    struct Trial {
        double L = 0.0;
        double a = 0.0;
        double A_next = 0.0;
        Point x;
        InnerSolveResult inner;
    };

    s.last_inner_counts.clear();
    std::optional<Trial> last;
    std::optional<Trial> certified;
    double L_trial = config.beta * std::min(config.alpha * s.L, config.L_u);
    int prev_n = 0;
    for (int t = 1;; ++t) {
        L_trial = std::max(L_trial / config.beta, config.L_d);
        Trial trial;
        trial.L = L_trial;
        trial.a = catalyst_coefficient(s.A, L_trial);
        trial.A_next = s.A + trial.a;
        trial.x = (s.A / trial.A_next) * s.y + (trial.a / trial.A_next) * s.z;
        const ProxOracle F(oracle, trial.x, L_trial);
        trial.inner = inner_solve(F, config.inner_budget, s.inner_L);
        const int n_t = trial.inner.iterations;
        s.last_inner_counts.push_back(n_t);
        s.inner_L = std::max(trial.inner.L_estimate, 1e-300);

        const bool ok = trial.inner.certified;
        last = trial;
        if (ok) certified = trial;
        // A failed trial after a certified one ends the search on the certified one;
        // a stalled trial ends it outright, since smaller L only flattens F further.
        if (!ok && (certified || trial.inner.stalled)) break;
        if ((t > 1 && n_t >= config.gamma * prev_n) || L_trial == config.L_d) break;
        prev_n = n_t;
    }

    const Trial* chosen = nullptr;
    if (last && last->inner.certified)
        chosen = &*last;
    else if (certified)
        chosen = &*certified;
    else if (last && last->inner.stalled)
        return StepOutcome{false, true, {}};
    else
        raise(ErrorCode::InnerBudgetExhausted, "inner method did not certify the stopping inequality at any trial");

    s.L = chosen->L;
    s.A = chosen->A_next;
    s.x = chosen->x;
    s.y = chosen->inner.y;
    auto [f_y, g_y] = oracle.value_and_gradient(s.y);
    s.z = s.z - chosen->a * g_y;
    ++s.k;

    StepOutcome out;
    TraceRecord& r = out.record;
    r.k = s.k;
    r.f_val = f_y;
    r.grad_norm_sq = g_y.squaredNorm();
    r.A_k = s.A;
    r.a_k = chosen->a;
    r.tau_k = 1.0;
    r.L_hat = chosen->L;
    r.calls = oracle.counts();
    r.inner_iters = chosen->inner.iterations;
    r.ms_lhs = chosen->inner.ms_lhs;
    r.ms_rhs = chosen->inner.ms_rhs;
    return out;
}

RunResult run_catalyst(const Oracle& oracle, const Point& x0, const CatalystOptions& opts) {
    Stopwatch clock;
    CatalystState state = catalyst_init(oracle, x0, opts.config);
    const auto [f0, g0] = oracle.monitor(x0);
    const double threshold = opts.stop.threshold(g0.norm());

    RunResult result;
    result.trace.push_back(detail::initial_record(oracle, f0, g0.squaredNorm()));
    result.reason = StopReason::MaxIterations;
    if (g0.norm() <= threshold) result.reason = StopReason::Converged;
    const int max_outer = std::min(opts.config.max_outer, opts.stop.max_iters);
    for (int it = 0; it < max_outer && result.reason != StopReason::Converged; ++it) {
        if (detail::budget_exhausted(oracle, opts.stop)) {
            result.reason = StopReason::Budget;
            break;
        }
        StepOutcome out = catalyst_outer_step(state, oracle, opts.config);
        if (out.stalled) {
            result.reason = StopReason::Stalled;
            break;
        }
        out.record.wall_time = clock.seconds();
        const bool done = std::sqrt(out.record.grad_norm_sq) <= threshold;
        result.trace.push_back(std::move(out.record));
        if (done) result.reason = StopReason::Converged;
    }
    result.x = state.y;
    return result;
}

}  // namespace altmin
