#include "altmin/aam.hpp"

#include "altmin/agmsdr.hpp"
#include "altmin/coefficients.hpp"
#include "altmin/errors.hpp"
#include "step_support.hpp"

#include <cmath>

namespace altmin {

std::size_t select_block(const BlockPartition* partition, const Vector& grad) {
    if (!partition) return 0;
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < partition->size(); ++i) {
        const double n2 = partition->block_norm_sq(grad, i);
        if (n2 > best_norm) {
            best_norm = n2;
            best = i;
        }
    }
    return best;
}

AamState aam_init(const Oracle& oracle, const Point& x0, double mu) {
    if (x0.size() != oracle.dim()) raise(ErrorCode::DimensionMismatch, "start point dimension mismatch");
    if (!(mu >= 0.0)) raise(ErrorCode::InvalidArgument, "mu must be nonnegative");
    AamState s;
    s.x = x0;
    s.y = x0;
    s.v = x0;
    s.f_x = oracle.monitor_value(x0);
    s.psi = EstimateSequence(x0, mu);
    return s;
}

StepOutcome aam_step(AamState& s, const Oracle& oracle, const AamMode& mode, const AamStepOptions& opts) {
    if (!oracle.has_block_minimizer()) raise(ErrorCode::Unsupported, "alternating minimization needs block minimizers");

    // beta = argmin_{[0,1]} f(x + beta (v - x))
    const Vector dir = s.v - s.x;
    Point y = s.x;
    double f_y = s.f_x;
    double beta = 0.0;
    if (dir.squaredNorm() > 0.0) {
        Point trial(s.x.size());
        const auto ls = line_search_unit_interval(
            [&](double b) {
                trial = s.x + b * dir;
                return oracle.value(trial);
            },
            opts.line_search);
        beta = ls.arg;
        y = s.x + beta * dir;
        f_y = ls.value;
    }

    const Vector g = oracle.gradient(y);
    const double g2 = g.squaredNorm();
    if (std::sqrt(g2) <= opts.grad_threshold) {
        s.y = y;
        return StepOutcome{true, false, {}};
    }

    const std::size_t block = select_block(oracle.partition(), g);
    Point x_next = oracle.block_minimize(y, block);
    const double f_next = oracle.value(x_next);
    double delta = f_y - f_next;
    if (delta < -1e-12 * std::max(1.0, std::abs(f_y)))
        raise(ErrorCode::BlockMinFailure, "block minimizer increased the objective");

    const double A = s.A();
    const double tau = s.tau();
    const double mu = s.mu();
    const auto n = static_cast<double>(block_count(oracle));
    double a = 0.0;
    bool fallback = false;
    if (mode.L) {
        a = solve_coefficient_known_L(A, tau, mu, *mode.L * n);
    } else {
        std::optional<double> L_prev;
        if (!s.a_hist.empty()) L_prev = local_lipschitz_estimate(A - s.a_hist.back(), s.a_hist.back());
        else L_prev = oracle.known_L();
        switch (detail::classify_decrease(delta, f_y, g2, opts.grad_threshold, L_prev)) {
            case detail::DecreaseVerdict::Converged: s.y = y; return StepOutcome{true, false, {}};
            case detail::DecreaseVerdict::Stalled: s.y = y; return StepOutcome{false, true, {}};
            case detail::DecreaseVerdict::Proceed: break;
        }
        SufficientDecreaseInput in{A, tau, mu, g2, (s.v - y).squaredNorm(), delta};
        try {
            a = solve_sufficient_decrease(in);
        } catch (const Error& e) {
            const auto L = oracle.known_L();
            if (e.code() != ErrorCode::NoRoot || !L) throw;
            a = solve_coefficient_known_L(A, tau, mu, *L * n);
            fallback = true;
            ++s.fallback_events;
        }
    }

    const double tau_next = tau + mu * a;
    s.v = (tau * s.v + mu * a * y - a * g) / tau_next;
    s.psi.add(a, f_y, g, y);
    s.y = y;
    s.x = std::move(x_next);
    s.f_x = f_next;
    s.a_hist.push_back(a);
    ++s.k;

    StepOutcome out;
    TraceRecord& r = out.record;
    r.k = s.k;
    r.f_val = f_next;
    r.grad_norm_sq = g2;
    r.A_k = s.A();
    r.a_k = a;
    r.tau_k = s.tau();
    r.L_hat = local_lipschitz_estimate(A, a);
    r.calls = oracle.counts();
    r.f_y = f_y;
    r.psi_min = s.psi.value(s.v);
    r.psi_scale = s.psi.value_scale(s.v);
    r.beta = beta;
    r.block = static_cast<int>(block);
    r.coefficient_fallback = fallback;
    return out;
}

RunResult run_aam(const Oracle& oracle, const Point& x0, const AamOptions& opts) {
    Stopwatch clock;
    AamState state = aam_init(oracle, x0, opts.mu);
    const auto [f0, g0] = oracle.monitor(x0);
    AamStepOptions step_opts;
    step_opts.grad_threshold = opts.stop.threshold(g0.norm());
    step_opts.line_search = opts.line_search;

    RunResult result;
    result.trace.push_back(detail::initial_record(oracle, f0, g0.squaredNorm()));
    result.reason = StopReason::MaxIterations;
    for (int it = 0; it < opts.stop.max_iters; ++it) {
        if (detail::budget_exhausted(oracle, opts.stop)) {
            result.reason = StopReason::Budget;
            break;
        }
        StepOutcome out = aam_step(state, oracle, opts.mode, step_opts);
        if (out.converged || out.stalled) {
            result.reason = out.converged ? StopReason::Converged : StopReason::Stalled;
            break;
        }
        out.record.wall_time = clock.seconds();
        result.trace.push_back(std::move(out.record));
    }
    result.x = state.x;
    return result;
}

std::vector<double> ak_growth_certificate(const std::vector<TraceRecord>& trace, int n, double L, double mu) {
    if (n < 1 || !(L > 0.0) || !(mu >= 0.0)) raise(ErrorCode::InvalidArgument, "need n >= 1, L > 0, mu >= 0");
    const double nL = n * L;
    if (mu > nL) raise(ErrorCode::InvalidBound, "mu exceeds n L");
    const double q = std::sqrt(mu / nL);
    std::vector<double> bounds(trace.size(), 0.0);
    for (std::size_t j = 1; j < trace.size(); ++j) {
        const double k = static_cast<double>(j);
        const double sublinear = k * k / (4.0 * nL);
        const double linear = std::pow(1.0 - q, -(k - 1.0)) / nL;
        bounds[j] = std::max(sublinear, linear);
    }
    return bounds;
}

double main_theorem_bound(int k, int n, double L, double R, double mu) {
    if (k < 1) raise(ErrorCode::InvalidBound, "bound defined for k >= 1");
    if (n < 1 || !(L > 0.0) || !(mu >= 0.0)) raise(ErrorCode::InvalidArgument, "need n >= 1, L > 0, mu >= 0");
    const double nL = n * L;
    if (mu > nL) raise(ErrorCode::InvalidBound, "mu exceeds n L");
    const double q = std::sqrt(mu / nL);
    const double kk = static_cast<double>(k);
    return nL * R * R * std::min(4.0 / (kk * kk), std::pow(1.0 - q, kk - 1.0));
}

std::vector<double> aam_pl_certificate(const std::vector<TraceRecord>& trace, double mu, double f0, double f_star) {
    return lemma1_certificate(trace, mu, f0, f_star);
}

}  // namespace altmin
