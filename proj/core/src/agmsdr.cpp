#include "altmin/agmsdr.hpp"

#include "altmin/coefficients.hpp"
#include "altmin/errors.hpp"
#include "step_support.hpp"

#include <cmath>
#include <optional>

namespace altmin {
namespace {

struct SegmentPoint {
    Point y;
    double f_y = 0.0;
    double beta = 0.0;
};

// beta = argmin_{[0,1]} f(v + beta (x - v)).
SegmentPoint search_segment(const AgmsdrState& s, const Oracle& oracle, const LineSearchOptions& ls) {
    const Vector dir = s.x - s.v;
    if (dir.squaredNorm() == 0.0) return {s.x, s.f_x, 0.0};
    Point trial(s.v.size());
    const auto res = line_search_unit_interval(
        [&](double beta) {
            trial = s.v + beta * dir;
            return oracle.value(trial);
        },
        ls);
    return {s.v + res.arg * dir, res.value, res.arg};
}

std::optional<double> last_L_hat(const AgmsdrState& s, const Oracle& oracle) {
    if (s.a_hist.empty()) return oracle.known_L();
    const double a = s.a_hist.back();
    return local_lipschitz_estimate(s.A() - a, a);
}

StepOutcome finish_step(AgmsdrState& s, const Oracle& oracle, const SegmentPoint& seg, const Vector& g,
                        double g2, Point x_next, double f_next, double a) {
    const double A_prev = s.A();
    s.psi.add(a, seg.f_y, g, seg.y);
    s.v = s.v - a * g;
    s.y = seg.y;
    s.x = std::move(x_next);
    s.f_x = f_next;
    s.f_best = std::min(s.f_best, f_next);
    s.a_hist.push_back(a);
    ++s.k;

    StepOutcome out;
    TraceRecord& r = out.record;
    r.k = s.k;
    r.f_val = f_next;
    r.grad_norm_sq = g2;
    r.A_k = s.A();
    r.a_k = a;
    r.tau_k = 1.0;
    r.L_hat = local_lipschitz_estimate(A_prev, a);
    r.calls = oracle.counts();
    r.f_y = seg.f_y;
    r.psi_min = s.psi.value(s.v);
    r.psi_scale = s.psi.value_scale(s.v);
    r.beta = seg.beta;
    return out;
}

}  // namespace

AgmsdrState agmsdr_init(const Oracle& oracle, const Point& x0) {
    if (x0.size() != oracle.dim()) raise(ErrorCode::DimensionMismatch, "start point dimension mismatch");
    AgmsdrState s;
    s.x = x0;
    s.y = x0;
    s.v = x0;
    s.f_x = oracle.monitor_value(x0);
    s.f_best = s.f_x;
    s.psi = EstimateSequence(x0, 0.0);
    return s;
}

StepOutcome agmsdr_step_known_L(AgmsdrState& s, const Oracle& oracle, double L, const AgmsdrStepOptions& opts) {
    if (!(L > 0.0)) raise(ErrorCode::InvalidArgument, "L must be positive");
    const SegmentPoint seg = search_segment(s, oracle, opts.line_search);
    const Vector g = oracle.gradient(seg.y);
    const double g2 = g.squaredNorm();
    if (std::sqrt(g2) <= opts.grad_threshold) {
        s.y = seg.y;
        return StepOutcome{true, false, {}};
    }
    Point x_next = seg.y - g / L;
    const double f_next = oracle.monitor_value(x_next);
    const double a = solve_coefficient_known_L(s.A(), 1.0, 0.0, L);
    return finish_step(s, oracle, seg, g, g2, std::move(x_next), f_next, a);
}

StepOutcome agmsdr_step_linesearch(AgmsdrState& s, const Oracle& oracle, const AgmsdrStepOptions& opts) {
    const SegmentPoint seg = search_segment(s, oracle, opts.line_search);
    const Vector g = oracle.gradient(seg.y);
    const double g2 = g.squaredNorm();
    if (std::sqrt(g2) <= opts.grad_threshold) {
        s.y = seg.y;
        return StepOutcome{true, false, {}};
    }
    Point trial(seg.y.size());
    const auto ray = line_search_ray(
        [&](double h) {
            trial = seg.y - h * g;
            return oracle.value(trial);
        },
        opts.line_search);
    Point x_next = seg.y - ray.arg * g;
    const double delta = seg.f_y - ray.value;

    switch (detail::classify_decrease(delta, seg.f_y, g2, opts.grad_threshold, last_L_hat(s, oracle))) {
        case detail::DecreaseVerdict::Converged: s.y = seg.y; return StepOutcome{true, false, {}};
        case detail::DecreaseVerdict::Stalled: s.y = seg.y; return StepOutcome{false, true, {}};
        case detail::DecreaseVerdict::Proceed: break;
    }
    SufficientDecreaseInput in;
    in.A = s.A();
    in.grad_norm_sq = g2;
    in.delta = delta;
    const double a = solve_sufficient_decrease(in);
    return finish_step(s, oracle, seg, g, g2, std::move(x_next), ray.value, a);
}

RunResult run_agmsdr(const Oracle& oracle, const Point& x0, const AgmsdrOptions& opts) {
    double L = 0.0;
    if (opts.variant == AgmsdrVariant::KnownL) {
        const auto known = opts.L ? opts.L : oracle.known_L();
        if (!known) raise(ErrorCode::InvalidArgument, "known-L variant needs a Lipschitz constant");
        L = *known;
    }
    Stopwatch clock;
    AgmsdrState state = agmsdr_init(oracle, x0);
    const auto [f0, g0] = oracle.monitor(x0);
    AgmsdrStepOptions step_opts;
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
        StepOutcome out = opts.variant == AgmsdrVariant::KnownL ? agmsdr_step_known_L(state, oracle, L, step_opts)
                                                                : agmsdr_step_linesearch(state, oracle, step_opts);
        if (out.converged || out.stalled) {
            result.reason = out.converged ? StopReason::Converged : StopReason::Stalled;
            break;
        }
        out.record.wall_time = clock.seconds();
        if (opts.check_invariants) {
            const double Af = out.record.A_k * out.record.f_val;
            if (Af > *out.record.psi_min + invariant_slack(Af, *out.record.psi_min))
                raise(ErrorCode::InvalidBound, "estimate-sequence invariant violated");
        }
        result.trace.push_back(std::move(out.record));
    }
    result.x = state.x;
    return result;
}

std::vector<double> lemma1_certificate(const std::vector<TraceRecord>& trace, double mu, double f0, double f_star) {
    if (!(mu >= 0.0)) raise(ErrorCode::InvalidArgument, "mu must be nonnegative");
    std::vector<double> bounds;
    bounds.reserve(trace.size());
    double bound = f0 - f_star;
    bounds.push_back(bound);
    for (std::size_t j = 1; j < trace.size(); ++j) {
        const double a = trace[j].a_k;
        const double A = trace[j].A_k;
        const double factor = 1.0 - mu * a * a / A;
        if (!(factor >= 0.0 && factor <= 1.0))
            raise(ErrorCode::InvalidBound, "mu exceeds the local curvature estimate at iteration " + std::to_string(j));
        bound *= factor;
        bounds.push_back(bound);
    }
    return bounds;
}

double agm_rate_bound(int k, double L, double R) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "rate bound needs k >= 1");
    return 2.0 * L * R * R / (static_cast<double>(k) * k);
}

}  // namespace altmin
