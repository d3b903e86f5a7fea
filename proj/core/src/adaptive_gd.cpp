#include "altmin/adaptive_gd.hpp"

#include "altmin/errors.hpp"

#include <cmath>

namespace altmin {

AdaptiveGdResult adaptive_gd(const Oracle& oracle, const Point& start, const AdaptiveGdOptions& opts) {
    if (opts.max_iters < 0) raise(ErrorCode::InvalidArgument, "max_iters must be nonnegative");
    if (!(opts.L0 > 0.0)) raise(ErrorCode::InvalidArgument, "initial curvature estimate must be positive");
    constexpr int kMaxBacktracks = 60;

    AdaptiveGdResult res;
    res.x = start;
    auto [f, g] = oracle.value_and_gradient(start);
    res.f = f;
    res.grad = std::move(g);
    double L = opts.L0;
    if (opts.record_trace) {
        TraceRecord r;
        r.f_val = res.f;
        r.grad_norm_sq = res.grad.squaredNorm();
        r.calls = oracle.counts();
        res.trace.push_back(r);
    }

    Point trial(start.size());
    while (true) {
        const double g2 = res.grad.squaredNorm();
        if (std::sqrt(g2) <= opts.grad_tol || (opts.stop_when && opts.stop_when(res.x, res.grad))) {
            res.stopped = true;
            break;
        }
        if (res.iterations >= opts.max_iters) break;

        bool accepted = false;
        double f_trial = 0.0;
        for (int t = 0; t < kMaxBacktracks; ++t) {
            if (g2 / (2.0 * L) <= decrease_noise_floor(res.f)) break;
            trial = res.x - res.grad / L;
            f_trial = oracle.value(trial);
            if (f_trial <= res.f - g2 / (2.0 * L)) {
                accepted = true;
                break;
            }
            L *= 2.0;
        }
        if (!accepted) {  // decrease below floating-point resolution
            res.stalled = true;
            break;
        }

        const double L_used = L;
        res.x = trial;
        res.f = f_trial;
        res.grad = oracle.gradient(res.x);
        L *= 0.5;
        ++res.iterations;
        if (opts.record_trace) {
            TraceRecord r;
            r.k = res.iterations;
            r.f_val = res.f;
            r.grad_norm_sq = res.grad.squaredNorm();
            r.L_hat = L_used;
            r.calls = oracle.counts();
            res.trace.push_back(r);
        }
    }
    res.L_estimate = L;
    return res;
}

}  // namespace altmin
