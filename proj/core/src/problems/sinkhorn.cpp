#include "altmin/problems/sinkhorn.hpp"

#include "altmin/errors.hpp"

#include <cmath>

namespace altmin::problems {

RunResult run_sinkhorn(const EntropicOTDual& problem, const Vector& u0, const Vector& v0, const StoppingRule& stop) {
    Stopwatch clock;
    Point p = problem.stack(u0, v0);
    auto [f0, g0] = problem.monitor(p);
    const double threshold = stop.threshold(g0.norm());

    RunResult result;
    TraceRecord first;
    first.f_val = f0;
    first.grad_norm_sq = g0.squaredNorm();
    first.calls = problem.counts();
    result.trace.push_back(first);
    result.reason = StopReason::MaxIterations;
    if (g0.norm() <= threshold) result.reason = StopReason::Converged;

    int half_steps = 0;
    for (int sweep = 0; sweep < stop.max_iters && result.reason != StopReason::Converged; ++sweep) {
        if (stop.max_grad_equiv > 0 && problem.counts().gradient_equivalent() >= stop.max_grad_equiv) {
            result.reason = StopReason::Budget;
            break;
        }
        double g2 = 0.0;
        for (std::size_t block = 0; block < 2; ++block) {
            p = problem.block_minimize(p, block);
            auto [f, g] = problem.monitor(p);
            g2 = g.squaredNorm();
            TraceRecord r;
            r.k = ++half_steps;
            r.f_val = f;
            r.grad_norm_sq = g2;
            r.block = static_cast<int>(block);
            r.calls = problem.counts();
            r.wall_time = clock.seconds();
            result.trace.push_back(r);
        }
        if (std::sqrt(g2) <= threshold) result.reason = StopReason::Converged;
    }
    result.x = p;
    return result;
}

}  // namespace altmin::problems
