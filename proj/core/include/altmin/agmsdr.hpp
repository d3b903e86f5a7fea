#pragma once

#include "altmin/estimate_sequence.hpp"
#include "altmin/line_search.hpp"
#include "altmin/oracle.hpp"
#include "altmin/trace.hpp"

#include <optional>
#include <vector>

namespace altmin {

/// Accelerated gradient method with small-dimensional relaxation: momentum
/// coefficients are replaced by an exact line search on the segment [v^k, x^k].
enum class AgmsdrVariant {
    KnownL,      ///< x^{k+1} = y^k - grad f(y^k) / L
    LineSearch,  ///< x^{k+1} = argmin_{h >= 0} f(y^k - h grad f(y^k))
};

struct AgmsdrState {
    int k = 0;
    Point x;
    Point y;
    Point v;
    double f_x = 0.0;
    std::vector<double> a_hist;
    EstimateSequence psi;  ///< mu = 0; v == psi.minimizer()
    double f_best = 0.0;

    double A() const noexcept { return psi.weight(); }
};

AgmsdrState agmsdr_init(const Oracle& oracle, const Point& x0);

struct AgmsdrStepOptions {
    double grad_threshold = 0.0;
    LineSearchOptions line_search;
};

StepOutcome agmsdr_step_known_L(AgmsdrState& state, const Oracle& oracle, double L,
                                const AgmsdrStepOptions& opts = {});
StepOutcome agmsdr_step_linesearch(AgmsdrState& state, const Oracle& oracle,
                                   const AgmsdrStepOptions& opts = {});

struct AgmsdrOptions {
    AgmsdrVariant variant = AgmsdrVariant::LineSearch;
    /// Overrides oracle.known_L() for the KnownL variant.
    std::optional<double> L;
    StoppingRule stop;
    LineSearchOptions line_search;
    bool check_invariants = false;  ///< throw on estimate-sequence violation
};

RunResult run_agmsdr(const Oracle& oracle, const Point& x0, const AgmsdrOptions& opts = {});

/// Linear-rate certificate for mu-oblivious runs:
///   bound_k = prod_{j <= k} (1 - mu a_j^2 / A_j) (f0 - f*),
/// index-aligned with the trace (bound_0 = f0 - f*). Throws InvalidBound if a
/// factor leaves [0, 1] (mu exceeds a local curvature estimate).
std::vector<double> lemma1_certificate(const std::vector<TraceRecord>& trace, double mu, double f0,
                                       double f_star);

/// 2 L R^2 / k^2.
double agm_rate_bound(int k, double L, double R);

}  // namespace altmin
