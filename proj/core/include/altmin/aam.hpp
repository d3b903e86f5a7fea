#pragma once

#include "altmin/estimate_sequence.hpp"
#include "altmin/line_search.hpp"
#include "altmin/oracle.hpp"
#include "altmin/trace.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace altmin {

/// Greedy block: argmax_i ||grad_i f||^2, smallest index on ties. Without a
/// partition the whole space is block 0.
std::size_t select_block(const BlockPartition* partition, const Vector& grad);

struct AamState {
    int k = 0;
    Point x;
    Point y;
    Point v;
    double f_x = 0.0;
    std::vector<double> a_hist;
    EstimateSequence psi;
    int fallback_events = 0;

    double A() const noexcept { return psi.weight(); }
    double mu() const noexcept { return psi.mu(); }
    /// 1 + mu A_k, recomputed from A_k.
    double tau() const noexcept { return psi.tau(); }
};

AamState aam_init(const Oracle& oracle, const Point& x0, double mu);

/// Coefficient rule for a_{k+1}.
struct AamMode {
    /// Known global Lipschitz constant L (the equation uses L * n). Empty
    /// means adaptive: a_{k+1} from the sufficient-decrease equation.
    std::optional<double> L;

    static AamMode known(double L) { return AamMode{L}; }
    static AamMode adaptive() { return AamMode{}; }
};

struct AamStepOptions {
    double grad_threshold = 0.0;
    LineSearchOptions line_search;
};

/// One iteration of accelerated alternating minimization. Throws
/// BlockMinFailure if the block update increases f beyond roundoff, and
/// DegenerateStep when the block update makes no progress at a non-small
/// gradient.
StepOutcome aam_step(AamState& state, const Oracle& oracle, const AamMode& mode,
                        const AamStepOptions& opts = {});

struct AamOptions {
    AamMode mode;
    double mu = 0.0;
    StoppingRule stop;
    LineSearchOptions line_search;
};

RunResult run_aam(const Oracle& oracle, const Point& x0, const AamOptions& opts = {});

/// Lower bounds max{k^2/(4 L n), (1/(nL)) (1 - sqrt(mu/(nL)))^{-(k-1)}} on A_k,
/// index-aligned with the trace (entry 0 is 0).
std::vector<double> ak_growth_certificate(const std::vector<TraceRecord>& trace, int n, double L,
                                          double mu);

/// n L R^2 min{4/k^2, (1 - sqrt(mu/(nL)))^{k-1}}. Throws InvalidBound if
/// mu > nL or k < 1.
double main_theorem_bound(int k, int n, double L, double R, double mu);

/// Same product bound as lemma1_certificate, applied to AAM traces.
std::vector<double> aam_pl_certificate(const std::vector<TraceRecord>& trace, double mu, double f0,
                                       double f_star);

}  // namespace altmin
