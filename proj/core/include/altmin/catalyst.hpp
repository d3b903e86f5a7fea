#pragma once

#include "altmin/adaptive_gd.hpp"
#include "altmin/oracle.hpp"
#include "altmin/trace.hpp"

#include <vector>

namespace altmin {

struct CatalystConfig {
    double L0 = 1.0;
    double L_u = 1e9;
    double L_d = 1e-6;
    double alpha = 4.0;
    double beta = 2.0;
    double gamma = 1.5;
    int max_outer = 100;
    int inner_budget = 1000;

    /// Throws InvalidArgument unless alpha > beta > gamma > 0 and
    /// L_d <= L0 <= L_u.
    void validate() const;
};

/// F_{L,c}(y) = f(y) + L/2 ||y - c||^2. Calls are forwarded to (and counted
/// by) the wrapped oracle as well.
class ProxOracle final : public Oracle {
public:
    ProxOracle(const Oracle& base, Point center, double L);

    int dim() const override { return base_.dim(); }
    std::optional<double> known_L() const override;
    const Point& center() const noexcept { return center_; }
    double L() const noexcept { return L_; }

protected:
    double do_value(const Point& y) const override;
    Vector do_gradient(const Point& y) const override;
    std::pair<double, Vector> do_value_and_gradient(const Point& y) const override;

private:
    const Oracle& base_;
    Point center_;
    double L_;
};

struct InnerSolveResult {
    Point y;
    int iterations = 0;   ///< N_t; equals the budget when it was exhausted
    bool certified = false;
    bool stalled = false;  ///< inner method hit floating-point resolution of F
    double ms_lhs = 0.0;  ///< ||grad F(y)||
    double ms_rhs = 0.0;  ///< L/2 ||y - center||
    double L_estimate = 0.0;
};

/// Runs adaptive_gd on F from its center until
///   ||grad F(y)|| <= L/2 ||y - center||
/// holds or `budget` iterations are spent.
InnerSolveResult inner_solve(const ProxOracle& F, int budget, double gd_L0);

struct CatalystState {
    int k = 0;
    Point x;
    Point y;
    Point z;
    double A = 0.0;
    double L = 1.0;
    double inner_L = 1.0;  ///< warm start for the inner curvature estimate
    std::vector<int> last_inner_counts;
};

CatalystState catalyst_init(const Oracle& oracle, const Point& x0, const CatalystConfig& config);

/// One outer iteration with the L search. The accepted trial is the last one
/// run if it certified the stopping inequality, otherwise the most recent
/// certified trial. If no trial certified and the last one stalled at the
/// floating-point resolution of F, the outcome is marked stalled and the
/// iterates are left unchanged; otherwise throws InnerBudgetExhausted.
StepOutcome catalyst_outer_step(CatalystState& state, const Oracle& oracle,
                                const CatalystConfig& config);

/// a = (1/L + sqrt(1/L^2 + 4A/L)) / 2, the positive root of L a^2 = A + a.
double catalyst_coefficient(double A, double L);

struct CatalystOptions {
    CatalystConfig config;
    StoppingRule stop;
};

RunResult run_catalyst(const Oracle& oracle, const Point& x0, const CatalystOptions& opts = {});

}  // namespace altmin
