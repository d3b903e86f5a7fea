#pragma once

#include "altmin/types.hpp"

namespace altmin {

struct LineSearchResult {
    double arg = 0.0;    ///< minimizer estimate (beta or h)
    double value = 0.0;  ///< phi(arg)
    int evaluations = 0;
};

struct LineSearchOptions {
    /// Relative tolerance on the argument.
    double tol = 1e-10;
    int max_evaluations = 200;
    /// Ray search only.
    double initial_step = 1.0;
    int max_doublings = 60;
};

/// Golden-section minimization of phi on [0, 1].
///
/// Both endpoints are always evaluated and the best of {phi(0), phi(1),
/// golden-section point} is returned, so phi(beta*) <= min(phi(0), phi(1))
/// holds even when phi is not unimodal. Throws NonFiniteValue if phi yields
/// NaN or Inf.
LineSearchResult line_search_unit_interval(const ScalarFunction& phi,
                                           const LineSearchOptions& opts = {});

/// Minimization of phi on [0, inf).
///
/// Starting from opts.initial_step the step is doubled while phi keeps
/// decreasing (or halved while phi(h) >= phi(0)) until a minimizer is
/// bracketed, then refined by golden section. Always returns h* >= 0 with
/// phi(h*) <= phi(0). Throws BracketFailure if phi still decreases after
/// opts.max_doublings doublings.
LineSearchResult line_search_ray(const ScalarFunction& phi, const LineSearchOptions& opts = {});

}  // namespace altmin
