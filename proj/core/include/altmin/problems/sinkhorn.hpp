#pragma once

#include "altmin/problems/entropic_ot.hpp"
#include "altmin/trace.hpp"

namespace altmin::problems {

/// Sinkhorn's algorithm as alternating exact block minimization of the EOT
/// dual: u-update, then v-update. One trace record per half-sweep (block
/// update), with f and ||grad f||^2 filled from monitor calls. The stopping
/// test uses the gradient after each full sweep.
RunResult run_sinkhorn(const EntropicOTDual& problem, const Vector& u0, const Vector& v0,
                       const StoppingRule& stop);

}  // namespace altmin::problems
