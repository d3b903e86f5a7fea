#pragma once

#include "altmin/oracle.hpp"

namespace altmin {

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h per coordinate.
/// Evaluations are counted as monitor calls.
Vector finite_diff_gradient(const Oracle& oracle, const Point& x, double h = 1e-5);

}  // namespace altmin
