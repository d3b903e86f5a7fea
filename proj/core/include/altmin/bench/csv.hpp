#pragma once

#include "altmin/trace.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace altmin::bench {

/// Fixed trace columns, in order.
inline constexpr const char* kTraceHeader =
    "k,f,f_minus_fstar,grad_norm_sq,A_k,a_k,tau_k,L_hat,oracle_value_calls,oracle_grad_calls,block_min_calls,"
    "wall_time_s";

/// Numbers use 17 significant digits; L_hat is empty when absent. Wall time is
/// written as 0 unless `wall_time` is set, so traces are byte-reproducible.
void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace, double f_star, bool wall_time);

/// Throws IoError on a header mismatch or malformed row.
std::vector<TraceRecord> read_trace_csv(std::istream& is);

std::string format_number(double x);

}  // namespace altmin::bench
