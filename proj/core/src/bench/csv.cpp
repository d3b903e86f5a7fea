#include "altmin/bench/csv.hpp"

#include "altmin/errors.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace altmin::bench {
namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_double(const std::string& s, int line) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        raise(ErrorCode::IoError, "trace line " + std::to_string(line) + ": bad number '" + s + "'");
    return x;
}

std::int64_t parse_count(const std::string& s, int line) {
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || x < 0)
        raise(ErrorCode::IoError, "trace line " + std::to_string(line) + ": bad count '" + s + "'");
    return x;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace, double f_star, bool wall_time) {
    os << kTraceHeader << '\n';
    for (const auto& r : trace) {
        os << r.k << ',' << format_number(r.f_val) << ',' << format_number(r.f_val - f_star) << ','
           << format_number(r.grad_norm_sq) << ',' << format_number(r.A_k) << ',' << format_number(r.a_k) << ','
           << format_number(r.tau_k) << ',' << (r.L_hat ? format_number(*r.L_hat) : std::string()) << ','
           << r.calls.value << ',' << r.calls.gradient << ',' << r.calls.block_min << ','
           << format_number(wall_time ? r.wall_time : 0.0) << '\n';
    }
}

std::vector<TraceRecord> read_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) raise(ErrorCode::IoError, "empty trace file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTraceHeader) raise(ErrorCode::IoError, "unexpected trace header: " + line);

    std::vector<TraceRecord> trace;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_row(line);
        if (cells.size() != 12)
            raise(ErrorCode::IoError, "trace line " + std::to_string(lineno) + ": expected 12 columns");
        TraceRecord r;
        r.k = static_cast<int>(parse_count(cells[0], lineno));
        r.f_val = parse_double(cells[1], lineno);
        r.grad_norm_sq = parse_double(cells[3], lineno);
        r.A_k = parse_double(cells[4], lineno);
        r.a_k = parse_double(cells[5], lineno);
        r.tau_k = parse_double(cells[6], lineno);
        if (!cells[7].empty()) r.L_hat = parse_double(cells[7], lineno);
        r.calls.value = parse_count(cells[8], lineno);
        r.calls.gradient = parse_count(cells[9], lineno);
        r.calls.block_min = parse_count(cells[10], lineno);
        r.wall_time = parse_double(cells[11], lineno);
        trace.push_back(r);
    }
    return trace;
}

}  // namespace altmin::bench
