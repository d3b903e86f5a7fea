#pragma once

#include "altmin/trace.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace altmin::bench {

/// Constants a trace is checked against. `method` is one of agmsdr_known_L,
/// agmsdr_linesearch, aam_known_L, aam_adaptive, catalyst, sinkhorn, gd.
struct ProblemFacts {
    std::string method;
    std::optional<double> L;
    std::optional<double> mu_cert;    ///< PL / strong-convexity constant used by certificates
    std::optional<double> mu_solver;  ///< mu the solver ran with
    std::optional<double> R;          ///< ||x* - x0||
    std::optional<double> f_star;
    bool f_star_is_proxy = false;
    int n = 1;
};

void write_facts(std::ostream& os, const ProblemFacts& facts);
/// key = value lines; throws IoError on malformed input.
ProblemFacts read_facts(std::istream& is);

enum class CertificateStatus { Pass, Fail, Skipped };

struct CertificateResult {
    std::string name;
    CertificateStatus status = CertificateStatus::Skipped;
    int checked = 0;
    int violations = 0;
    double max_violation = 0.0;  ///< largest relative excess over the bound
    std::string note;
};

struct CertificateReport {
    std::vector<CertificateResult> results;

    bool passed() const;
};

/// Relative slack on every bound comparison.
inline constexpr double kCertificateSlack = 1e-6;

/// Runs every certificate applicable to facts.method; certificates whose
/// constants are missing are reported as skipped.
CertificateReport verify_certificates(const std::vector<TraceRecord>& trace, const ProblemFacts& facts);

std::string to_string(CertificateStatus s);

}  // namespace altmin::bench
