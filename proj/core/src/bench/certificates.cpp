#include "altmin/bench/certificates.hpp"

#include "altmin/aam.hpp"
#include "altmin/agmsdr.hpp"
#include "altmin/bench/csv.hpp"
#include "altmin/errors.hpp"
#include "altmin/estimate_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

namespace altmin::bench {
namespace {

bool is_agmsdr(const std::string& m) { return m == "agmsdr_known_L" || m == "agmsdr_linesearch"; }
bool is_aam(const std::string& m) { return m == "aam_known_L" || m == "aam_adaptive"; }

// Accumulates "observed <= bound" comparisons for one certificate.
struct Checker {
    CertificateResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void upper(double observed, double bound, double slack) {
        ++result.checked;
        if (observed <= bound + slack) return;
        ++result.violations;
        const double excess = (observed - bound) / std::max(std::abs(bound), 1e-300);
        result.max_violation = std::max(result.max_violation, excess);
    }
    void upper(double observed, double bound) { upper(observed, bound, kCertificateSlack * std::abs(bound)); }
    void lower(double observed, double bound) {
        ++result.checked;
        if (observed >= bound - kCertificateSlack * std::abs(bound)) return;
        ++result.violations;
        result.max_violation = std::max(result.max_violation, (bound - observed) / std::max(std::abs(bound), 1e-300));
    }
    CertificateResult done() {
        result.status = result.violations == 0 ? CertificateStatus::Pass : CertificateStatus::Fail;
        return result;
    }
};

CertificateResult skipped(const std::string& name, const std::string& missing) {
    CertificateResult r;
    r.name = name;
    r.status = CertificateStatus::Skipped;
    r.note = std::string(to_string(ErrorCode::MissingFact)) + ": " + missing;
    return r;
}

CertificateResult failed(const std::string& name, const std::string& note) {
    CertificateResult r;
    r.name = name;
    r.status = CertificateStatus::Fail;
    r.violations = 1;
    r.note = note;
    return r;
}

CertificateResult estimate_sequence_check(const std::vector<TraceRecord>& trace) {
    const std::string name = "estimate_sequence";
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k) {
        if (!trace[k].psi_min) return skipped(name, "trace carries no psi values");
        const double Af = trace[k].A_k * trace[k].f_val;
        const double psi = *trace[k].psi_min;
        c.upper(Af, psi, invariant_slack(Af, psi));
    }
    return c.done();
}

CertificateResult agm_rate_check(const std::vector<TraceRecord>& trace, const ProblemFacts& f) {
    const std::string name = "agm_rate";
    if (!f.L) return skipped(name, "L");
    if (!f.R) return skipped(name, "R");
    if (!f.f_star) return skipped(name, "f_star");
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k)
        c.upper(trace[k].f_val - *f.f_star, agm_rate_bound(static_cast<int>(k), *f.L, *f.R));
    return c.done();
}

CertificateResult pl_check(const std::string& name, const std::vector<TraceRecord>& trace, const ProblemFacts& f) {
    if (!f.mu_cert) return skipped(name, "mu");
    if (!f.f_star) return skipped(name, "f_star");
    if (f.mu_solver && *f.mu_solver != 0.0) return skipped(name, "certificate applies to mu-oblivious runs only");
    std::vector<double> bounds;
    try {
        bounds = lemma1_certificate(trace, *f.mu_cert, trace.front().f_val, *f.f_star);
    } catch (const Error& e) {
        return failed(name, e.what());
    }
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k) c.upper(trace[k].f_val - *f.f_star, bounds[k]);
    auto r = c.done();
    if (*f.mu_cert == 0.0) r.note = "mu = 0: bound reduces to f0 - f*";
    return r;
}

CertificateResult ak_growth_check(const std::vector<TraceRecord>& trace, const ProblemFacts& f) {
    const std::string name = "ak_growth";
    if (!f.L) return skipped(name, "L");
    std::vector<double> bounds;
    try {
        bounds = ak_growth_certificate(trace, f.n, *f.L, f.mu_solver.value_or(0.0));
    } catch (const Error& e) {
        return failed(name, e.what());
    }
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k) c.lower(trace[k].A_k, bounds[k]);
    return c.done();
}

CertificateResult main_theorem_check(const std::vector<TraceRecord>& trace, const ProblemFacts& f) {
    const std::string name = "main_theorem";
    if (!f.L) return skipped(name, "L");
    if (!f.R) return skipped(name, "R");
    if (!f.f_star) return skipped(name, "f_star");
    Checker c(name);
    try {
        for (std::size_t k = 1; k < trace.size(); ++k)
            c.upper(trace[k].f_val - *f.f_star,
                    main_theorem_bound(static_cast<int>(k), f.n, *f.L, *f.R, f.mu_solver.value_or(0.0)));
    } catch (const Error& e) {
        return failed(name, e.what());
    }
    return c.done();
}

CertificateResult catalyst_coefficient_check(const std::vector<TraceRecord>& trace) {
    const std::string name = "catalyst_coefficient";
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k) {
        if (!trace[k].L_hat) return skipped(name, "trace carries no L values");
        const double lhs = trace[k].a_k * trace[k].a_k * *trace[k].L_hat;
        const double A = trace[k].A_k;
        ++c.result.checked;
        const double err = std::abs(lhs - A) / A;
        if (err > 1e-12) {
            ++c.result.violations;
            c.result.max_violation = std::max(c.result.max_violation, err);
        }
    }
    return c.done();
}

CertificateResult catalyst_ms_check(const std::vector<TraceRecord>& trace) {
    const std::string name = "catalyst_ms_condition";
    Checker c(name);
    for (std::size_t k = 1; k < trace.size(); ++k) {
        if (!trace[k].ms_lhs || !trace[k].ms_rhs) return skipped(name, "trace carries no inner-solve residuals");
        c.upper(*trace[k].ms_lhs, *trace[k].ms_rhs, 0.0);
    }
    return c.done();
}

void put(std::ostream& os, const char* key, const std::optional<double>& v) {
    if (v) os << key << " = " << format_number(*v) << '\n';
}

}  // namespace

bool CertificateReport::passed() const {
    return std::none_of(results.begin(), results.end(),
                        [](const CertificateResult& r) { return r.status == CertificateStatus::Fail; });
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Pass: return "pass";
        case CertificateStatus::Fail: return "FAIL";
        case CertificateStatus::Skipped: return "skipped";
    }
    return "?";
}

void write_facts(std::ostream& os, const ProblemFacts& f) {
    os << "method = " << f.method << '\n';
    put(os, "L", f.L);
    put(os, "mu_cert", f.mu_cert);
    put(os, "mu_solver", f.mu_solver);
    put(os, "R", f.R);
    put(os, "f_star", f.f_star);
    os << "f_star_is_proxy = " << (f.f_star_is_proxy ? "true" : "false") << '\n';
    os << "n = " << f.n << '\n';
}

ProblemFacts read_facts(std::istream& is) {
    ProblemFacts f;
    std::string line;
    int lineno = 0;
    auto number = [&](const std::string& s) {
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc() || ptr != s.data() + s.size())
            raise(ErrorCode::IoError, "facts line " + std::to_string(lineno) + ": bad number '" + s + "'");
        return x;
    };
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) raise(ErrorCode::IoError, "facts line " + std::to_string(lineno) + ": no '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "method") f.method = val;
        else if (key == "L") f.L = number(val);
        else if (key == "mu_cert") f.mu_cert = number(val);
        else if (key == "mu_solver") f.mu_solver = number(val);
        else if (key == "R") f.R = number(val);
        else if (key == "f_star") f.f_star = number(val);
        else if (key == "f_star_is_proxy") f.f_star_is_proxy = (val == "true");
        else if (key == "n") f.n = static_cast<int>(number(val));
        else raise(ErrorCode::IoError, "facts line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (f.method.empty()) raise(ErrorCode::IoError, "facts file names no method");
    return f;
}

CertificateReport verify_certificates(const std::vector<TraceRecord>& trace, const ProblemFacts& facts) {
    if (trace.empty()) raise(ErrorCode::InvalidArgument, "empty trace");
    CertificateReport report;
    auto& out = report.results;
    const std::string& m = facts.method;
    if (is_agmsdr(m)) {
        out.push_back(estimate_sequence_check(trace));
        out.push_back(agm_rate_check(trace, facts));
        if (m == "agmsdr_linesearch") out.push_back(pl_check("lemma1", trace, facts));
    } else if (is_aam(m)) {
        out.push_back(estimate_sequence_check(trace));
        out.push_back(ak_growth_check(trace, facts));
        out.push_back(main_theorem_check(trace, facts));
        if (m == "aam_adaptive") out.push_back(pl_check("aam_pl", trace, facts));
    } else if (m == "catalyst") {
        out.push_back(catalyst_coefficient_check(trace));
        out.push_back(catalyst_ms_check(trace));
    } else if (m != "sinkhorn" && m != "gd") {
        raise(ErrorCode::InvalidArgument, "unknown method kind '" + m + "'");
    }
    return report;
}

}  // namespace altmin::bench
