#pragma once

#include "altmin/bench/certificates.hpp"
#include "altmin/bench/config.hpp"
#include "altmin/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace altmin::bench {

struct MethodOutcome {
    MethodSpec spec;
    RunResult run;
    bool failed = false;
    std::string error;
    ProblemFacts facts;
    CertificateReport report;
};

struct RunArtifact {
    std::string output_dir;
    std::vector<MethodOutcome> methods;
    double f_star = 0.0;
    bool f_star_is_proxy = false;
    std::vector<std::string> files;

    /// 0 iff no method failed and every enabled certificate passed.
    int exit_code() const;
};

/// Environment variable that replaces the configured output root.
inline constexpr const char* kOutputRootEnv = "ALTMIN_BENCH_OUTPUT";

/// Runs each configured method from the origin on its own copy of the shared
/// problem instance and writes, under <root>/<name>/:
///   config.ini, <method>.csv, <method>.facts, certificates.csv,
///   convergence.svg, summary.txt
/// `output_root` (or the environment variable) overrides config.output_dir.
RunArtifact run_experiment(const ExperimentConfig& config, std::optional<std::string> output_root = std::nullopt);

/// Problem families accepted by [problem] family, with their keys.
std::vector<std::string> list_problems();

}  // namespace altmin::bench
