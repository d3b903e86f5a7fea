#pragma once

#include "altmin/catalyst.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace altmin::bench {

// Experiment files are INI-style: an [experiment] section, a [problem]
// section and one [method.<name>] section per method, each holding
// `key = value` lines. Every key is optional; unknown keys are rejected.

struct ProblemSpec {
    std::string family = "split_quadratic";  ///< quadratic | split_quadratic | eot | file
    int dim = 100;
    double kappa = 1000.0;
    double kappa1 = 10.0;
    double kappa2 = 10.0;
    int N = 64;
    double gamma = 1.0;
    std::uint64_t seed = 1;
    std::string path;  ///< family = file
};

struct MethodSpec {
    std::string name;
    std::string type;                      ///< agmsdr | aam | catalyst | sinkhorn | gd
    std::string variant = "linesearch";    ///< agmsdr: known_L | linesearch
    std::string mode = "adaptive";         ///< aam: known_L | adaptive
    double mu = 0.0;                       ///< aam strong-convexity parameter fed to the solver
    std::optional<double> L;               ///< overrides the problem's Lipschitz constant
    CatalystConfig catalyst;
};

enum class PlotAxis { OracleCalls, Iterations };
enum class PlotMetric { Gap, GradNorm };

struct ExperimentConfig {
    std::string name = "experiment";
    std::string output_dir = "bench_out";
    ProblemSpec problem;
    std::vector<MethodSpec> methods;
    int max_iters = 500;
    std::int64_t budget = 0;  ///< gradient-equivalent calls per method; 0 = unlimited
    double grad_tol_rel = 1e-9;
    double grad_tol_abs = 0.0;
    PlotAxis plot_axis = PlotAxis::OracleCalls;
    PlotMetric plot_metric = PlotMetric::Gap;
    bool certificates = true;
    bool parallel = true;
    bool record_wall_time = false;
    /// Verbatim file contents, echoed into the output directory.
    std::string source_text;
};

/// Throws Error(ConfigError) on syntax errors, unknown keys, bad values or an
/// empty method list.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

PlotAxis parse_axis(const std::string& s);
PlotMetric parse_metric(const std::string& s);

}  // namespace altmin::bench
