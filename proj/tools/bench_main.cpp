// bench: run method-comparison experiments and check rate certificates.

#include "altmin/bench/certificates.hpp"
#include "altmin/bench/config.hpp"
#include "altmin/bench/csv.hpp"
#include "altmin/bench/experiment.hpp"
#include "altmin/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace altmin;
using namespace altmin::bench;

void print_report(const std::string& label, const CertificateReport& report) {
    if (report.results.empty()) std::cout << label << ": no certificates apply\n";
    for (const auto& c : report.results) {
        std::cout << label << ' ' << c.name << ": " << to_string(c.status) << " (" << c.checked << " checked, "
                  << c.violations << " violations";
        if (c.violations) std::cout << ", max relative violation " << format_number(c.max_violation);
        std::cout << ')';
        if (!c.note.empty()) std::cout << " [" << c.note << ']';
        std::cout << '\n';
    }
}

int cmd_run(const std::string& path, const std::string& output_root, const std::string& axis,
            const std::string& metric, bool serial) {
    auto config = load_config(path);
    if (!axis.empty()) config.plot_axis = parse_axis(axis);
    if (!metric.empty()) config.plot_metric = parse_metric(metric);
    if (serial) config.parallel = false;
    const auto art = run_experiment(config, output_root.empty() ? std::nullopt : std::optional(output_root));
    for (const auto& m : art.methods) {
        if (m.failed) {
            std::cout << m.spec.name << ": error: " << m.error << '\n';
            continue;
        }
        std::cout << m.spec.name << ": " << m.run.iterations() << " iterations, final gap "
                  << format_number(m.run.trace.back().f_val - art.f_star) << '\n';
        print_report("  " + m.spec.name, m.report);
    }
    std::cout << "artifacts in " << art.output_dir << '\n';
    return art.exit_code();
}

int cmd_verify(const std::string& trace_path, const std::string& facts_path) {
    std::ifstream trace_in(trace_path);
    if (!trace_in) raise(ErrorCode::IoError, "cannot open '" + trace_path + "'");
    std::ifstream facts_in(facts_path);
    if (!facts_in) raise(ErrorCode::IoError, "cannot open '" + facts_path + "'");
    const auto trace = read_trace_csv(trace_in);
    const auto facts = read_facts(facts_in);
    const auto report = verify_certificates(trace, facts);
    print_report(facts.method, report);
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accelerated alternating-minimization experiments"};
    app.require_subcommand(1);

    std::string config_path, output_root, axis, metric;
    bool serial = false;
    auto* run = app.add_subcommand("run", "Run every method in an experiment config and write artifacts");
    run->add_option("config", config_path, "Experiment config (INI sections [experiment], [problem], [method.<name>])")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("-o,--output-root", output_root,
                    std::string("Output root directory; overrides the config and $") + kOutputRootEnv);
    run->add_option("--axis", axis, "Plot x axis: oracle_calls (default) or iterations");
    run->add_option("--metric", metric, "Plot y axis: gap (default) or grad_norm");
    run->add_flag("--serial", serial, "Run methods one after another instead of in parallel");

    std::string trace_path, facts_path;
    auto* verify = app.add_subcommand("verify", "Check a CSV trace against the rate certificates for its method");
    verify->add_option("trace", trace_path, "Trace CSV written by `bench run`")->required()->check(CLI::ExistingFile);
    verify->add_option("facts", facts_path, "Facts file (key = value) written by `bench run`")
        ->required()
        ->check(CLI::ExistingFile);

    auto* list = app.add_subcommand("list-problems", "List problem families and their config keys");

    app.footer(std::string("Environment:\n  ") + kOutputRootEnv + "  output root for `bench run` (overridden by -o)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config_path, output_root, axis, metric, serial);
        if (*verify) return cmd_verify(trace_path, facts_path);
        if (*list) {
            for (const auto& line : list_problems()) std::cout << line << '\n';
            return 0;
        }
    } catch (const altmin::Error& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
