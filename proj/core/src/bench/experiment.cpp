#include "altmin/bench/experiment.hpp"

#include "altmin/aam.hpp"
#include "altmin/adaptive_gd.hpp"
#include "altmin/agmsdr.hpp"
#include "altmin/bench/csv.hpp"
#include "altmin/bench/plot.hpp"
#include "altmin/catalyst.hpp"
#include "altmin/errors.hpp"
#include "altmin/problems/entropic_ot.hpp"
#include "altmin/problems/generators.hpp"
#include "altmin/problems/quadratic.hpp"
#include "altmin/problems/serialization.hpp"
#include "altmin/problems/sinkhorn.hpp"
#include "altmin/problems/split_quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <sstream>

namespace altmin::bench {
namespace {

namespace fs = std::filesystem;
using problems::AnyProblem;

// Immutable problem prototype plus the constants certificates need.
struct Instance {
    AnyProblem proto;
    std::optional<Point> x_star;
    std::optional<double> mu;  ///< Hessian-based strong convexity
};

Instance build_instance(const ProblemSpec& p) {
    if (p.family == "split_quadratic" || p.family == "quadratic") {
        const auto g = problems::generate_quadratic(p.dim, p.kappa, p.kappa1, p.kappa2, p.seed);
        Instance inst{p.family == "quadratic" ? AnyProblem(g.assembled()) : AnyProblem(g.split()), g.x_star, {}};
        inst.mu = problems::strong_convexity_constant(g.W).hessian_value;
        return inst;
    }
    if (p.family == "eot") return Instance{problems::make_desk_eot(p.N, p.gamma, p.seed), {}, {}};
    Instance inst{problems::load_problem(p.path), {}, {}};
    if (auto* q = std::get_if<problems::QuadraticProblem>(&inst.proto)) {
        inst.x_star = q->minimizer();
        inst.mu = problems::strong_convexity_constant(q->W()).hessian_value;
    } else if (auto* s = std::get_if<problems::SplitQuadraticProblem>(&inst.proto)) {
        inst.x_star = s->assembled().minimizer();
        inst.mu = problems::strong_convexity_constant(s->assembled_W()).hessian_value;
    }
    return inst;
}

std::unique_ptr<Oracle> fresh_copy(const AnyProblem& proto) {
    return std::visit([](const auto& p) -> std::unique_ptr<Oracle> { return std::make_unique<std::decay_t<decltype(p)>>(p); },
                      proto);
}

std::string method_kind(const MethodSpec& m) {
    if (m.type == "agmsdr") return m.variant == "known_L" ? "agmsdr_known_L" : "agmsdr_linesearch";
    if (m.type == "aam") return m.mode == "known_L" ? "aam_known_L" : "aam_adaptive";
    return m.type;
}

RunResult run_gd(const Oracle& oracle, const Point& x0, const StoppingRule& stop) {
    AdaptiveGdOptions opts;
    opts.grad_tol = stop.threshold(oracle.monitor(x0).second.norm());
    opts.max_iters = stop.max_iters;
    if (stop.max_grad_equiv > 0)
        opts.stop_when = [&oracle, budget = stop.max_grad_equiv](const Point&, const Vector&) {
            return oracle.counts().gradient_equivalent() >= budget;
        };
    auto gd = adaptive_gd(oracle, x0, opts);
    RunResult r;
    r.x = gd.x;
    r.trace = std::move(gd.trace);
    r.reason = gd.iterations >= stop.max_iters ? StopReason::MaxIterations
               : (stop.max_grad_equiv > 0 && oracle.counts().gradient_equivalent() >= stop.max_grad_equiv)
                   ? StopReason::Budget
                   : StopReason::Converged;
    return r;
}

RunResult run_method(const MethodSpec& m, const Oracle& oracle, const StoppingRule& stop) {
    const Point x0 = Point::Zero(oracle.dim());
    if (m.type == "agmsdr") {
        AgmsdrOptions o;
        o.variant = m.variant == "known_L" ? AgmsdrVariant::KnownL : AgmsdrVariant::LineSearch;
        o.L = m.L;
        o.stop = stop;
        return run_agmsdr(oracle, x0, o);
    }
    if (m.type == "aam") {
        if (!oracle.has_block_minimizer()) raise(ErrorCode::Unsupported, "aam needs a problem with block minimizers");
        AamOptions o;
        o.mu = m.mu;
        o.stop = stop;
        if (m.mode == "known_L") {
            const auto L = m.L ? m.L : oracle.known_L();
            if (!L) raise(ErrorCode::MissingFact, "known_L mode needs an L");
            o.mode = AamMode::known(*L);
        }
        return run_aam(oracle, x0, o);
    }
    if (m.type == "catalyst") {
        CatalystOptions o;
        o.config = m.catalyst;
        o.stop = stop;
        return run_catalyst(oracle, x0, o);
    }
    if (m.type == "sinkhorn") {
        const auto* eot = dynamic_cast<const problems::EntropicOTDual*>(&oracle);
        if (!eot) raise(ErrorCode::Unsupported, "sinkhorn needs the eot family");
        return problems::run_sinkhorn(*eot, Vector::Zero(eot->size()), Vector::Zero(eot->size()), stop);
    }
    return run_gd(oracle, x0, stop);
}

std::string stop_reason_text(const MethodOutcome& o) {
    return o.failed ? "error: " + o.error : std::string(to_string(o.run.reason));
}

void write_file(const fs::path& path, const std::string& content, std::vector<std::string>& files) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) raise(ErrorCode::IoError, "write failed for '" + path.string() + "'");
    files.push_back(path.string());
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int RunArtifact::exit_code() const {
    for (const auto& m : methods)
        if (m.failed || !m.report.passed()) return 1;
    return 0;
}

std::vector<std::string> list_problems() {
    return {
        "split_quadratic  ||W z - b||^2 with W = [[A, B], [B^T, D]] split into two blocks; keys: dim, kappa, "
        "kappa1, kappa2, seed",
        "quadratic        same generator, single block (no block minimizer); keys: dim, kappa, kappa1, kappa2, "
        "seed",
        "eot              entropic optimal transport dual on a 1-D grid, two blocks (u, v); keys: N, gamma, seed",
        "file             problem saved with save_problem; keys: path",
    };
}

RunArtifact run_experiment(const ExperimentConfig& config, std::optional<std::string> output_root) {
    if (config.methods.empty()) raise(ErrorCode::ConfigError, "config lists no methods");
    if (!output_root) {
        if (const char* env = std::getenv(kOutputRootEnv); env && *env) output_root = env;
    }
    const fs::path dir = fs::path(output_root.value_or(config.output_dir)) / config.name;

    const Instance inst = build_instance(config.problem);
    StoppingRule stop;
    stop.grad_tol_rel = config.grad_tol_rel;
    stop.grad_tol_abs = config.grad_tol_abs;
    stop.max_iters = config.max_iters;
    stop.max_grad_equiv = config.budget;

    RunArtifact art;
    art.output_dir = dir.string();
    art.methods.resize(config.methods.size());

    // Each method gets its own oracle copy, so counters never mix.
    auto work = [&](std::size_t i) {
        MethodOutcome& out = art.methods[i];
        out.spec = config.methods[i];
        try {
            const auto oracle = fresh_copy(inst.proto);
            out.run = run_method(out.spec, *oracle, stop);
            out.facts.n = static_cast<int>(block_count(*oracle));
            out.facts.L = out.spec.L ? out.spec.L : oracle->known_L();
        } catch (const std::exception& e) {
            out.failed = true;
            out.error = e.what();
        }
    };
    if (config.parallel && config.methods.size() > 1) {
        std::vector<std::future<void>> jobs;
        for (std::size_t i = 0; i < config.methods.size(); ++i) jobs.push_back(std::async(std::launch::async, work, i));
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t i = 0; i < config.methods.size(); ++i) work(i);
    }

    if (inst.x_star) {
        const auto oracle = fresh_copy(inst.proto);
        art.f_star = oracle->monitor_value(*inst.x_star);
    } else {
        art.f_star_is_proxy = true;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& m : art.methods)
            for (const auto& r : m.run.trace) best = std::min(best, r.f_val);
        art.f_star = std::isfinite(best) ? best : 0.0;
    }

    fs::create_directories(dir);
    write_file(dir / "config.ini", config.source_text, art.files);

    std::ostringstream cert_csv;
    cert_csv << "method,certificate,status,checked,violations,max_violation,note\n";
    std::vector<PlotSeries> series;
    for (auto& m : art.methods) {
        m.facts.method = method_kind(m.spec);
        m.facts.mu_solver = m.spec.type == "aam" ? m.spec.mu : 0.0;
        m.facts.mu_cert = inst.mu;
        m.facts.f_star = art.f_star;
        m.facts.f_star_is_proxy = art.f_star_is_proxy;
        if (inst.x_star) m.facts.R = inst.x_star->norm();
        if (m.failed) continue;

        if (config.certificates) m.report = verify_certificates(m.run.trace, m.facts);
        for (const auto& c : m.report.results)
            cert_csv << m.spec.name << ',' << c.name << ',' << to_string(c.status) << ',' << c.checked << ','
                     << c.violations << ',' << format_number(c.max_violation) << ',' << csv_safe(c.note) << '\n';

        std::ostringstream csv;
        write_trace_csv(csv, m.run.trace, art.f_star, config.record_wall_time);
        write_file(dir / (m.spec.name + ".csv"), csv.str(), art.files);
        std::ostringstream facts;
        write_facts(facts, m.facts);
        write_file(dir / (m.spec.name + ".facts"), facts.str(), art.files);
        series.push_back(series_from_trace(m.spec.name, m.run.trace, config.plot_axis, config.plot_metric, art.f_star));
    }
    write_file(dir / "certificates.csv", cert_csv.str(), art.files);

    if (!series.empty()) {
        const fs::path svg = dir / "convergence.svg";
        emit_plot(series, config.name + " (" + config.problem.family + ")", axis_label(config.plot_axis),
                  metric_label(config.plot_metric), svg.string());
        art.files.push_back(svg.string());
    }

    std::ostringstream sum;
    sum << "experiment: " << config.name << '\n';
    sum << "problem: " << config.problem.family << '\n';
    sum << "f_star: " << format_number(art.f_star) << (art.f_star_is_proxy ? " (proxy: best value over all methods)" : "")
        << '\n';
    for (const auto& m : art.methods) {
        sum << '\n' << m.spec.name << " [" << method_kind(m.spec) << "]: " << stop_reason_text(m) << '\n';
        if (m.failed) continue;
        const auto& last = m.run.trace.back();
        sum << "  iterations: " << m.run.iterations() << '\n';
        sum << "  gradient-equivalent calls: " << last.calls.gradient_equivalent() << '\n';
        sum << "  final gap: " << format_number(last.f_val - art.f_star) << '\n';
        for (const auto& c : m.report.results) {
            sum << "  " << c.name << ": " << to_string(c.status);
            if (c.status == CertificateStatus::Fail) sum << " (max violation " << format_number(c.max_violation) << ')';
            if (!c.note.empty()) sum << " [" << c.note << ']';
            sum << '\n';
        }
    }
    sum << '\n' << (art.exit_code() == 0 ? "RESULT: pass" : "RESULT: FAIL") << '\n';
    write_file(dir / "summary.txt", sum.str(), art.files);
    return art;
}

}  // namespace altmin::bench
