#include "altmin/bench/config.hpp"

#include "altmin/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace altmin::bench {
namespace {

using boost::property_tree::ptree;

[[noreturn]] void config_error(const std::string& what) { raise(ErrorCode::ConfigError, what); }

template <class T>
T convert(const std::string& section, const std::string& key, const std::string& raw) {
    std::istringstream is(raw);
    T value{};
    is >> value;
    if (is.fail() || !(is >> std::ws).eof()) config_error("[" + section + "] " + key + ": cannot parse '" + raw + "'");
    return value;
}

bool convert_bool(const std::string& section, const std::string& key, const std::string& raw) {
    if (raw == "true" || raw == "1" || raw == "yes" || raw == "on") return true;
    if (raw == "false" || raw == "0" || raw == "no" || raw == "off") return false;
    config_error("[" + section + "] " + key + ": expected a boolean, got '" + raw + "'");
}

// Walks a section, dispatching each key to a handler; rejects unknown keys.
class SectionReader {
public:
    SectionReader(std::string name, const ptree& tree) : name_(std::move(name)), tree_(tree) {}

    template <class T>
    void read(const std::string& key, T& out) {
        known_.insert(key);
        if (auto raw = tree_.get_optional<std::string>(ptree::path_type(key, '\0'))) {
            if constexpr (std::is_same_v<T, std::string>)
                out = *raw;
            else if constexpr (std::is_same_v<T, bool>)
                out = convert_bool(name_, key, *raw);
            else
                out = convert<T>(name_, key, *raw);
        }
    }

    template <class T>
    void read(const std::string& key, std::optional<T>& out) {
        known_.insert(key);
        if (auto raw = tree_.get_optional<std::string>(ptree::path_type(key, '\0'))) out = convert<T>(name_, key, *raw);
    }

    void finish() const {
        for (const auto& [key, child] : tree_) {
            if (!known_.count(key)) config_error("[" + name_ + "] unknown key '" + key + "'");
            if (!child.empty()) config_error("[" + name_ + "] nested key '" + key + "'");
        }
    }

private:
    std::string name_;
    const ptree& tree_;
    std::set<std::string> known_;
};

void read_experiment(const ptree& tree, ExperimentConfig& cfg) {
    SectionReader r("experiment", tree);
    std::string axis = "oracle_calls";
    std::string metric = "gap";
    r.read("name", cfg.name);
    r.read("output_dir", cfg.output_dir);
    r.read("max_iters", cfg.max_iters);
    r.read("budget", cfg.budget);
    r.read("grad_tol_rel", cfg.grad_tol_rel);
    r.read("grad_tol_abs", cfg.grad_tol_abs);
    r.read("plot_axis", axis);
    r.read("plot_metric", metric);
    r.read("certificates", cfg.certificates);
    r.read("parallel", cfg.parallel);
    r.read("record_wall_time", cfg.record_wall_time);
    r.finish();
    cfg.plot_axis = parse_axis(axis);
    cfg.plot_metric = parse_metric(metric);
    if (cfg.name.empty() || cfg.name.find('/') != std::string::npos)
        config_error("[experiment] name must be a nonempty path component");
    if (cfg.max_iters < 1) config_error("[experiment] max_iters must be positive");
    if (cfg.budget < 0) config_error("[experiment] budget must be nonnegative");
}

void read_problem(const ptree& tree, ProblemSpec& p) {
    SectionReader r("problem", tree);
    r.read("family", p.family);
    r.read("dim", p.dim);
    r.read("kappa", p.kappa);
    r.read("kappa1", p.kappa1);
    r.read("kappa2", p.kappa2);
    r.read("N", p.N);
    r.read("gamma", p.gamma);
    r.read("seed", p.seed);
    r.read("path", p.path);
    r.finish();
    if (p.family != "quadratic" && p.family != "split_quadratic" && p.family != "eot" && p.family != "file")
        config_error("[problem] unknown family '" + p.family + "'");
    if (p.family == "file" && p.path.empty()) config_error("[problem] family = file needs a path");
    if (p.dim < 2) config_error("[problem] dim must be at least 2");
    if (p.N < 1) config_error("[problem] N must be positive");
    if (!(p.gamma > 0.0)) config_error("[problem] gamma must be positive");
}

MethodSpec read_method(const std::string& section, const std::string& name, const ptree& tree) {
    MethodSpec m;
    m.name = name;
    m.type = name;
    SectionReader r(section, tree);
    r.read("type", m.type);
    r.read("variant", m.variant);
    r.read("mode", m.mode);
    r.read("mu", m.mu);
    r.read("L", m.L);
    r.read("L0", m.catalyst.L0);
    r.read("L_u", m.catalyst.L_u);
    r.read("L_d", m.catalyst.L_d);
    r.read("alpha", m.catalyst.alpha);
    r.read("beta", m.catalyst.beta);
    r.read("gamma", m.catalyst.gamma);
    r.read("max_outer", m.catalyst.max_outer);
    r.read("inner_budget", m.catalyst.inner_budget);
    r.finish();
    if (m.type != "agmsdr" && m.type != "aam" && m.type != "catalyst" && m.type != "sinkhorn" && m.type != "gd")
        config_error("[" + section + "] unknown type '" + m.type + "'");
    if (m.variant != "known_L" && m.variant != "linesearch")
        config_error("[" + section + "] variant must be known_L or linesearch");
    if (m.mode != "known_L" && m.mode != "adaptive") config_error("[" + section + "] mode must be known_L or adaptive");
    if (!(m.mu >= 0.0)) config_error("[" + section + "] mu must be nonnegative");
    if (m.L && !(*m.L > 0.0)) config_error("[" + section + "] L must be positive");
    try {
        m.catalyst.validate();
    } catch (const Error& e) {
        config_error("[" + section + "] " + e.what());
    }
    return m;
}

}  // namespace

PlotAxis parse_axis(const std::string& s) {
    if (s == "oracle_calls") return PlotAxis::OracleCalls;
    if (s == "iteration" || s == "iterations") return PlotAxis::Iterations;
    config_error("plot axis must be oracle_calls or iterations, got '" + s + "'");
}

PlotMetric parse_metric(const std::string& s) {
    if (s == "gap") return PlotMetric::Gap;
    if (s == "grad_norm") return PlotMetric::GradNorm;
    config_error("plot metric must be gap or grad_norm, got '" + s + "'");
}

static std::vector<std::string> section_headers(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] != '[') continue;
        const auto e = line.find(']', b);
        if (e == std::string::npos) continue;
        std::string name = line.substr(b + 1, e - b - 1);
        const auto nb = name.find_first_not_of(" \t");
        const auto ne = name.find_last_not_of(" \t");
        out.push_back(nb == std::string::npos ? std::string() : name.substr(nb, ne - nb + 1));
    }
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    ptree root;
    try {
        std::istringstream is(text);
        boost::property_tree::ini_parser::read_ini(is, root);
    } catch (const boost::property_tree::ini_parser_error& e) {
        config_error(std::string("malformed config: ") + e.what());
    }

    for (const auto& [key, tree] : root)
        if (tree.empty() && !tree.data().empty()) config_error("key '" + key + "' outside any section");

    ExperimentConfig cfg;
    cfg.source_text = text;
    std::set<std::string> method_names;
    const ptree empty;
    // read_ini drops sections without keys, so take the order from the headers.
    for (const std::string& section : section_headers(text)) {
        const auto child = root.find(section);
        const ptree& tree = child == root.not_found() ? empty : child->second;
        if (section == "experiment") {
            read_experiment(tree, cfg);
        } else if (section == "problem") {
            read_problem(tree, cfg.problem);
        } else if (section.rfind("method.", 0) == 0) {
            const std::string name = section.substr(7);
            if (name.empty() || name.find('/') != std::string::npos)
                config_error("[" + section + "] method name must be a nonempty path component");
            if (!method_names.insert(name).second) config_error("duplicate method '" + name + "'");
            cfg.methods.push_back(read_method(section, name, tree));
        } else {
            config_error("unknown section [" + section + "]");
        }
    }
    if (cfg.methods.empty()) config_error("config lists no methods");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) config_error("cannot open config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace altmin::bench
