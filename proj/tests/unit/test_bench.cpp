#include "altmin/aam.hpp"
#include "altmin/bench/certificates.hpp"
#include "altmin/bench/config.hpp"
#include "altmin/bench/csv.hpp"
#include "altmin/bench/experiment.hpp"
#include "altmin/bench/plot.hpp"
#include "altmin/errors.hpp"
#include "altmin/problems/generators.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace altmin;
using namespace altmin::bench;
namespace fs = std::filesystem;

namespace {

const char* kSmallConfig = R"(
[experiment]
name = small
max_iters = 60

[problem]
family = split_quadratic
dim = 20
kappa = 100
kappa1 = 5
kappa2 = 5
seed = 3

[method.agm]
type = agmsdr
variant = linesearch

[method.aam]
type = aam
mode = adaptive
)";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("altmin_test_" + name);
    fs::remove_all(p);
    return p;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("config parsing") {
    const auto cfg = parse_config(kSmallConfig);
    CHECK(cfg.name == "small");
    CHECK(cfg.max_iters == 60);
    CHECK(cfg.problem.dim == 20);
    CHECK(cfg.problem.kappa == 100);
    REQUIRE(cfg.methods.size() == 2);
    CHECK(cfg.methods[0].name == "agm");
    CHECK(cfg.methods[1].type == "aam");
    CHECK(cfg.plot_axis == PlotAxis::OracleCalls);
    CHECK(cfg.certificates);

    const auto d = parse_config("[method.sinkhorn]\n[problem]\nfamily = eot\n");
    CHECK(d.methods[0].type == "sinkhorn");
    CHECK(d.problem.N == 64);
    CHECK(d.problem.gamma == 1.0);

    CHECK(code_of([] { parse_config("[experiment]\nname = x\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config("[experiment]\nbogus = 1\n[method.gd]\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config("[method.agm]\ntype = agmsdr\nvariant = fast\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config("[problem]\nfamily = cubic\n[method.gd]\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config("[problem]\ndim = many\n[method.gd]\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config("[sideways]\n[method.gd]\n"); }) == ErrorCode::ConfigError);
}

TEST_CASE("trace csv round-trip") {
    std::vector<TraceRecord> trace(3);
    for (int k = 0; k < 3; ++k) {
        trace[k].k = k;
        trace[k].f_val = 1.0 / (k + 3.0);
        trace[k].grad_norm_sq = std::pow(10.0, -k) / 7.0;
        trace[k].A_k = k * 0.1;
        trace[k].a_k = 0.1;
        trace[k].tau_k = 1.0;
        if (k > 0) trace[k].L_hat = 1.0 / 3.0 * k;
        trace[k].calls = OracleCounts{k + 1, 2 * k, k};
        trace[k].wall_time = 0.25;
    }
    std::stringstream ss;
    write_trace_csv(ss, trace, 0.125, false);
    CHECK(ss.str().rfind(std::string(kTraceHeader) + "\n", 0) == 0);
    const auto back = read_trace_csv(ss);
    REQUIRE(back.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(back[k].k == k);
        CHECK(back[k].f_val == trace[k].f_val);
        CHECK(back[k].grad_norm_sq == trace[k].grad_norm_sq);
        CHECK(back[k].A_k == trace[k].A_k);
        CHECK(back[k].L_hat == trace[k].L_hat);
        CHECK(back[k].calls.gradient == trace[k].calls.gradient);
        CHECK(back[k].calls.block_min == trace[k].calls.block_min);
        CHECK(back[k].wall_time == 0.0);
    }
    std::stringstream bad("k,f\n0,1\n");
    CHECK_THROWS_AS(read_trace_csv(bad), Error);
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("facts round-trip") {
    ProblemFacts f;
    f.method = "aam_adaptive";
    f.L = 3.5;
    f.mu_cert = 0.001;
    f.mu_solver = 0.0;
    f.R = 12.0;
    f.f_star = 0.0;
    f.n = 2;
    std::stringstream ss;
    write_facts(ss, f);
    const auto g = read_facts(ss);
    CHECK(g.method == f.method);
    CHECK(g.L == f.L);
    CHECK(g.mu_cert == f.mu_cert);
    CHECK(g.R == f.R);
    CHECK(g.n == 2);
    CHECK_FALSE(g.f_star_is_proxy);
    std::stringstream bad("method = gd\nweird = 1\n");
    CHECK_THROWS_AS(read_facts(bad), Error);
}

TEST_CASE("certificate verification") {
    const auto gen = problems::generate_quadratic(20, 100, 5, 5, 4);
    const auto prob = gen.split();
    AamOptions opts;
    opts.stop.max_iters = 80;
    const auto run = run_aam(prob, Point::Zero(20), opts);
    ProblemFacts f;
    f.method = "aam_adaptive";
    f.L = *prob.known_L();
    f.mu_solver = 0.0;
    f.R = gen.x_star.norm();
    f.f_star = 0.0;
    f.n = 2;

    SUBCASE("mu = 0 passes vacuously") {
        f.mu_cert = 0.0;
        const auto rep = verify_certificates(run.trace, f);
        CHECK(rep.passed());
        for (const auto& r : rep.results) CHECK(r.status == CertificateStatus::Pass);
    }
    SUBCASE("corrupted A_k fails with a violation size") {
        auto bad = run.trace;
        bad[10].A_k *= 1e-3;
        bad[10].psi_min.reset();
        const auto rep = verify_certificates(bad, f);
        CHECK_FALSE(rep.passed());
        bool found = false;
        for (const auto& r : rep.results)
            if (r.name == "ak_growth") {
                found = true;
                CHECK(r.status == CertificateStatus::Fail);
                CHECK(r.violations >= 1);
                CHECK(r.max_violation > 0.5);
            }
        CHECK(found);
    }
    SUBCASE("missing constants are skipped") {
        ProblemFacts bare;
        bare.method = "aam_adaptive";
        const auto rep = verify_certificates(run.trace, bare);
        CHECK(rep.passed());
        int skipped = 0;
        for (const auto& r : rep.results) skipped += r.status == CertificateStatus::Skipped;
        CHECK(skipped == 3);
    }
}

TEST_CASE("svg rendering") {
    const PlotSeries one{"solo", {0.0}, {1.0}};
    const std::string s1 = render_svg({one}, "t", "x", "y");
    CHECK(s1.rfind("<svg", 0) == 0);
    CHECK(s1.find("solo") != std::string::npos);
    const PlotSeries a{"a & b", {0, 1, 2}, {1, 1e-3, 0.0}};
    const PlotSeries b{"c", {0, 5}, {10, 1e-8}};
    const std::string s2 = render_svg({a, b}, "two", "x", "y");
    CHECK(s2 == render_svg({a, b}, "two", "x", "y"));
    CHECK(s2.find("a &amp; b") != std::string::npos);
    CHECK(s2.find("polyline") != std::string::npos);
    CHECK_THROWS_AS(render_svg({PlotSeries{"e", {}, {}}}, "t", "x", "y"), Error);
}

TEST_CASE("experiment runs are reproducible") {
    const auto cfg = parse_config(kSmallConfig);
    const fs::path r1 = scratch("exp1"), r2 = scratch("exp2");
    const auto a1 = run_experiment(cfg, r1.string());
    const auto a2 = run_experiment(cfg, r2.string());
    CHECK(a1.exit_code() == 0);
    for (const char* f : {"agm.csv", "aam.csv", "certificates.csv", "convergence.svg", "summary.txt", "config.ini"}) {
        CAPTURE(f);
        REQUIRE(fs::exists(r1 / "small" / f));
        CHECK(slurp(r1 / "small" / f) == slurp(r2 / "small" / f));
    }
    for (const auto& m : a1.methods) {
        CAPTURE(m.spec.name);
        CHECK_FALSE(m.failed);
        const auto& t = m.run.trace;
        for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k].f_val < t[k - 1].f_val);
    }
    CHECK(slurp(r1 / "small" / "summary.txt").find("RESULT: pass") != std::string::npos);
    fs::remove_all(r1);
    fs::remove_all(r2);
}
