#include "altmin/aam.hpp"
#include "altmin/agmsdr.hpp"
#include "altmin/line_search.hpp"
#include "altmin/problems/entropic_ot.hpp"
#include "altmin/problems/generators.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace altmin;

static void BM_EotValueGradient(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto p = problems::make_desk_eot(N, 1.0, 1);
    const Point z = Point::LinSpaced(2 * N, -1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(p.value_and_gradient(z));
}
BENCHMARK(BM_EotValueGradient)->Arg(64)->Arg(256);

static void BM_EotBlockMinimize(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto p = problems::make_desk_eot(N, 1.0, 1);
    Point z = Point::Zero(2 * N);
    std::size_t block = 0;
    for (auto _ : state) {
        z = p.block_minimize(z, block);
        block ^= 1;
    }
}
BENCHMARK(BM_EotBlockMinimize)->Arg(64)->Arg(256);

static void BM_LineSearchUnitInterval(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(line_search_unit_interval([](double t) { return std::cos(3.0 * t) + t * t; }));
}
BENCHMARK(BM_LineSearchUnitInterval);

static void BM_AamStepSplitQuadratic(benchmark::State& state) {
    const auto gen = problems::generate_quadratic(100, 1000, 10, 10, 1);
    const auto p = gen.split();
    AamState s = aam_init(p, Point::Zero(100), 0.0);
    for (auto _ : state) {
        auto out = aam_step(s, p, AamMode::adaptive(), {});
        if (out.converged || out.stalled) s = aam_init(p, Point::Zero(100), 0.0);
    }
}
BENCHMARK(BM_AamStepSplitQuadratic);

static void BM_AgmsdrStepSplitQuadratic(benchmark::State& state) {
    const auto gen = problems::generate_quadratic(100, 1000, 10, 10, 1);
    const auto p = gen.split();
    AgmsdrState s = agmsdr_init(p, Point::Zero(100));
    for (auto _ : state) {
        auto out = agmsdr_step_linesearch(s, p, {});
        if (out.converged || out.stalled) s = agmsdr_init(p, Point::Zero(100));
    }
}
BENCHMARK(BM_AgmsdrStepSplitQuadratic);
BENCHMARK_MAIN();
