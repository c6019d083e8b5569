#include <benchmark/benchmark.h>

#include <random>

#include "emext/chars.hpp"
#include "emext/oracle.hpp"
#include "emext/rootsys.hpp"

using namespace emext;

static void BM_SmithRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> d(-50, 50);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithRandom)->Arg(4)->Arg(8)->Arg(16);

static void BM_SmithE8(benchmark::State& state) {
    auto cd = cartan_data("E8");
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(cd->cartan()));
}
BENCHMARK(BM_SmithE8);

// Fresh CartanData per iteration so the multiplicity cache does not hide the work.
static void BM_Freudenthal(benchmark::State& state) {
    const RootSystemSpec spec = RootSystemSpec::parse(state.range(0) == 0 ? "A3" : "B3");
    for (auto _ : state) {
        CartanData cd = build(spec);
        benchmark::DoNotOptimize(weight_multiplicities(cd, {2, 1, 2}));
    }
}
BENCHMARK(BM_Freudenthal)->Arg(0)->Arg(1);

static void BM_Klimyk(benchmark::State& state) {
    auto cd = cartan_data("A3");
    const Weight l{2, 1, 1}, m{1, 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(*cd, l, m));
}
BENCHMARK(BM_Klimyk);

static void BM_OracleCurrentA2(benchmark::State& state) {
    MatrixLie a2 = builtin_simple("A2");
    FinDimLie l = truncated_current(a2.lie, 2);
    RatMatrix ev(8, 16);
    for (std::size_t i = 0; i < 8; ++i) ev(i, i) = 1;
    FinModule v = pullback(evaluation_module(a2, IrrepLabel{{1, 1}, {}}), ev);
    for (auto _ : state) benchmark::DoNotOptimize(ext1_dim(l, v, v));
}
BENCHMARK(BM_OracleCurrentA2)->Unit(benchmark::kMillisecond);

static void BM_OracleOnsagerFree(benchmark::State& state) {
    OnsagerPair p = builtin_onsager_sl2();
    OnsagerQuotient q = build_onsager_quotient(p, Rat(3));
    FinModule v = pullback(sl_module(p.g_basis, {2}), q.evaluation);
    for (auto _ : state) benchmark::DoNotOptimize(ext1_dim(q.lie, v, v));
}
BENCHMARK(BM_OracleOnsagerFree)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
