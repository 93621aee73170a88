#include "qcircle/equidist.hpp"
#include "qcircle/exact_formula.hpp"
#include "qcircle/goettsche.hpp"
#include "qcircle/maass_trace.hpp"
#include "qcircle/partitions.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace qc;

static void BM_PartitionRecurrence(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(p_recurrence(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_PartitionRecurrence)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_PartitionEulerProduct(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(p_euler_product(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_PartitionEulerProduct)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Rademacher(benchmark::State& st) {
    long n = st.range(0);
    long K = static_cast<long>(std::ceil(2 * std::sqrt(static_cast<double>(n))));
    for (auto _ : st) benchmark::DoNotOptimize(rademacher_p(n, K));
}
BENCHMARK(BM_Rademacher)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_GoettscheExpand(benchmark::State& st) {
    auto S = HodgeDiamond::from_triple(0, 1, 20);
    for (auto _ : st) benchmark::DoNotOptimize(goettsche_expand(S, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_GoettscheExpand)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_XiTruncated(benchmark::State& st) {
    auto ctx = make_context(HodgeDiamond::from_triple(0, 0, 1), 1, 3, 1, 2, 192);
    for (auto _ : st) benchmark::DoNotOptimize(xi_truncated(ctx, 5, st.range(0)));
}
BENCHMARK(BM_XiTruncated)->Arg(2)->Arg(75)->Unit(benchmark::kMillisecond);

static void BM_ConvergenceReport(benchmark::State& st) {
    auto S = HodgeDiamond::from_triple(0, 0, 1);
    for (auto _ : st) benchmark::DoNotOptimize(convergence_report(S, 3, 2, {5, 10, 15, 20, 25}));
}
BENCHMARK(BM_ConvergenceReport)->Unit(benchmark::kMillisecond);

static void BM_MaassTrace(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(trace(st.range(0), 256));
}
BENCHMARK(BM_MaassTrace)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
