// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "kscolor/ffproj.hpp"
#include "kscolor/kssolver.hpp"

namespace {

void BM_enumerate_S_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(ks::enumerate_S_serial(462, st.range(0)));
}
void BM_enumerate_S_omp(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(ks::enumerate_S(462, st.range(0)));
}

void BM_build_graph_serial(benchmark::State& st) {
    const auto s = ks::enumerate_S(462, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(ks::build_graph_serial(s));
    st.counters["vertices"] = static_cast<double>(s.size());
}
void BM_build_graph_omp(benchmark::State& st) {
    const auto s = ks::enumerate_S(462, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(ks::build_graph(s));
    st.counters["vertices"] = static_cast<double>(s.size());
}

void BM_projections_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(ks::enumerate_projections_serial(static_cast<unsigned>(st.range(0))));
}
void BM_projections_omp(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(ks::enumerate_projections(static_cast<unsigned>(st.range(0))));
}

void BM_solve_serial(benchmark::State& st) {
    const auto g = ks::build_graph(ks::enumerate_S(st.range(0), 15));
    for (auto _ : st) benchmark::DoNotOptimize(ks::solve(g));
}
void BM_solve_omp(benchmark::State& st) {
    const auto g = ks::build_graph(ks::enumerate_S(st.range(0), 15));
    for (auto _ : st) benchmark::DoNotOptimize(ks::solve_parallel(g));
}

}  // namespace

BENCHMARK(BM_enumerate_S_serial)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_S_omp)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_graph_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_graph_omp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_projections_serial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_projections_omp)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_serial)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_omp)->Arg(35)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
