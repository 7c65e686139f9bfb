#include <benchmark/benchmark.h>

#include "thompson/cayley.hpp"

using namespace thompson;

namespace {

void run(benchmark::State &state, bool parallel) {
    const int p = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    BfsOptions opts;
    opts.parallel = parallel;
    std::size_t size = 0;
    for (auto _ : state) {
        auto ball = bfs_ball(p, r, opts);
        size = ball.size();
        benchmark::DoNotOptimize(size);
    }
    state.counters["elements"] = static_cast<double>(size);
    state.counters["elements/s"] =
        benchmark::Counter(static_cast<double>(size), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_BfsSerial(benchmark::State &state) { run(state, false); }
void BM_BfsParallel(benchmark::State &state) { run(state, true); }

void BM_VerifyMetric(benchmark::State &state) {
    auto ball = bfs_ball(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_metric(ball));
    state.counters["elements"] = static_cast<double>(ball.size());
}

} // namespace

BENCHMARK(BM_BfsSerial)->Args({1, 6})->Args({1, 8})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsParallel)->Args({1, 6})->Args({1, 8})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyMetric)->Args({1, 6})->Args({2, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
