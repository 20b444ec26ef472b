#include <benchmark/benchmark.h>

#include "reklab/connectivity.hpp"
#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/io.hpp"
#include "reklab/products.hpp"

using namespace reklab;

static void BM_StrongProduct(benchmark::State& state) {
    const Graph g = gen::harary(4, static_cast<int>(state.range(0)));
    const Graph h = gen::cycle(6);
    for (auto _ : state) {
        auto p = strong_product(g, h);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_StrongProduct)->Arg(16)->Arg(64)->Arg(256);

static void BM_Lambda3Oracle(benchmark::State& state) {
    const Graph product = strong_product(gen::cycle(5), gen::cycle(4)).graph();
    EngineOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto rc = lambda3(product, CutMethod::oracle, opts);
        benchmark::DoNotOptimize(rc);
    }
}
BENCHMARK(BM_Lambda3Oracle)->Unit(benchmark::kMillisecond);

static void BM_Lambda3Flow(benchmark::State& state) {
    const Graph product = strong_product(gen::cycle(5), gen::complete(4)).graph();
    EngineOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto rc = lambda3(product, CutMethod::flow, opts);
        benchmark::DoNotOptimize(rc);
    }
}
BENCHMARK(BM_Lambda3Flow)->Unit(benchmark::kMillisecond);

static void BM_Lambda2Flow(benchmark::State& state) {
    const Graph product = strong_product(gen::harary(3, 8), gen::cycle(6)).graph();
    EngineOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        auto rc = lambda2(product, CutMethod::flow, opts);
        benchmark::DoNotOptimize(rc);
    }
}
BENCHMARK(BM_Lambda2Flow)->Unit(benchmark::kMillisecond);

static void BM_LambdaFlow(benchmark::State& state) {
    const Graph g = gen::harary(4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto value = lambda(g);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_LambdaFlow)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Xi3Enumeration(benchmark::State& state) {
    const Graph product = strong_product(gen::harary(4, 16), gen::cycle(8)).graph();
    for (auto _ : state) {
        auto value = xi3(product);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_Xi3Enumeration)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    const Graph g = gen::circulant(static_cast<int>(state.range(0)), {1, 2, 3});
    for (auto _ : state) {
        auto back = read_graph6(write_graph6(g));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(32)->Arg(256);

BENCHMARK_MAIN();
