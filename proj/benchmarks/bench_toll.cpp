#include <benchmark/benchmark.h>

#include <random>

#include "tollwalk/catalog.hpp"
#include "tollwalk/enumerate.hpp"
#include "tollwalk/gadgets.hpp"
#include "tollwalk/ternary.hpp"
#include "tollwalk/toll.hpp"

namespace {

void BM_toll_interval_cycle(benchmark::State& state) {
    tollwalk::Graph g = tollwalk::catalog("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tollwalk::toll_interval(g, 0, int(state.range(0)) / 2));
}
BENCHMARK(BM_toll_interval_cycle)->Arg(16)->Arg(32)->Arg(64);

void BM_toll_transit_random(benchmark::State& state) {
    std::mt19937 rng(12345);
    tollwalk::Graph g = tollwalk::random_connected_graph(int(state.range(0)), 0.3, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(tollwalk::toll_transit(g));
}
BENCHMARK(BM_toll_transit_random)->Arg(10)->Arg(16)->Arg(24);

void BM_toll_transit_gadget(benchmark::State& state) {
    tollwalk::Graph g = tollwalk::build_G_d(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tollwalk::toll_transit(g));
}
BENCHMARK(BM_toll_transit_gadget)->Arg(2)->Arg(3);

void BM_w_structure_gadget(benchmark::State& state) {
    tollwalk::Graph g = tollwalk::build_G_d_prime(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tollwalk::w_structure(g));
}
BENCHMARK(BM_w_structure_gadget)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
