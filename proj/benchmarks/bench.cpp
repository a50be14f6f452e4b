#include <benchmark/benchmark.h>

#include "drs/families.hpp"
#include "drs/resolving.hpp"
#include "drs/solvers.hpp"
#include "drs/tree_line.hpp"

namespace {

void BM_bfs_all_pairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph g = drs::gen_random_connected(n, n / 2, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::bfs_all_pairs(g));
    }
}
BENCHMARK(BM_bfs_all_pairs)->Arg(64)->Arg(256)->Arg(1024);

void BM_line_graph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph g = drs::gen_random_connected(n, n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::line_graph(g));
    }
}
BENCHMARK(BM_line_graph)->Arg(256)->Arg(1024)->Arg(4096);

void BM_is_drs_naive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph t = drs::gen_random_tree(n, 3);
    const auto lg = drs::line_graph(t).first;
    const drs::DistanceMatrix dm = drs::bfs_all_pairs(lg);
    const drs::VertexSet s = drs::construct_min_drs_line_tree(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::is_drs_naive(dm, s));
    }
}
BENCHMARK(BM_is_drs_naive)->Arg(32)->Arg(64)->Arg(128);

void BM_is_drs_fast(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph t = drs::gen_random_tree(n, 3);
    const auto lg = drs::line_graph(t).first;
    const drs::DistanceMatrix dm = drs::bfs_all_pairs(lg);
    const drs::VertexSet s = drs::construct_min_drs_line_tree(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::is_drs_fast(dm, s));
    }
}
BENCHMARK(BM_is_drs_fast)->Arg(32)->Arg(64)->Arg(128)->Arg(512);

void BM_min_drs_exhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph g = drs::gen_random_connected(n, 2, 19);
    const drs::DistanceMatrix dm = drs::bfs_all_pairs(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::min_drs_exhaustive(dm));
    }
}
BENCHMARK(BM_min_drs_exhaustive)->Arg(8)->Arg(10)->Arg(12);

void BM_min_drs_decomposed_line_tree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph t = drs::gen_random_tree(n, 23);
    const auto lg = drs::line_graph(t).first;
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::min_drs_decomposed(lg));
    }
}
BENCHMARK(BM_min_drs_decomposed_line_tree)->Arg(12)->Arg(16)->Arg(24);

void BM_construct_min_drs_line_tree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const drs::Graph t = drs::gen_random_tree(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::construct_min_drs_line_tree(t));
    }
}
BENCHMARK(BM_construct_min_drs_line_tree)
    ->Arg(1000)
    ->Arg(100000)
    ->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

void BM_gen_random_tree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(drs::gen_random_tree(n, ++seed));
    }
}
BENCHMARK(BM_gen_random_tree)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
