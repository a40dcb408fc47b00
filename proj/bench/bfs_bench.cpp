// Serial FIFO search against the parallel level-synchronous search on one instance.

#include "lcr/solver.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

// A 3-colored path plus a frozen swapped edge, so the search exhausts every
// coloring of the path (3 * 2^(n-1) states) before answering no.
lcr::Instance bench_instance()
{
    const int n = 16;
    std::vector<std::string> labels;
    std::vector<lcr::Edge> edges;
    lcr::ListAssignment lists;
    lcr::Coloring initial, target;
    for (int v = 0; v < n; ++v) {
        labels.push_back("p" + std::to_string(100 + v));
        if (v > 0)
            edges.emplace_back(v - 1, v);
        lists.push_back({0, 1, 2});
        initial.push_back(v % 2);
        target.push_back(v % 2 ? 0 : 2);
    }
    labels.insert(labels.end(), {"s0", "s1"});
    edges.emplace_back(n, n + 1);
    lists.insert(lists.end(), {{0, 1}, {0, 1}});
    initial.insert(initial.end(), {0, 1});
    target.insert(target.end(), {1, 0});
    return lcr::Instance(lcr::Graph(labels, edges), lcr::ColorSet{{"0", "1", "2"}}, lists, initial, target);
}

const lcr::Instance& instance()
{
    static const lcr::Instance inst = bench_instance();
    return inst;
}

void BM_Serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(lcr::brute_force_reachable_serial(instance()).verdict);
}

void BM_Parallel(benchmark::State& state)
{
    lcr::SolveOptions options;
    options.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lcr::brute_force_reachable(instance(), options).verdict);
}

}  // namespace

BENCHMARK(BM_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
