/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/families.hh>
#include <metricdim/graph6.hh>
#include <metricdim/scan.hh>
#include <metricdim/solver.hh>

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace metricdim;

namespace
{
    // connected random graphs of order 10, the shape of an exhaustive census stream
    auto census_like(std::size_t count) -> const std::string &
    {
        static std::string text = [count] {
            std::mt19937_64 rng(10);
            std::bernoulli_distribution coin(0.35);
            std::string result;
            std::size_t made = 0;
            while (made < count) {
                std::vector<Edge> edges;
                for (Vertex v = 1 ; v < 10 ; ++v)
                    edges.push_back({ Vertex(rng() % v), v });
                for (Vertex v = 1 ; v < 10 ; ++v)
                    for (Vertex u = 0 ; u < v ; ++u)
                        if (coin(rng) && std::find(edges.begin(), edges.end(), Edge{ u, v }) == edges.end())
                            edges.push_back({ u, v });
                result += encode_graph6(Graph(10, edges)) + "\n";
                ++made;
            }
            return result;
        }();
        return text;
    }

    auto scan_serial_bench(benchmark::State & state) -> void
    {
        auto & text = census_like(20000);
        auto pred = Predicate::parse("lt");
        for (auto _ : state) {
            std::istringstream in(text);
            benchmark::DoNotOptimize(scan_serial(in, pred));
        }
        state.SetItemsProcessed(state.iterations() * 20000);
    }

    auto scan_parallel_bench(benchmark::State & state) -> void
    {
        auto & text = census_like(20000);
        auto pred = Predicate::parse("lt");
        ScanOptions options;
        options.jobs = unsigned(state.range(0));
        for (auto _ : state) {
            std::istringstream in(text);
            benchmark::DoNotOptimize(scan(in, pred, options));
        }
        state.SetItemsProcessed(state.iterations() * 20000);
    }

    auto torus_bench(benchmark::State & state) -> void
    {
        auto g = cartesian_product(make_cycle(8), make_cycle(8));
        SolveOptions options{ unsigned(state.range(0)) };
        for (auto _ : state) {
            benchmark::DoNotOptimize(metric_dimension(g, options));
            benchmark::DoNotOptimize(edge_metric_dimension(g, options));
        }
    }

    auto chain_bench(benchmark::State & state) -> void
    {
        auto g = make_L({ 6, 1, 2, 4 }).graph;
        SolveOptions options{ unsigned(state.range(0)) };
        for (auto _ : state)
            benchmark::DoNotOptimize(metric_dimension(g, options));
    }
}

BENCHMARK(scan_serial_bench)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_parallel_bench)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(torus_bench)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(chain_bench)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
