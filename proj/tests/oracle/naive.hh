/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_TESTS_ORACLE_NAIVE_HH
#define METRICDIM_GUARD_TESTS_ORACLE_NAIVE_HH 1

#include <metricdim/graph.hh>
#include <metricdim/solver.hh>

#include <random>

namespace metricdim::oracle
{
    inline constexpr Vertex naive_order_limit = 16;

    /// Materialises every resolution vector and compares them pairwise-by-set. No partitions.
    auto is_generator_naive(const Graph & g, Kind kind, std::span<const Vertex> landmarks) -> bool;

    /// Same contract as resolve(); throws InstanceTooLarge above naive_order_limit.
    auto resolve_naive(const Graph & g, Kind kind) -> ResolveResult;

    auto metric_dimension_naive(const Graph & g) -> ResolveResult;
    auto edge_metric_dimension_naive(const Graph & g) -> ResolveResult;

    /// Union-find connectivity, independent of Graph::is_connected.
    auto connected_by_union_find(Vertex n, std::span<const Edge> edges) -> bool;

    /// Hop distances by repeated relaxation, independent of the BFS.
    auto floyd_warshall(const Graph & g) -> std::vector<std::vector<Distance>>;

    /// Random spanning tree plus each remaining pair with probability p.
    auto random_connected(Vertex n, double p, std::mt19937_64 & rng) -> Graph;

    /// Uniformly random simple graph (possibly disconnected).
    auto random_graph(Vertex n, double p, std::mt19937_64 & rng) -> Graph;

    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph;
}

#endif
