/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_GRAPH_HH
#define METRICDIM_GUARD_GRAPH_HH 1

#include <metricdim/errors.hh>

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace metricdim
{
    using Vertex = std::uint32_t;

    /// Hop count. Wide enough for the largest graph6 long-form order (2^18 - 1).
    using Distance = std::uint32_t;

    inline constexpr Distance unreachable = ~Distance{ 0 };

    struct Edge
    {
        Vertex u, v;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * All-pairs hop distances, stored row-major.
     */
    class DistanceMatrix
    {
        public:
            DistanceMatrix() = default;
            explicit DistanceMatrix(Vertex n) : _n(n), _d(std::size_t{ n } * n, unreachable) { }

            auto order() const -> Vertex { return _n; }

            auto at(Vertex u, Vertex v) const -> Distance { return _d[std::size_t{ u } * _n + v]; }
            auto set(Vertex u, Vertex v, Distance d) -> void { _d[std::size_t{ u } * _n + v] = d; }

            auto row(Vertex u) const -> std::span<const Distance>
            {
                return { _d.data() + std::size_t{ u } * _n, _n };
            }

        private:
            Vertex _n = 0;
            std::vector<Distance> _d;
    };

    /**
     * Immutable simple undirected graph on vertices 0..n-1.
     *
     * Adjacency rows are bit vectors; the edge list is kept sorted with u < v.
     * Distances are computed on first request and shared between copies, so
     * a Graph can be handed to many threads at once.
     */
    class Graph
    {
        public:
            Graph();

            /// Validates and canonicalises the edge list. Either endpoint order is accepted.
            Graph(Vertex n, std::span<const Edge> edges);

            auto order() const -> Vertex { return _n; }
            auto size() const -> std::size_t { return _edges.size(); }
            auto edges() const -> const std::vector<Edge> & { return _edges; }

            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto degree(Vertex v) const -> unsigned;
            auto neighbours(Vertex v) const -> std::vector<Vertex>;

            auto is_connected() const -> bool;

            /// Index of an edge in edges(); throws if the pair is not an edge.
            auto edge_index(Vertex u, Vertex v) const -> std::size_t;

            /// Cached all-pairs distances. Throws DisconnectedGraph.
            auto distances() const -> const DistanceMatrix &;

            auto operator== (const Graph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }

        private:
            struct Cache;

            Vertex _n;
            std::size_t _words;
            std::vector<std::uint64_t> _adj;
            std::vector<Edge> _edges;
            std::shared_ptr<Cache> _cache;
    };

    /// Exact hop distances by breadth-first search from every vertex. Throws DisconnectedGraph.
    auto bfs_all_pairs(const Graph & g) -> DistanceMatrix;

    auto vertex_distance(const DistanceMatrix & dm, Vertex v, Vertex z) -> Distance;

    /// d(uv, z) = min(d(u, z), d(v, z)).
    auto edge_distance(const DistanceMatrix & dm, Edge e, Vertex z) -> Distance;

    /// Vertex k of g2 becomes g1.order() + k.
    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph;

    /// Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
    auto add_edge(const Graph & g, Vertex u, Vertex v) -> Graph;

    /// Vertex (a, x) becomes a * g2.order() + x.
    auto cartesian_product(const Graph & g1, const Graph & g2) -> Graph;
}

#endif
