/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/graph.hh>

#include <algorithm>
#include <bit>
#include <mutex>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace metricdim
{
    struct Graph::Cache
    {
        std::once_flag once;
        bool connected = false;
        DistanceMatrix distances;
    };

    namespace
    {
        auto words_for(Vertex n) -> size_t
        {
            return (size_t{ n } + 63) / 64;
        }
    }

    Graph::Graph() :
        _n(0),
        _words(0),
        _cache(std::make_shared<Cache>())
    {
    }

    Graph::Graph(Vertex n, std::span<const Edge> edges) :
        _n(n),
        _words(words_for(n)),
        _adj(size_t{ n } * _words, 0),
        _cache(std::make_shared<Cache>())
    {
        _edges.reserve(edges.size());
        for (auto e : edges) {
            if (e.u >= n)
                throw VertexOutOfRange(e.u, n);
            if (e.v >= n)
                throw VertexOutOfRange(e.v, n);
            if (e.u == e.v)
                throw SelfLoop(e.u);
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (adjacent(e.u, e.v))
                throw DuplicateEdge(e.u, e.v);
            _adj[size_t{ e.u } * _words + e.v / 64] |= uint64_t{ 1 } << (e.v % 64);
            _adj[size_t{ e.v } * _words + e.u / 64] |= uint64_t{ 1 } << (e.u % 64);
            _edges.push_back(e);
        }
        std::sort(_edges.begin(), _edges.end());
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return (_adj[size_t{ u } * _words + v / 64] >> (v % 64)) & 1;
    }

    auto Graph::degree(Vertex v) const -> unsigned
    {
        unsigned result = 0;
        for (size_t w = 0 ; w < _words ; ++w)
            result += std::popcount(_adj[size_t{ v } * _words + w]);
        return result;
    }

    auto Graph::neighbours(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (size_t w = 0 ; w < _words ; ++w) {
            auto bits = _adj[size_t{ v } * _words + w];
            while (bits) {
                result.push_back(Vertex(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return result;
    }

    auto Graph::edge_index(Vertex u, Vertex v) const -> size_t
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{ u, v });
        if (it == _edges.end() || *it != Edge{ u, v })
            throw Error("not an edge: " + std::to_string(u) + " " + std::to_string(v));
        return size_t(it - _edges.begin());
    }

    auto Graph::is_connected() const -> bool
    {
        if (_n == 0)
            return false;

        vector<uint64_t> seen(_words, 0), frontier(_words, 0), next(_words, 0);
        seen[0] = frontier[0] = 1;
        size_t reached = 1;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (size_t w = 0 ; w < _words ; ++w) {
                auto bits = frontier[w];
                while (bits) {
                    size_t v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    for (size_t x = 0 ; x < _words ; ++x)
                        next[x] |= _adj[v * _words + x];
                }
            }
            size_t added = 0;
            for (size_t w = 0 ; w < _words ; ++w) {
                next[w] &= ~seen[w];
                seen[w] |= next[w];
                added += std::popcount(next[w]);
            }
            if (0 == added)
                break;
            reached += added;
            frontier.swap(next);
        }
        return reached == _n;
    }

    auto Graph::distances() const -> const DistanceMatrix &
    {
        std::call_once(_cache->once, [&] {
            _cache->connected = is_connected();
            if (_cache->connected)
                _cache->distances = bfs_all_pairs(*this);
        });
        if (! _cache->connected)
            throw DisconnectedGraph();
        return _cache->distances;
    }

    auto bfs_all_pairs(const Graph & g) -> DistanceMatrix
    {
        auto n = g.order();
        if (n == 0)
            throw DisconnectedGraph();

        vector<vector<Vertex>> nbrs(n);
        for (auto & e : g.edges()) {
            nbrs[e.u].push_back(e.v);
            nbrs[e.v].push_back(e.u);
        }

        DistanceMatrix result(n);
        vector<Vertex> queue(n);
        for (Vertex s = 0 ; s < n ; ++s) {
            size_t head = 0, tail = 0;
            queue[tail++] = s;
            result.set(s, s, 0);
            while (head < tail) {
                auto v = queue[head++];
                auto dv = result.at(s, v);
                for (auto w : nbrs[v])
                    if (result.at(s, w) == unreachable) {
                        result.set(s, w, dv + 1);
                        queue[tail++] = w;
                    }
            }
            if (tail != n)
                throw DisconnectedGraph();
        }
        return result;
    }

    auto vertex_distance(const DistanceMatrix & dm, Vertex v, Vertex z) -> Distance
    {
        if (v >= dm.order())
            throw VertexOutOfRange(v, dm.order());
        if (z >= dm.order())
            throw VertexOutOfRange(z, dm.order());
        return dm.at(v, z);
    }

    auto edge_distance(const DistanceMatrix & dm, Edge e, Vertex z) -> Distance
    {
        return std::min(vertex_distance(dm, e.u, z), vertex_distance(dm, e.v, z));
    }

    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph
    {
        vector<Edge> edges = g1.edges();
        auto offset = g1.order();
        for (auto & e : g2.edges())
            edges.push_back({ e.u + offset, e.v + offset });
        return Graph(g1.order() + g2.order(), edges);
    }

    auto add_edge(const Graph & g, Vertex u, Vertex v) -> Graph
    {
        vector<Edge> edges = g.edges();
        edges.push_back({ u, v });
        return Graph(g.order(), edges);
    }

    auto cartesian_product(const Graph & g1, const Graph & g2) -> Graph
    {
        auto n1 = g1.order(), n2 = g2.order();
        vector<Edge> edges;
        edges.reserve(size_t{ n1 } * g2.size() + size_t{ n2 } * g1.size());
        for (Vertex a = 0 ; a < n1 ; ++a)
            for (auto & e : g2.edges())
                edges.push_back({ a * n2 + e.u, a * n2 + e.v });
        for (auto & e : g1.edges())
            for (Vertex x = 0 ; x < n2 ; ++x)
                edges.push_back({ e.u * n2 + x, e.v * n2 + x });
        return Graph(n1 * n2, edges);
    }
}
