/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/solver.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#include <omp.h>

using std::size_t;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace metricdim
{
    auto to_string(Kind kind) -> const char *
    {
        switch (kind) {
            case Kind::Vertex: return "vertex";
            case Kind::Edge:   return "edge";
        }
        return "?";
    }

    DistancePartitions::DistancePartitions(const Graph & g, Kind kind) :
        _kind(kind),
        _landmarks(g.order())
    {
        auto & dm = g.distances();
        auto & edges = g.edges();
        _ground = (kind == Kind::Vertex) ? g.order() : edges.size();
        _words = (_ground + 63) / 64;
        _class_of.resize(size_t{ _landmarks } * _ground);
        _offsets.reserve(_landmarks + 1);
        _offsets.push_back(0);

        vector<Distance> dist(_ground);
        vector<uint32_t> remap;
        for (Vertex z = 0 ; z < _landmarks ; ++z) {
            Distance far = 0;
            for (size_t x = 0 ; x < _ground ; ++x) {
                dist[x] = (kind == Kind::Vertex) ? dm.at(Vertex(x), z) : edge_distance(dm, edges[x], z);
                far = std::max(far, dist[x]);
            }

            // compact away distance values that no item takes
            remap.assign(size_t{ far } + 1, 0);
            for (size_t x = 0 ; x < _ground ; ++x)
                remap[dist[x]] = 1;
            uint32_t classes = 0;
            for (auto & r : remap)
                r = r ? classes++ : ~uint32_t{ 0 };

            auto base = _bits.size();
            _bits.resize(base + size_t{ classes } * _words, 0);
            for (size_t x = 0 ; x < _ground ; ++x) {
                auto c = remap[dist[x]];
                _class_of[size_t{ z } * _ground + x] = c;
                _bits[base + size_t{ c } * _words + x / 64] |= uint64_t{ 1 } << (x % 64);
            }
            _offsets.push_back(_offsets.back() + classes);
            _max_classes = std::max<size_t>(_max_classes, classes);
        }
    }

    namespace
    {
        constexpr size_t deadline_table_limit = 2048;
        constexpr uint32_t deadline_sample = 24;

        /**
         * Read-only data shared by every search thread: for each pair of
         * ground items, the largest landmark id that separates them. Landmarks
         * are chosen in ascending order, so once the next candidate exceeds a
         * pair's deadline that pair can never be separated on this branch.
         */
        struct SearchContext
        {
            const DistancePartitions & parts;
            size_t ground, words;
            vector<int32_t> deadline;
            vector<uint64_t> reach;

            explicit SearchContext(const DistancePartitions & p) :
                parts(p),
                ground(p.ground_size()),
                words(p.words())
            {
                if (ground <= deadline_table_limit) {
                    deadline.assign(ground * ground, -1);
                    for (size_t x = 0 ; x < ground ; ++x)
                        for (size_t y = x + 1 ; y < ground ; ++y) {
                            int32_t d = -1;
                            for (Vertex z = p.landmarks() ; z-- > 0 ; )
                                if (p.class_of(z, x) != p.class_of(z, y)) {
                                    d = int32_t(z);
                                    break;
                                }
                            deadline[x * ground + y] = deadline[y * ground + x] = d;
                        }
                }

                // reach[r] = max_classes^r, saturating; a class of size s needs r landmarks with reach[r] >= s
                uint64_t v = 1;
                for (size_t r = 0 ; r <= std::max<size_t>(p.landmarks(), 1) ; ++r) {
                    reach.push_back(v);
                    if (v < ground)
                        v = (p.max_classes() <= 1) ? v : std::min<uint64_t>(v * p.max_classes(), ground);
                }
            }

            auto landmarks_needed(uint64_t size) const -> size_t
            {
                size_t r = 0;
                while (r < reach.size() && reach[r] < size)
                    ++r;
                return r;
            }
        };

        struct ClassMeta
        {
            uint32_t count;
            int32_t deadline;
        };

        struct Level
        {
            vector<uint64_t> bits;
            vector<ClassMeta> meta;
        };

        /**
         * Depth-first enumeration of landmark subsets in lexicographic order,
         * refining the partition of the ground set one landmark at a time.
         * Only classes with two or more items are kept, so a generator is
         * found exactly when the current level is empty.
         */
        class Searcher
        {
            public:
                explicit Searcher(const SearchContext & ctx) :
                    _ctx(ctx),
                    _scratch(ctx.words)
                {
                }

                auto start(unsigned k) -> void
                {
                    _k = k;
                    _levels.resize(size_t{ k } + 2);
                    _chosen.assign(k, 0);
                    auto & root = _levels[0];
                    root.bits.clear();
                    root.meta.clear();
                    if (_ctx.ground >= 2) {
                        root.bits.assign(_ctx.words, ~uint64_t{ 0 });
                        if (_ctx.ground % 64)
                            root.bits.back() = (uint64_t{ 1 } << (_ctx.ground % 64)) - 1;
                        root.meta.push_back({ uint32_t(_ctx.ground), global_deadline() });
                    }
                }

                auto search(unsigned depth, Vertex from) -> bool
                {
                    auto & level = _levels[depth];
                    if (level.meta.empty()) {
                        _found = depth;
                        return true;
                    }
                    if (depth == _k)
                        return false;

                    unsigned remaining = _k - depth;
                    uint32_t largest = 0;
                    int32_t earliest = std::numeric_limits<int32_t>::max();
                    for (auto & m : level.meta) {
                        largest = std::max(largest, m.count);
                        earliest = std::min(earliest, m.deadline);
                    }
                    if (_ctx.landmarks_needed(largest) > remaining)
                        return false;

                    auto n = _ctx.parts.landmarks();
                    for (Vertex z = from ; z + remaining <= n ; ++z) {
                        if (earliest < int32_t(z))
                            break;
                        refine(depth, z);
                        _chosen[depth] = z;
                        if (search(depth + 1, z + 1))
                            return true;
                    }
                    return false;
                }

                /// The root-level filters search() applies before trying z first.
                auto root_admits(Vertex z) const -> bool
                {
                    auto & level = _levels[0];
                    if (level.meta.empty())
                        return z == 0;
                    if (_k == 0 || z + _k > _ctx.parts.landmarks())
                        return false;
                    if (_ctx.landmarks_needed(level.meta[0].count) > _k)
                        return false;
                    return level.meta[0].deadline >= int32_t(z);
                }

                auto search_with_first(Vertex z) -> bool
                {
                    if (_levels[0].meta.empty()) {
                        _found = 0;
                        return true;
                    }
                    refine(0, z);
                    _chosen[0] = z;
                    return search(1, z + 1);
                }

                auto witness() const -> LandmarkSet
                {
                    return LandmarkSet(_chosen.begin(), _chosen.begin() + _found);
                }

            private:
                const SearchContext & _ctx;
                unsigned _k = 0;
                unsigned _found = 0;
                vector<Level> _levels;
                LandmarkSet _chosen;
                vector<uint64_t> _scratch;

                auto global_deadline() const -> int32_t
                {
                    int32_t result = std::numeric_limits<int32_t>::max();
                    auto g = _ctx.deadline.empty() ? 0 : _ctx.ground;
                    for (size_t x = 0 ; x < g ; ++x)
                        for (size_t y = x + 1 ; y < g ; ++y)
                            result = std::min(result, _ctx.deadline[x * g + y]);
                    return result;
                }

                /// The class is dead once z passes the smallest deadline of its
                /// pairs. Pairs among the first few items give an upper bound on
                /// that minimum, which is all pruning needs; it is exact for small classes.
                auto class_deadline(const uint64_t * bits) const -> int32_t
                {
                    if (_ctx.deadline.empty())
                        return std::numeric_limits<int32_t>::max();

                    auto g = _ctx.ground;
                    int32_t result = std::numeric_limits<int32_t>::max();
                    uint32_t items[deadline_sample];
                    uint32_t c = 0;
                    for (size_t w = 0 ; w < _ctx.words && c < deadline_sample ; ++w)
                        for (auto b = bits[w] ; b && c < deadline_sample ; b &= b - 1)
                            items[c++] = uint32_t(w * 64 + std::countr_zero(b));
                    for (uint32_t a = 0 ; a < c ; ++a)
                        for (uint32_t b = a + 1 ; b < c ; ++b)
                            result = std::min(result, _ctx.deadline[items[a] * g + items[b]]);
                    return result;
                }

                auto refine(unsigned depth, Vertex z) -> void
                {
                    auto & from = _levels[depth];
                    auto & to = _levels[depth + 1];
                    to.bits.clear();
                    to.meta.clear();

                    auto words = _ctx.words;
                    auto classes = _ctx.parts.class_count(z);
                    for (size_t i = 0 ; i < from.meta.size() ; ++i) {
                        const uint64_t * cls = from.bits.data() + i * words;
                        uint32_t left = from.meta[i].count;
                        for (size_t c = 0 ; c < classes && left >= 2 ; ++c) {
                            auto layer = _ctx.parts.class_bits(z, c);
                            uint32_t count = 0;
                            for (size_t w = 0 ; w < words ; ++w) {
                                _scratch[w] = cls[w] & layer[w];
                                count += std::popcount(_scratch[w]);
                            }
                            left -= std::min(left, count);
                            if (count >= 2) {
                                auto at = to.bits.size();
                                to.bits.insert(to.bits.end(), _scratch.begin(), _scratch.end());
                                to.meta.push_back({ count, class_deadline(to.bits.data() + at) });
                            }
                        }
                    }
                }
        };

        auto search_serial(const SearchContext & ctx, unsigned k) -> std::optional<LandmarkSet>
        {
            Searcher s(ctx);
            s.start(k);
            if (s.search(0, 0))
                return s.witness();
            return std::nullopt;
        }

        auto search_parallel(const SearchContext & ctx, unsigned k, unsigned jobs) -> std::optional<LandmarkSet>
        {
            auto n = ctx.parts.landmarks();
            std::atomic<long> best{ long(n) };
            vector<std::optional<LandmarkSet>> found(n);

#pragma omp parallel num_threads(int(jobs))
            {
                Searcher s(ctx);
                s.start(k);

#pragma omp for schedule(dynamic, 1)
                for (long z = 0 ; z < long(n) ; ++z) {
                    if (z > best.load() || ! s.root_admits(Vertex(z)))
                        continue;
                    if (s.search_with_first(Vertex(z))) {
                        found[z] = s.witness();
                        long cur = best.load();
                        while (z < cur && ! best.compare_exchange_weak(cur, z))
                            ;
                    }
                }
            }

            if (best.load() < long(n))
                return found[best.load()];
            return std::nullopt;
        }

        auto lower_bound(const SearchContext & ctx) -> unsigned
        {
            if (ctx.ground <= 1)
                return 0;
            return std::max<unsigned>(1, unsigned(ctx.landmarks_needed(ctx.ground)));
        }

        auto find_with(const SearchContext & ctx, unsigned k, const SolveOptions & opts) -> std::optional<LandmarkSet>
        {
            if (ctx.ground <= 1)
                return LandmarkSet{ };
            k = std::min<unsigned>(k, ctx.parts.landmarks());
            if (opts.jobs > 1 && k > 0)
                return search_parallel(ctx, k, opts.jobs);
            return search_serial(ctx, k);
        }

        auto check_landmarks(const Graph & g, std::span<const Vertex> landmarks) -> void
        {
            for (auto z : landmarks)
                if (z >= g.order())
                    throw VertexOutOfRange(z, g.order());
        }
    }

    auto resolution_vector(const Graph & g, Vertex item, std::span<const Vertex> landmarks) -> ResolutionVector
    {
        check_landmarks(g, landmarks);
        auto & dm = g.distances();
        ResolutionVector result;
        for (auto z : landmarks)
            result.push_back(vertex_distance(dm, item, z));
        return result;
    }

    auto resolution_vector(const Graph & g, Edge item, std::span<const Vertex> landmarks) -> ResolutionVector
    {
        check_landmarks(g, landmarks);
        auto & dm = g.distances();
        ResolutionVector result;
        for (auto z : landmarks)
            result.push_back(edge_distance(dm, item, z));
        return result;
    }

    auto is_generator(const Graph & g, Kind kind, std::span<const Vertex> landmarks) -> bool
    {
        check_landmarks(g, landmarks);
        DistancePartitions parts(g, kind);
        auto words = parts.words();
        auto ground = parts.ground_size();
        if (ground <= 1)
            return true;

        // meet of the landmark partitions, keeping only non-singleton classes
        vector<vector<uint64_t>> classes(1, vector<uint64_t>(words, ~uint64_t{ 0 }));
        if (ground % 64)
            classes[0].back() = (uint64_t{ 1 } << (ground % 64)) - 1;
        for (auto z : landmarks) {
            vector<vector<uint64_t>> next;
            for (auto & cls : classes)
                for (size_t c = 0 ; c < parts.class_count(z) ; ++c) {
                    auto layer = parts.class_bits(z, c);
                    vector<uint64_t> piece(words);
                    unsigned count = 0;
                    for (size_t w = 0 ; w < words ; ++w)
                        count += std::popcount(piece[w] = cls[w] & layer[w]);
                    if (count >= 2)
                        next.push_back(std::move(piece));
                }
            classes = std::move(next);
            if (classes.empty())
                break;
        }
        return classes.empty();
    }

    auto is_metric_generator(const Graph & g, std::span<const Vertex> landmarks) -> bool
    {
        return is_generator(g, Kind::Vertex, landmarks);
    }

    auto is_edge_metric_generator(const Graph & g, std::span<const Vertex> landmarks) -> bool
    {
        return is_generator(g, Kind::Edge, landmarks);
    }

    auto find_generator(const DistancePartitions & parts, unsigned k, const SolveOptions & opts) -> std::optional<LandmarkSet>
    {
        SearchContext ctx(parts);
        return find_with(ctx, k, opts);
    }

    auto resolve_capped(const Graph & g, Kind kind, unsigned cap, const SolveOptions & opts) -> std::optional<ResolveResult>
    {
        DistancePartitions parts(g, kind);
        SearchContext ctx(parts);
        for (unsigned k = lower_bound(ctx) ; k <= cap && k <= parts.landmarks() ; ++k)
            if (auto w = find_with(ctx, k, opts))
                return ResolveResult{ kind, unsigned(w->size()), std::move(*w) };
        return std::nullopt;
    }

    auto resolve(const Graph & g, Kind kind, const SolveOptions & opts) -> ResolveResult
    {
        auto result = resolve_capped(g, kind, g.order(), opts);
        if (! result)
            throw Error("no generator found; the landmark set V always resolves a connected graph");
        return *result;
    }

    auto has_generator_of_size(const Graph & g, Kind kind, unsigned k, const SolveOptions & opts) -> bool
    {
        DistancePartitions parts(g, kind);
        SearchContext ctx(parts);
        return find_with(ctx, k, opts).has_value();
    }

    auto certify_dimension(const Graph & g, Kind kind, std::span<const Vertex> basis, unsigned claimed, const SolveOptions & opts) -> bool
    {
        if (basis.size() != claimed || ! is_generator(g, kind, basis))
            return false;
        return claimed == 0 || ! has_generator_of_size(g, kind, claimed - 1, opts);
    }

    auto metric_dimension(const Graph & g, const SolveOptions & opts) -> ResolveResult
    {
        return resolve(g, Kind::Vertex, opts);
    }

    auto edge_metric_dimension(const Graph & g, const SolveOptions & opts) -> ResolveResult
    {
        return resolve(g, Kind::Edge, opts);
    }
}
