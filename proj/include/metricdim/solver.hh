/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_SOLVER_HH
#define METRICDIM_GUARD_SOLVER_HH 1

#include <metricdim/graph.hh>

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace metricdim
{
    /// Whether landmarks must tell apart vertices or edges.
    enum class Kind
    {
        Vertex,
        Edge
    };

    auto to_string(Kind) -> const char *;

    using LandmarkSet = std::vector<Vertex>;
    using ResolutionVector = std::vector<Distance>;

    struct ResolveResult
    {
        Kind kind;
        unsigned dimension;

        /// Lexicographically least basis among those of minimum cardinality, ascending ids.
        LandmarkSet witness;
    };

    struct SolveOptions
    {
        /// OpenMP threads for the top level of the subset search. 1 runs the serial path.
        unsigned jobs = 1;
    };

    /**
     * The per-landmark distance classes of a graph, in the form the subset
     * search consumes: for every landmark z, one bit vector per distance
     * value, over the vertex set (vertex kind) or edge list (edge kind).
     */
    class DistancePartitions
    {
        public:
            DistancePartitions(const Graph & g, Kind kind);

            auto kind() const -> Kind { return _kind; }
            auto landmarks() const -> Vertex { return _landmarks; }
            auto ground_size() const -> std::size_t { return _ground; }
            auto words() const -> std::size_t { return _words; }

            auto class_count(Vertex z) const -> std::size_t { return _offsets[z + 1] - _offsets[z]; }

            /// Bit vector of the items at distance class index c from z. Classes are
            /// ordered by distance but empty distance values are not represented.
            auto class_bits(Vertex z, std::size_t c) const -> std::span<const std::uint64_t>
            {
                return { _bits.data() + (_offsets[z] + c) * _words, _words };
            }

            /// Largest number of classes any landmark induces.
            auto max_classes() const -> std::size_t { return _max_classes; }

            /// Class index of item x with respect to landmark z.
            auto class_of(Vertex z, std::size_t x) const -> std::uint32_t { return _class_of[std::size_t{ z } * _ground + x]; }

        private:
            Kind _kind;
            Vertex _landmarks;
            std::size_t _ground, _words, _max_classes = 0;
            std::vector<std::size_t> _offsets;
            std::vector<std::uint64_t> _bits;
            std::vector<std::uint32_t> _class_of;
    };

    auto resolution_vector(const Graph & g, Vertex item, std::span<const Vertex> landmarks) -> ResolutionVector;
    auto resolution_vector(const Graph & g, Edge item, std::span<const Vertex> landmarks) -> ResolutionVector;

    /// True iff the meet of the landmarks' distance partitions is discrete.
    auto is_generator(const Graph & g, Kind kind, std::span<const Vertex> landmarks) -> bool;
    auto is_metric_generator(const Graph & g, std::span<const Vertex> landmarks) -> bool;
    auto is_edge_metric_generator(const Graph & g, std::span<const Vertex> landmarks) -> bool;

    /**
     * Lexicographically least generator of cardinality at most k, or nothing
     * if every generator is larger. Finding one with fewer than k landmarks
     * stops early, so the result is only lex-least when no smaller generator
     * exists; resolve() handles that by ascending k.
     */
    auto find_generator(const DistancePartitions & parts, unsigned k, const SolveOptions & = { }) -> std::optional<LandmarkSet>;

    /// Exact dimension, ascending k from lower_bound. Throws DisconnectedGraph.
    auto resolve(const Graph & g, Kind kind, const SolveOptions & = { }) -> ResolveResult;

    /// Exact dimension if it is at most cap, otherwise nothing.
    auto resolve_capped(const Graph & g, Kind kind, unsigned cap, const SolveOptions & = { }) -> std::optional<ResolveResult>;

    /// True iff some generator has cardinality at most k.
    auto has_generator_of_size(const Graph & g, Kind kind, unsigned k, const SolveOptions & = { }) -> bool;

    /**
     * Certifies dimension == claimed without searching for a lex-least basis:
     * basis must have claimed landmarks and be a generator, and no generator
     * of claimed - 1 landmarks may exist (supersets of generators are generators).
     */
    auto certify_dimension(const Graph & g, Kind kind, std::span<const Vertex> basis, unsigned claimed, const SolveOptions & = { }) -> bool;

    auto metric_dimension(const Graph & g, const SolveOptions & = { }) -> ResolveResult;
    auto edge_metric_dimension(const Graph & g, const SolveOptions & = { }) -> ResolveResult;
}

#endif
