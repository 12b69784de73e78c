/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_SCAN_HH
#define METRICDIM_GUARD_SCAN_HH 1

#include <metricdim/families.hh>
#include <metricdim/graph6.hh>
#include <metricdim/solver.hh>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace metricdim
{
    struct Rational
    {
        std::int64_t num = 1, den = 1;

        /// Accepts "3", "5/2" and "2.5".
        static auto parse(const std::string &) -> Rational;
    };

    auto to_string(const Rational &) -> std::string;

    enum class Comparison
    {
        Lt,      // edim < dim
        Gt,      // edim > dim
        Eq,      // edim == dim
        Diff,    // dim - edim == k
        Ratio    // dim >= q * edim
    };

    struct Predicate
    {
        Comparison cmp = Comparison::Lt;
        std::int64_t diff = 0;
        Rational ratio;

        /// Solve the vertex side only up to the cardinality the predicate can use.
        bool early_exit = true;

        /// "lt", "gt", "eq", "diff:k", "ratio:q".
        static auto parse(const std::string &) -> Predicate;

        auto matches(unsigned dim, unsigned edim) const -> bool;
    };

    auto to_string(const Predicate &) -> std::string;

    struct Dimensions
    {
        unsigned dim, edim;

        auto operator<=> (const Dimensions &) const = default;
    };

    /// Both dimensions when g matches pred, otherwise nothing. g must be connected.
    auto classify(const Graph & g, const Predicate & pred) -> std::optional<Dimensions>;

    struct ScanMatch
    {
        std::size_t line;
        std::string record;
        unsigned dim, edim;

        auto operator<=> (const ScanMatch &) const = default;
    };

    struct ScanReport
    {
        std::size_t total = 0;          // record lines (headers and blanks excluded)
        std::size_t decoded = 0;
        std::size_t connected = 0;
        std::size_t disconnected = 0;
        std::size_t last_line = 0;      // physical lines consumed
        std::vector<ScanMatch> matches; // sorted by line
        std::vector<Graph6Diagnostic> diagnostics;
        double seconds = 0.0;
        bool complete = true;
        std::string failure;
        bool resumed = false;
    };

    struct ScanOptions
    {
        unsigned jobs = 1;
        std::size_t batch = 4096;
        bool strict = false;
        std::optional<std::filesystem::path> checkpoint;
        std::size_t checkpoint_interval = 10'000'000;
    };

    /**
     * Classifies every connected graph in a graph6 stream. Graphs are decoded
     * on the calling thread, solved in batches by an OpenMP team, and merged
     * in stream order, so the report does not depend on jobs.
     *
     * With a checkpoint path, progress is saved after each batch that crosses
     * a multiple of checkpoint_interval records, and an existing checkpoint
     * for the same predicate is resumed.
     */
    auto scan(std::istream & in, const Predicate & pred, const ScanOptions & = { }) -> ScanReport;

    /// Single-threaded reference for scan(); no batching, no checkpoints.
    auto scan_serial(std::istream & in, const Predicate & pred, bool strict = false) -> ScanReport;

    struct Checkpoint
    {
        std::string predicate;
        std::size_t last_line = 0;
        std::size_t decoded = 0, connected = 0, disconnected = 0;
        std::vector<ScanMatch> matches;
        std::vector<Graph6Diagnostic> diagnostics;
    };

    auto write_checkpoint(const std::filesystem::path &, const Checkpoint &) -> void;
    auto read_checkpoint(const std::filesystem::path &) -> std::optional<Checkpoint>;

    inline constexpr unsigned max_enumeration_order = 7;

    /**
     * Every connected labelled simple graph on n vertices, each exactly once,
     * by filtering all 2^(n(n-1)/2) edge subsets. No isomorphism reduction.
     */
    class LabeledConnectedGraphs
    {
        public:
            /// Throws OrderTooLarge for n > 7 and InvalidParams for n = 0.
            explicit LabeledConnectedGraphs(unsigned n);

            auto next() -> std::optional<Graph>;

            static auto from_mask(unsigned n, std::uint64_t mask) -> std::optional<Graph>;

        private:
            unsigned _n;
            std::uint64_t _mask = 0, _end;
    };

    struct OrderSummary
    {
        unsigned order;
        std::size_t graphs = 0;
        std::size_t violations = 0;          // edim < dim
        std::map<int, std::size_t> histogram; // dim - edim -> count
    };

    struct SmallOrderReport
    {
        std::vector<OrderSummary> orders;   // 1..max_n; only 3..max_n count toward violations

        auto violations() const -> std::size_t;
    };

    /// Throws OrderTooLarge for max_n > 7.
    auto verify_small_orders(unsigned max_n, unsigned jobs = 1) -> SmallOrderReport;

    struct RatioWitness
    {
        LabeledGraph graph;
        FamilyParams params;
        unsigned predicted_dim, predicted_edim;
        std::optional<bool> confirmed;   // nothing when solving was skipped
    };

    /**
     * L^ell_{6,1,2} with the least ell >= 1 such that (2 + ell) / 2 >= q.
     * Confirmation certifies both predicted dimensions when the refutation
     * search has at most confirm_budget candidate subsets.
     */
    auto ratio_witness(const Rational & q, bool confirm = true, double confirm_budget = 1e9) -> RatioWitness;

    /// C(n, k) as a double.
    auto subset_count(std::size_t n, std::size_t k) -> double;
}

#endif
