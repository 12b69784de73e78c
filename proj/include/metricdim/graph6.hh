/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_GRAPH6_HH
#define METRICDIM_GUARD_GRAPH6_HH 1

#include <metricdim/graph.hh>

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace metricdim
{
    enum class Graph6ErrorKind
    {
        MalformedHeader,
        TruncatedBitVector,
        TrailingBytes,
        NonPrintableByte,
        PaddingBitsSet
    };

    auto to_string(Graph6ErrorKind) -> const char *;

    class Graph6Error : public Error
    {
        public:
            Graph6Error(Graph6ErrorKind kind, const std::string & message) :
                Error(std::string(to_string(kind)) + ": " + message),
                _kind(kind)
            {
            }

            auto kind() const -> Graph6ErrorKind { return _kind; }

        private:
            Graph6ErrorKind _kind;
    };

    class GraphTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    /// Largest order with a four-byte graph6 header.
    inline constexpr Vertex graph6_max_order = 258047;

    /// Decodes one record. A single trailing "\n" or "\r\n" is ignored.
    auto decode_graph6(std::string_view record) -> Graph;

    auto encode_graph6(const Graph & g) -> std::string;

    struct Graph6Diagnostic
    {
        std::size_t line;
        Graph6ErrorKind kind;
        std::string message;
    };

    struct Graph6Entry
    {
        std::size_t line;
        std::string record;
        Graph graph;
    };

    /**
     * Lazy line-by-line reader. A leading ">>graph6<<" is stripped, then blank
     * lines and lines starting with '>' are skipped. In lenient mode a bad
     * record becomes a diagnostic and reading continues; in strict mode
     * next() rethrows the Graph6Error.
     */
    class Graph6Reader
    {
        public:
            explicit Graph6Reader(std::istream & in, bool strict = false) : _in(in), _strict(strict) { }

            /// The next graph or diagnostic, or nothing at end of input. Throws std::ios_base::failure on a read error.
            auto next() -> std::optional<std::variant<Graph6Entry, Graph6Diagnostic>>;

            /// Skip physical lines until line() == line_number.
            auto skip_to(std::size_t line_number) -> void;

            /// Number of physical lines consumed so far.
            auto line() const -> std::size_t { return _line; }

            /// Records attempted so far, excluding blank and header lines.
            auto records() const -> std::size_t { return _records; }

        private:
            std::istream & _in;
            bool _strict;
            std::size_t _line = 0;
            std::size_t _records = 0;
            std::string _buffer;
    };
}

#endif
