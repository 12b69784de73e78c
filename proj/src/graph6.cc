/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/graph6.hh>

#include <vector>

using std::size_t;
using std::string;
using std::string_view;

namespace metricdim
{
    auto to_string(Graph6ErrorKind kind) -> const char *
    {
        switch (kind) {
            case Graph6ErrorKind::MalformedHeader:    return "MalformedHeader";
            case Graph6ErrorKind::TruncatedBitVector: return "TruncatedBitVector";
            case Graph6ErrorKind::TrailingBytes:      return "TrailingBytes";
            case Graph6ErrorKind::NonPrintableByte:   return "NonPrintableByte";
            case Graph6ErrorKind::PaddingBitsSet:     return "PaddingBitsSet";
        }
        return "?";
    }

    namespace
    {
        auto strip_newline(string_view record) -> string_view
        {
            if (record.ends_with('\n'))
                record.remove_suffix(1);
            if (record.ends_with('\r'))
                record.remove_suffix(1);
            return record;
        }
    }

    auto decode_graph6(string_view record) -> Graph
    {
        record = strip_newline(record);
        if (record.empty())
            throw Graph6Error(Graph6ErrorKind::MalformedHeader, "empty record");

        for (size_t p = 0 ; p < record.size() ; ++p) {
            auto byte = static_cast<unsigned char>(record[p]);
            if (byte < 63 || byte > 126)
                throw Graph6Error(Graph6ErrorKind::NonPrintableByte, "byte " + std::to_string(byte) + " at offset " + std::to_string(p));
        }

        size_t pos = 0;
        Vertex n = 0;
        if (record[0] != '~') {
            n = Vertex(record[0] - 63);
            pos = 1;
        }
        else {
            if (record.size() >= 2 && record[1] == '~')
                throw Graph6Error(Graph6ErrorKind::MalformedHeader, "eight-byte order header (n >= 2^18) is not supported");
            if (record.size() < 4)
                throw Graph6Error(Graph6ErrorKind::MalformedHeader, "four-byte order header cut short");
            for (size_t p = 1 ; p < 4 ; ++p)
                n = (n << 6) | Vertex(record[p] - 63);
            if (n < 63 || n > graph6_max_order)
                throw Graph6Error(Graph6ErrorKind::MalformedHeader, "four-byte order header holds non-canonical order " + std::to_string(n));
            pos = 4;
        }

        size_t bits = size_t{ n } * (n - (n > 0)) / 2;
        size_t bytes = (bits + 5) / 6;
        size_t have = record.size() - pos;
        if (have < bytes)
            throw Graph6Error(Graph6ErrorKind::TruncatedBitVector,
                    "order " + std::to_string(n) + " needs " + std::to_string(bytes) + " data bytes, got " + std::to_string(have));
        if (have > bytes)
            throw Graph6Error(Graph6ErrorKind::TrailingBytes,
                    "order " + std::to_string(n) + " needs " + std::to_string(bytes) + " data bytes, got " + std::to_string(have));

        if (bytes > 0 && bits % 6 != 0) {
            unsigned last = unsigned(record[pos + bytes - 1] - 63);
            unsigned pad = unsigned(6 - bits % 6);
            if (last & ((1u << pad) - 1))
                throw Graph6Error(Graph6ErrorKind::PaddingBitsSet, "non-zero padding in final byte");
        }

        std::vector<Edge> edges;
        size_t k = 0;
        for (Vertex v = 1 ; v < n ; ++v)
            for (Vertex u = 0 ; u < v ; ++u, ++k) {
                unsigned byte = unsigned(record[pos + k / 6] - 63);
                if ((byte >> (5 - k % 6)) & 1)
                    edges.push_back({ u, v });
            }
        return Graph(n, edges);
    }

    auto encode_graph6(const Graph & g) -> string
    {
        auto n = g.order();
        if (n > graph6_max_order)
            throw GraphTooLarge("graph6 encoding supports orders up to " + std::to_string(graph6_max_order));

        string result;
        if (n <= 62)
            result.push_back(char(63 + n));
        else {
            result.push_back('~');
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                result.push_back(char(63 + ((n >> shift) & 63)));
        }

        size_t bits = size_t{ n } * (n - (n > 0)) / 2;
        std::vector<unsigned char> data((bits + 5) / 6, 0);
        for (auto & e : g.edges()) {
            // column-major upper triangle: pair (u, v) with u < v sits at v(v-1)/2 + u
            size_t k = size_t{ e.v } * (e.v - 1) / 2 + e.u;
            data[k / 6] |= (unsigned char)(1u << (5 - k % 6));
        }
        for (auto d : data)
            result.push_back(char(63 + d));
        return result;
    }

    namespace
    {
        // generators write the header directly in front of the first record
        auto strip_header(string & line) -> void
        {
            constexpr string_view header = ">>graph6<<";
            if (line.starts_with(header))
                line.erase(0, header.size());
        }
    }

    auto Graph6Reader::next() -> std::optional<std::variant<Graph6Entry, Graph6Diagnostic>>
    {
        while (true) {
            if (! std::getline(_in, _buffer)) {
                if (_in.bad())
                    throw std::ios_base::failure("read error after line " + std::to_string(_line));
                return std::nullopt;
            }
            ++_line;

            if (! _buffer.empty() && _buffer.back() == '\r')
                _buffer.pop_back();
            strip_header(_buffer);
            if (_buffer.empty() || _buffer[0] == '>')
                continue;

            ++_records;
            try {
                auto g = decode_graph6(_buffer);
                return Graph6Entry{ _line, _buffer, std::move(g) };
            }
            catch (const Graph6Error & e) {
                if (_strict)
                    throw;
                return Graph6Diagnostic{ _line, e.kind(), e.what() };
            }
        }
    }

    auto Graph6Reader::skip_to(size_t line_number) -> void
    {
        while (_line < line_number && std::getline(_in, _buffer)) {
            ++_line;
            if (! _buffer.empty() && _buffer.back() == '\r')
                _buffer.pop_back();
            strip_header(_buffer);
            if (! _buffer.empty() && _buffer[0] != '>')
                ++_records;
        }
        if (_in.bad())
            throw std::ios_base::failure("read error after line " + std::to_string(_line));
    }
}
