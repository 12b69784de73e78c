/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/scan.hh>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <omp.h>

using std::int64_t;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace metricdim
{
    namespace
    {
        auto parse_int(const string & text) -> int64_t
        {
            int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
                throw InvalidParams("expected an integer, got '" + text + "'");
            return value;
        }
    }

    auto Rational::parse(const string & text) -> Rational
    {
        Rational r;
        if (auto slash = text.find('/') ; slash != string::npos) {
            r.num = parse_int(text.substr(0, slash));
            r.den = parse_int(text.substr(slash + 1));
        }
        else if (auto dot = text.find('.') ; dot != string::npos) {
            auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 9 || frac.find_first_not_of("0123456789") != string::npos)
                throw InvalidParams("bad decimal '" + text + "'");
            r.den = 1;
            for (size_t i = 0 ; i < frac.size() ; ++i)
                r.den *= 10;
            bool negative = whole.starts_with('-');
            auto w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
            r.num = std::abs(w) * r.den + parse_int(frac);
            if (negative)
                r.num = -r.num;
        }
        else
            r.num = parse_int(text);

        if (r.den <= 0)
            throw InvalidParams("denominator must be positive in '" + text + "'");
        auto g = std::gcd(r.num, r.den);
        if (g > 1) {
            r.num /= g;
            r.den /= g;
        }
        return r;
    }

    auto to_string(const Rational & r) -> string
    {
        return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
    }

    auto Predicate::parse(const string & text) -> Predicate
    {
        Predicate p;
        if (text == "lt")
            p.cmp = Comparison::Lt;
        else if (text == "gt")
            p.cmp = Comparison::Gt;
        else if (text == "eq")
            p.cmp = Comparison::Eq;
        else if (text.starts_with("diff:")) {
            p.cmp = Comparison::Diff;
            p.diff = parse_int(text.substr(5));
        }
        else if (text.starts_with("ratio:")) {
            p.cmp = Comparison::Ratio;
            p.ratio = Rational::parse(text.substr(6));
        }
        else
            throw InvalidParams("unknown predicate '" + text + "' (expected lt, gt, eq, diff:k, ratio:q)");
        return p;
    }

    auto to_string(const Predicate & p) -> string
    {
        switch (p.cmp) {
            case Comparison::Lt:    return "lt";
            case Comparison::Gt:    return "gt";
            case Comparison::Eq:    return "eq";
            case Comparison::Diff:  return "diff:" + std::to_string(p.diff);
            case Comparison::Ratio: return "ratio:" + to_string(p.ratio);
        }
        return "?";
    }

    auto Predicate::matches(unsigned dim, unsigned edim) const -> bool
    {
        switch (cmp) {
            case Comparison::Lt:    return edim < dim;
            case Comparison::Gt:    return edim > dim;
            case Comparison::Eq:    return edim == dim;
            case Comparison::Diff:  return int64_t(dim) - int64_t(edim) == diff;
            case Comparison::Ratio: return int64_t(dim) * ratio.den >= ratio.num * int64_t(edim);
        }
        return false;
    }

    auto classify(const Graph & g, const Predicate & pred) -> std::optional<Dimensions>
    {
        auto edim = resolve(g, Kind::Edge).dimension;

        if (! pred.early_exit) {
            auto dim = resolve(g, Kind::Vertex).dimension;
            if (pred.matches(dim, edim))
                return Dimensions{ dim, edim };
            return std::nullopt;
        }

        // The vertex search only needs to run up to the cardinality where the
        // outcome is decided. When "no generator up to cap" means a match, the
        // exact dimension is only computed for the (rare) matching graphs.
        auto exact_if_at_most = [&] (int64_t cap) -> std::optional<unsigned> {
            if (cap < 0)
                return std::nullopt;
            if (auto r = resolve_capped(g, Kind::Vertex, unsigned(cap)))
                return r->dimension;
            return std::nullopt;
        };
        auto full = [&] () { return resolve(g, Kind::Vertex).dimension; };

        switch (pred.cmp) {
            case Comparison::Lt:
                if (exact_if_at_most(edim))
                    return std::nullopt;
                return Dimensions{ full(), edim };

            case Comparison::Gt:
                if (auto dim = exact_if_at_most(int64_t(edim) - 1))
                    return Dimensions{ *dim, edim };
                return std::nullopt;

            case Comparison::Eq:
            case Comparison::Diff: {
                auto target = int64_t(edim) + (pred.cmp == Comparison::Diff ? pred.diff : 0);
                if (auto dim = exact_if_at_most(target) ; dim && *dim == target)
                    return Dimensions{ *dim, edim };
                return std::nullopt;
            }

            case Comparison::Ratio: {
                // match iff dim >= ceil(num * edim / den)
                auto need = pred.ratio.num * int64_t(edim);
                auto threshold = need <= 0 ? need / pred.ratio.den : (need + pred.ratio.den - 1) / pred.ratio.den;
                if (exact_if_at_most(threshold - 1))
                    return std::nullopt;
                return Dimensions{ full(), edim };
            }
        }
        return std::nullopt;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }

        struct Slot
        {
            size_t line;
            string record;
            Graph graph;
            bool connected = false;
            std::optional<Dimensions> result;
        };
    }

    auto scan_serial(std::istream & in, const Predicate & pred, bool strict) -> ScanReport
    {
        auto start = Clock::now();
        ScanReport report;
        Graph6Reader reader(in, strict);
        try {
            while (auto item = reader.next()) {
                if (auto diag = std::get_if<Graph6Diagnostic>(&*item)) {
                    report.diagnostics.push_back(*diag);
                    continue;
                }
                auto & entry = std::get<Graph6Entry>(*item);
                ++report.decoded;
                if (! entry.graph.is_connected()) {
                    ++report.disconnected;
                    continue;
                }
                ++report.connected;
                if (auto d = classify(entry.graph, pred))
                    report.matches.push_back({ entry.line, entry.record, d->dim, d->edim });
            }
        }
        catch (const Graph6Error & e) {
            report.complete = false;
            report.failure = e.what();
            report.diagnostics.push_back({ reader.line(), e.kind(), e.what() });
        }
        catch (const std::ios_base::failure & e) {
            report.complete = false;
            report.failure = e.what();
        }
        report.total = reader.records();
        report.last_line = reader.line();
        report.seconds = seconds_since(start);
        return report;
    }

    auto scan(std::istream & in, const Predicate & pred, const ScanOptions & options) -> ScanReport
    {
        auto start = Clock::now();
        ScanReport report;
        Graph6Reader reader(in, options.strict);
        auto pred_name = to_string(pred);

        if (options.checkpoint)
            if (auto cp = read_checkpoint(*options.checkpoint)) {
                if (cp->predicate != pred_name)
                    throw Error("checkpoint " + options.checkpoint->string() + " was written for predicate "
                            + cp->predicate + ", not " + pred_name);
                reader.skip_to(cp->last_line);
                report.decoded = cp->decoded;
                report.connected = cp->connected;
                report.disconnected = cp->disconnected;
                report.matches = std::move(cp->matches);
                report.diagnostics = std::move(cp->diagnostics);
                report.resumed = true;
            }

        auto save = [&] () {
            if (! options.checkpoint)
                return;
            write_checkpoint(*options.checkpoint, { pred_name, reader.line(), report.decoded, report.connected,
                    report.disconnected, report.matches, report.diagnostics });
        };

        auto batch_size = std::max<size_t>(1, options.batch);
        auto interval = std::max<size_t>(1, options.checkpoint_interval);
        auto next_checkpoint = (reader.records() / interval + 1) * interval;
        vector<Slot> batch;
        batch.reserve(batch_size);

        bool done = false;
        while (! done) {
            batch.clear();
            try {
                while (batch.size() < batch_size) {
                    auto item = reader.next();
                    if (! item) {
                        done = true;
                        break;
                    }
                    if (auto diag = std::get_if<Graph6Diagnostic>(&*item)) {
                        report.diagnostics.push_back(*diag);
                        continue;
                    }
                    auto & entry = std::get<Graph6Entry>(*item);
                    batch.push_back({ entry.line, std::move(entry.record), std::move(entry.graph), false, std::nullopt });
                }
            }
            catch (const Graph6Error & e) {
                report.complete = false;
                report.failure = e.what();
                report.diagnostics.push_back({ reader.line(), e.kind(), e.what() });
                done = true;
            }
            catch (const std::ios_base::failure & e) {
                report.complete = false;
                report.failure = e.what();
                done = true;
            }

            long count = long(batch.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(int(std::max(1u, options.jobs)))
            for (long k = 0 ; k < count ; ++k) {
                auto & slot = batch[k];
                slot.connected = slot.graph.is_connected();
                if (slot.connected)
                    slot.result = classify(slot.graph, pred);
            }

            for (auto & slot : batch) {
                ++report.decoded;
                if (! slot.connected) {
                    ++report.disconnected;
                    continue;
                }
                ++report.connected;
                if (slot.result)
                    report.matches.push_back({ slot.line, std::move(slot.record), slot.result->dim, slot.result->edim });
            }

            // a partial batch is not checkpointed: its last line may be cut short
            if (report.complete && reader.records() >= next_checkpoint) {
                save();
                next_checkpoint = (reader.records() / interval + 1) * interval;
            }
        }

        if (report.complete)
            save();

        std::sort(report.matches.begin(), report.matches.end());
        report.total = reader.records();
        report.last_line = reader.line();
        report.seconds = seconds_since(start);
        return report;
    }

    auto write_checkpoint(const std::filesystem::path & path, const Checkpoint & cp) -> void
    {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << "last_line_processed=" << cp.last_line << '\n'
                << "predicate=" << cp.predicate << '\n'
                << "decoded=" << cp.decoded << '\n'
                << "connected=" << cp.connected << '\n'
                << "disconnected=" << cp.disconnected << '\n';
            for (auto & m : cp.matches)
                out << "match=" << m.line << '\t' << m.record << '\t' << m.dim << '\t' << m.edim << '\n';
            for (auto & d : cp.diagnostics) {
                auto message = d.message;
                std::replace_if(message.begin(), message.end(), [] (char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
                out << "diagnostic=" << d.line << '\t' << to_string(d.kind) << '\t' << message << '\n';
            }
            out.flush();
            if (! out)
                throw Error("could not write checkpoint " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    }

    auto read_checkpoint(const std::filesystem::path & path) -> std::optional<Checkpoint>
    {
        std::ifstream in(path);
        if (! in)
            return std::nullopt;

        auto bad = [&] (const string & line) {
            return Error("malformed checkpoint line in " + path.string() + ": '" + line + "'");
        };
        auto to_size = [&] (const string & text, const string & line) {
            try {
                auto v = parse_int(text);
                if (v < 0)
                    throw bad(line);
                return size_t(v);
            }
            catch (const InvalidParams &) {
                throw bad(line);
            }
        };
        auto split_tabs = [] (const string & text) {
            vector<string> parts;
            std::stringstream ss(text);
            string part;
            while (std::getline(ss, part, '\t'))
                parts.push_back(part);
            return parts;
        };

        Checkpoint cp;
        bool have_line = false;
        string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto eq = line.find('=');
            if (eq == string::npos)
                throw bad(line);
            auto key = line.substr(0, eq), value = line.substr(eq + 1);
            if (key == "last_line_processed") {
                cp.last_line = to_size(value, line);
                have_line = true;
            }
            else if (key == "predicate")
                cp.predicate = value;
            else if (key == "decoded")
                cp.decoded = to_size(value, line);
            else if (key == "connected")
                cp.connected = to_size(value, line);
            else if (key == "disconnected")
                cp.disconnected = to_size(value, line);
            else if (key == "match") {
                auto parts = split_tabs(value);
                if (parts.size() != 4)
                    throw bad(line);
                cp.matches.push_back({ to_size(parts[0], line), parts[1], unsigned(to_size(parts[2], line)), unsigned(to_size(parts[3], line)) });
            }
            else if (key == "diagnostic") {
                auto parts = split_tabs(value);
                if (parts.size() < 2)
                    throw bad(line);
                Graph6ErrorKind kind = Graph6ErrorKind::MalformedHeader;
                for (auto k : { Graph6ErrorKind::MalformedHeader, Graph6ErrorKind::TruncatedBitVector, Graph6ErrorKind::TrailingBytes,
                        Graph6ErrorKind::NonPrintableByte, Graph6ErrorKind::PaddingBitsSet })
                    if (parts[1] == to_string(k))
                        kind = k;
                cp.diagnostics.push_back({ to_size(parts[0], line), kind, parts.size() > 2 ? parts[2] : "" });
            }
            else
                throw bad(line);
        }
        if (! have_line)
            throw Error("checkpoint " + path.string() + " has no last_line_processed entry");
        return cp;
    }

    LabeledConnectedGraphs::LabeledConnectedGraphs(unsigned n) :
        _n(n)
    {
        if (n == 0)
            throw InvalidParams("order must be at least 1");
        if (n > max_enumeration_order)
            throw OrderTooLarge("labelled enumeration supports orders up to " + std::to_string(max_enumeration_order));
        _end = uint64_t{ 1 } << (n * (n - 1) / 2);
    }

    auto LabeledConnectedGraphs::from_mask(unsigned n, uint64_t mask) -> std::optional<Graph>
    {
        // bit k of mask is the k-th pair in (0,1), (0,2), (1,2), (0,3), ... order
        unsigned rows[max_enumeration_order] = { };
        vector<Edge> edges;
        unsigned k = 0;
        for (unsigned v = 1 ; v < n ; ++v)
            for (unsigned u = 0 ; u < v ; ++u, ++k)
                if ((mask >> k) & 1) {
                    rows[u] |= 1u << v;
                    rows[v] |= 1u << u;
                    edges.push_back({ u, v });
                }

        unsigned seen = 1, frontier = 1;
        while (frontier) {
            unsigned next = 0;
            for (unsigned v = 0 ; v < n ; ++v)
                if ((frontier >> v) & 1)
                    next |= rows[v];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << n) - 1)
            return std::nullopt;
        return Graph(n, edges);
    }

    auto LabeledConnectedGraphs::next() -> std::optional<Graph>
    {
        while (_mask < _end)
            if (auto g = from_mask(_n, _mask++))
                return g;
        return std::nullopt;
    }

    auto SmallOrderReport::violations() const -> size_t
    {
        size_t result = 0;
        for (auto & o : orders)
            if (o.order >= 3)
                result += o.violations;
        return result;
    }

    auto verify_small_orders(unsigned max_n, unsigned jobs) -> SmallOrderReport
    {
        if (max_n > max_enumeration_order)
            throw OrderTooLarge("small-order verification supports orders up to " + std::to_string(max_enumeration_order));

        SmallOrderReport report;
        for (unsigned n = 1 ; n <= max_n ; ++n) {
            OrderSummary summary{ n, 0, 0, { } };
            long end = long(uint64_t{ 1 } << (n * (n - 1) / 2));

#pragma omp parallel num_threads(int(std::max(1u, jobs)))
            {
                OrderSummary local{ n, 0, 0, { } };
#pragma omp for schedule(dynamic, 256) nowait
                for (long mask = 0 ; mask < end ; ++mask) {
                    auto g = LabeledConnectedGraphs::from_mask(n, uint64_t(mask));
                    if (! g)
                        continue;
                    auto dim = resolve(*g, Kind::Vertex).dimension;
                    auto edim = resolve(*g, Kind::Edge).dimension;
                    ++local.graphs;
                    ++local.histogram[int(dim) - int(edim)];
                    if (edim < dim)
                        ++local.violations;
                }
#pragma omp critical
                {
                    summary.graphs += local.graphs;
                    summary.violations += local.violations;
                    for (auto & [d, c] : local.histogram)
                        summary.histogram[d] += c;
                }
            }
            report.orders.push_back(std::move(summary));
        }
        return report;
    }

    auto subset_count(size_t n, size_t k) -> double
    {
        if (k > n)
            return 0.0;
        double result = 1.0;
        for (size_t i = 1 ; i <= k ; ++i)
            result = result * double(n - k + i) / double(i);
        return result;
    }

    auto ratio_witness(const Rational & q, bool confirm, double confirm_budget) -> RatioWitness
    {
        if (q.num < q.den)
            throw InvalidParams("ratio target must be at least 1");

        // (2 + ell) / 2 >= num / den  <=>  ell >= (2 num - 2 den) / den
        auto need = 2 * q.num - 2 * q.den;
        unsigned ell = unsigned(std::max<int64_t>(1, (need + q.den - 1) / q.den));

        FamilyParams p{ 6, 1, 2, ell };
        RatioWitness result{ make_L(p), p, 2 + ell, 2, std::nullopt };
        if (! confirm)
            return result;

        auto n = result.graph.graph.order();
        if (subset_count(n, result.predicted_dim - 1) > confirm_budget)
            return result;

        auto & g = result.graph.graph;
        result.confirmed = certify_dimension(g, Kind::Vertex, canonical_basis(p, Kind::Vertex), result.predicted_dim)
            && certify_dimension(g, Kind::Edge, canonical_basis(p, Kind::Edge), result.predicted_edim);
        return result;
    }
}
