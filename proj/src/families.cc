/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/families.hh>

#include <algorithm>
#include <charconv>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace metricdim
{
    auto to_string(const RoleLabel & label, bool with_copy) -> string
    {
        string result;
        switch (label.role) {
            case Role::A: result = "a" + std::to_string(label.index); break;
            case Role::B: result = "b" + std::to_string(label.index); break;
            case Role::C: result = "c"; break;
            case Role::I: result = "i"; break;
            case Role::J: result = "j" + std::to_string(label.index); break;
        }
        if (with_copy)
            result += "^" + std::to_string(label.copy);
        return result;
    }

    auto FamilyParams::validate() const -> void
    {
        if (n1 < 5)
            throw InvalidParams("cycle length n1 must be at least 5");
        if (n2 < 1)
            throw InvalidParams("path length n2 must be at least 1");
        if (n3 < 2)
            throw InvalidParams("pendant count n3 must be at least 2");
        if (ell < 1)
            throw InvalidParams("copy count ell must be at least 1");
    }

    auto blueprint(unsigned n1) -> BasisBlueprint
    {
        return { (n1 + 1) / 2, (n1 + 4) / 2, (n1 - 1) / 2, n1 / 2 };
    }

    auto LabeledGraph::copies() const -> unsigned
    {
        unsigned result = 0;
        for (auto & l : labels)
            result = std::max(result, l.copy);
        return result;
    }

    auto LabeledGraph::vertex(const RoleLabel & label) const -> Vertex
    {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end())
            throw InvalidParams("no vertex labelled " + to_string(label, true));
        return Vertex(it - labels.begin());
    }

    auto LabeledGraph::name(Vertex v) const -> string
    {
        if (labels.empty())
            return std::to_string(v);
        return to_string(labels.at(v), copies() > 1);
    }

    auto LabeledGraph::names(std::span<const Vertex> vs) const -> vector<string>
    {
        vector<string> result;
        for (auto v : vs)
            result.push_back(name(v));
        return result;
    }

    auto gadget_order(unsigned n1, unsigned n2, unsigned n3) -> size_t
    {
        return size_t{ n1 } + n2 + n3 + 2;
    }

    auto chain_order(const FamilyParams & p) -> size_t
    {
        return gadget_order(p.n1, p.n2, p.n3) + size_t{ p.ell - 1 } * gadget_order(p.n1, 1, 2);
    }

    namespace
    {
        /// Ids of one gadget copy placed at base.
        struct CopyLayout
        {
            Vertex base;
            unsigned n1, n2, n3;

            auto a(unsigned k) const -> Vertex { return base + k - 1; }
            auto b(unsigned k) const -> Vertex { return base + n1 + k - 1; }
            auto c() const -> Vertex { return base + n1 + n2; }
            auto i() const -> Vertex { return c() + 1; }
            auto j(unsigned k) const -> Vertex { return i() + k; }
        };

        auto chain_layouts(const FamilyParams & p) -> vector<CopyLayout>
        {
            vector<CopyLayout> result;
            result.push_back({ 0, p.n1, p.n2, p.n3 });
            Vertex base = Vertex(gadget_order(p.n1, p.n2, p.n3));
            for (unsigned k = 2 ; k <= p.ell ; ++k) {
                result.push_back({ base, p.n1, 1, 2 });
                base += Vertex(gadget_order(p.n1, 1, 2));
            }
            return result;
        }

        auto add_gadget(const CopyLayout & at, unsigned copy, vector<Edge> & edges, vector<RoleLabel> & labels, bool with_pendants) -> void
        {
            for (unsigned k = 1 ; k <= at.n1 ; ++k) {
                edges.push_back({ at.a(k), at.a(k % at.n1 + 1) });
                labels.push_back({ copy, Role::A, k });
            }
            edges.push_back({ at.a(2), at.b(1) });
            for (unsigned k = 1 ; k <= at.n2 ; ++k) {
                if (k > 1)
                    edges.push_back({ at.b(k - 1), at.b(k) });
                labels.push_back({ copy, Role::B, k });
            }
            edges.push_back({ at.a(at.n1), at.c() });
            labels.push_back({ copy, Role::C, 0 });
            if (! with_pendants)
                return;

            edges.push_back({ at.a(1), at.i() });
            labels.push_back({ copy, Role::I, 0 });
            for (unsigned k = 1 ; k <= at.n3 ; ++k) {
                edges.push_back({ at.i(), at.j(k) });
                labels.push_back({ copy, Role::J, k });
            }
        }

        auto parse_unsigned(const string & text) -> unsigned
        {
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
                throw InvalidParams("expected a non-negative integer, got '" + text + "'");
            return value;
        }

        auto parse_list(const string & text, size_t expected) -> vector<unsigned>
        {
            vector<unsigned> result;
            size_t start = 0;
            while (true) {
                auto comma = text.find(',', start);
                result.push_back(parse_unsigned(text.substr(start, comma == string::npos ? string::npos : comma - start)));
                if (comma == string::npos)
                    break;
                start = comma + 1;
            }
            if (result.size() != expected)
                throw InvalidParams("expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
            return result;
        }
    }

    auto make_G(const FamilyParams & p) -> LabeledGraph
    {
        auto q = p;
        q.ell = 1;
        return make_L(q);
    }

    auto make_G_sub(unsigned n1, unsigned n2) -> LabeledGraph
    {
        FamilyParams{ n1, n2, 2, 1 }.validate();
        vector<Edge> edges;
        LabeledGraph result;
        add_gadget({ 0, n1, n2, 0 }, 1, edges, result.labels, false);
        result.graph = Graph(Vertex(n1 + n2 + 1), edges);
        return result;
    }

    auto make_L(const FamilyParams & p) -> LabeledGraph
    {
        p.validate();
        auto alpha = blueprint(p.n1).alpha;
        auto layouts = chain_layouts(p);

        vector<Edge> edges;
        LabeledGraph result;
        for (unsigned k = 0 ; k < layouts.size() ; ++k) {
            add_gadget(layouts[k], k + 1, edges, result.labels, true);
            if (k > 0)
                edges.push_back({ layouts[k - 1].a(alpha), layouts[k].j(1) });
        }
        result.graph = Graph(Vertex(chain_order(p)), edges);
        return result;
    }

    auto canonical_basis(const FamilyParams & p, Kind kind) -> LandmarkSet
    {
        p.validate();
        auto bp = blueprint(p.n1);
        bool odd = p.n1 % 2 == 1;
        // the vertex basis needs a_beta exactly when n1 is even, the edge basis when n1 is odd
        bool with_beta = (kind == Kind::Vertex) ? ! odd : odd;

        auto layouts = chain_layouts(p);
        std::set<Vertex> result;
        for (auto & at : layouts) {
            for (unsigned k = 1 ; k < at.n3 ; ++k)
                result.insert(at.j(k));
            result.insert(at.a(bp.alpha));
            if (with_beta)
                result.insert(at.a(bp.beta));
        }
        for (size_t k = 0 ; k + 1 < layouts.size() ; ++k) {
            result.erase(layouts[k].a(bp.alpha));
            result.erase(layouts[k + 1].j(1));
        }
        return LandmarkSet(result.begin(), result.end());
    }

    auto glue(const LabeledGraph & g1, Vertex v1, const LabeledGraph & g2, Vertex v2) -> LabeledGraph
    {
        if (v1 >= g1.graph.order())
            throw VertexOutOfRange(v1, g1.graph.order());
        if (v2 >= g2.graph.order())
            throw VertexOutOfRange(v2, g2.graph.order());

        LabeledGraph result;
        result.graph = add_edge(disjoint_union(g1.graph, g2.graph), v1, g1.graph.order() + v2);
        if (! g1.labels.empty() && ! g2.labels.empty()) {
            auto shift = g1.copies();
            result.labels = g1.labels;
            for (auto l : g2.labels) {
                l.copy += shift;
                result.labels.push_back(l);
            }
        }
        return result;
    }

    auto make_path(unsigned n) -> Graph
    {
        if (n < 1)
            throw InvalidParams("path needs at least one vertex");
        vector<Edge> edges;
        for (Vertex v = 1 ; v < n ; ++v)
            edges.push_back({ v - 1, v });
        return Graph(n, edges);
    }

    auto make_cycle(unsigned n) -> Graph
    {
        if (n < 3)
            throw InvalidParams("cycle needs at least three vertices");
        vector<Edge> edges;
        for (Vertex v = 0 ; v < n ; ++v)
            edges.push_back({ v, (v + 1) % n });
        return Graph(n, edges);
    }

    auto make_complete(unsigned n) -> Graph
    {
        if (n < 1)
            throw InvalidParams("complete graph needs at least one vertex");
        vector<Edge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                edges.push_back({ u, v });
        return Graph(n, edges);
    }

    auto make_star(unsigned leaves) -> Graph
    {
        vector<Edge> edges;
        for (Vertex v = 1 ; v <= leaves ; ++v)
            edges.push_back({ 0, v });
        return Graph(leaves + 1, edges);
    }

    namespace
    {
        auto realization_params(unsigned dim, unsigned edim) -> FamilyParams
        {
            if (dim < 2 || edim < 2)
                throw InvalidTarget("both targets must be at least 2");
            if (dim == edim)
                throw EqualDimensionsUnsupported();
            if (dim < edim)
                return { 5, 1, dim, edim - dim };
            return { 6, 1, edim, dim - edim };
        }
    }

    auto realization_minimum_order(unsigned dim, unsigned edim) -> size_t
    {
        return chain_order(realization_params(dim, edim));
    }

    auto realize(unsigned dim, unsigned edim, size_t order) -> Realization
    {
        auto p = realization_params(dim, edim);
        auto n0 = chain_order(p);
        if (order < n0)
            throw OrderTooSmall(order, n0);
        p.n2 = unsigned(1 + order - n0);
        return { make_L(p), p, n0, dim, edim };
    }

    auto parse_family_params(const string & spec) -> std::optional<FamilyParams>
    {
        if (spec.starts_with("G:")) {
            auto v = parse_list(spec.substr(2), 3);
            FamilyParams p{ v[0], v[1], v[2], 1 };
            p.validate();
            return p;
        }
        if (spec.starts_with("L:")) {
            auto v = parse_list(spec.substr(2), 4);
            FamilyParams p{ v[1], v[2], v[3], v[0] };
            p.validate();
            return p;
        }
        return std::nullopt;
    }

    auto parse_family(const string & spec) -> LabeledGraph
    {
        if (auto p = parse_family_params(spec))
            return make_L(*p);

        auto colon = spec.find(':');
        if (colon == string::npos)
            throw InvalidParams("family spec needs a 'name:' prefix: '" + spec + "'");
        auto name = spec.substr(0, colon), rest = spec.substr(colon + 1);

        if (name == "cycle")
            return { make_cycle(parse_unsigned(rest)), { } };
        if (name == "path")
            return { make_path(parse_unsigned(rest)), { } };
        if (name == "complete")
            return { make_complete(parse_unsigned(rest)), { } };
        if (name == "cp") {
            // left-associative: the factor after the last 'x' is the right operand
            auto x = rest.rfind('x');
            if (x == string::npos)
                throw InvalidParams("cp spec needs '<spec>x<spec>': '" + spec + "'");
            auto left = parse_family(rest.substr(0, x)), right = parse_family(rest.substr(x + 1));
            return { cartesian_product(left.graph, right.graph), { } };
        }
        throw InvalidParams("unknown family '" + name + "'");
    }

    auto family_spec_examples() -> const vector<string> &
    {
        static const vector<string> examples{
            "G:7,3,4", "L:3,7,3,4", "cycle:8", "path:5", "complete:5", "cp:cycle:8xcycle:8"
        };
        return examples;
    }
}
