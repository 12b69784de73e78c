/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/conformance.hh>
#include <metricdim/scan.hh>

#include <chrono>
#include <functional>
#include <map>

using std::size_t;
using std::string;
using std::vector;

namespace metricdim
{
    namespace
    {
        struct GadgetGrid
        {
            vector<unsigned> n1, n2, n3;
        };

        auto gadget_grid(Grid grid) -> GadgetGrid
        {
            if (grid == Grid::Small)
                return { { 5, 6, 7 }, { 1, 2 }, { 2, 3 } };
            return { { 5, 6, 7, 8, 9, 10 }, { 1, 2, 3 }, { 2, 3, 4 } };
        }

        auto for_each_gadget(Grid grid, const std::function<void (const FamilyParams &)> & fn) -> void
        {
            auto g = gadget_grid(grid);
            for (auto n1 : g.n1)
                for (auto n2 : g.n2)
                    for (auto n3 : g.n3)
                        fn({ n1, n2, n3, 1 });
        }

        auto describe(const FamilyParams & p) -> string
        {
            if (p.ell == 1)
                return "G_{" + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + std::to_string(p.n3) + "}";
            return "L^" + std::to_string(p.ell) + "_{" + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + std::to_string(p.n3) + "}";
        }

        struct Checker
        {
            SuiteResult & result;

            auto check(bool ok, const string & what) -> void
            {
                ++result.checks;
                if (! ok) {
                    ++result.failures;
                    result.notes.push_back("FAIL " + what);
                }
            }

            auto skip(const string & what) -> void
            {
                ++result.skipped;
                result.notes.push_back("SKIP " + what);
            }
        };

        auto observation1(Grid grid, Checker & c) -> void
        {
            for_each_gadget(grid, [&] (const FamilyParams & p) {
                auto g = make_G(p);
                for (auto kind : { Kind::Vertex, Kind::Edge })
                    c.check(! has_generator_of_size(g.graph, kind, p.n3 - 1),
                            describe(p) + ": " + to_string(kind) + " dimension >= n3");
            });
        }

        auto lemma2(Grid grid, Checker & c) -> void
        {
            for_each_gadget(grid, [&] (const FamilyParams & p) {
                auto g = make_G(p);
                auto bp = blueprint(p.n1);
                auto & dm = g.graph.distances();
                auto a = [&] (unsigned k) { return g.vertex({ 1, Role::A, k }); };

                c.check(bp.beta < p.n1, describe(p) + ": beta < n1");
                c.check(bp.gamma <= bp.delta, describe(p) + ": gamma <= delta");
                c.check(dm.at(a(1), a(bp.alpha)) == dm.at(a(1), a(bp.beta)), describe(p) + ": d(a1,a_alpha) = d(a1,a_beta)");
                c.check(dm.at(a(1), a(bp.alpha)) == bp.gamma, describe(p) + ": gamma = d(a1,a_alpha)");

                // the upper-bound set {j_1..j_{n3-1}, a_alpha, a_beta} resolves both vertices and edges
                LandmarkSet upper;
                for (unsigned k = 1 ; k < p.n3 ; ++k)
                    upper.push_back(g.vertex({ 1, Role::J, k }));
                upper.push_back(a(bp.alpha));
                upper.push_back(a(bp.beta));
                c.check(is_metric_generator(g.graph, upper), describe(p) + ": upper-bound set is a metric generator");
                c.check(is_edge_metric_generator(g.graph, upper), describe(p) + ": upper-bound set is an edge metric generator");

                bool odd = p.n1 % 2 == 1;
                auto vb = canonical_basis(p, Kind::Vertex), eb = canonical_basis(p, Kind::Edge);
                c.check(vb.size() == p.n3 + (odd ? 0 : 1), describe(p) + ": canonical vertex basis size");
                c.check(eb.size() == p.n3 + (odd ? 1 : 0), describe(p) + ": canonical edge basis size");
                c.check(is_metric_generator(g.graph, vb), describe(p) + ": canonical vertex basis resolves");
                c.check(is_edge_metric_generator(g.graph, eb), describe(p) + ": canonical edge basis resolves");
            });
        }

        auto lemma34(Grid grid, Checker & c, Kind kind) -> void
        {
            for_each_gadget(grid, [&] (const FamilyParams & p) {
                auto g = make_G(p);
                bool even = p.n1 % 2 == 0;
                unsigned expected = p.n3 + ((kind == Kind::Vertex) == even ? 1 : 0);
                auto r = resolve(g.graph, kind);
                c.check(r.dimension == expected, describe(p) + ": " + to_string(kind) + " dimension "
                        + std::to_string(r.dimension) + " (expected " + std::to_string(expected) + ")");
            });
        }

        /// The gluing hypothesis on the second graph: v2 is at maximum distance from u2.
        auto far_from(const Graph & g, Vertex u2, Vertex v2) -> bool
        {
            auto & dm = g.distances();
            for (Vertex z = 0 ; z < g.order() ; ++z)
                if (dm.at(u2, z) > dm.at(u2, v2))
                    return false;
            return true;
        }

        auto lemma5(Grid grid, Checker & c) -> void
        {
            vector<FamilyParams> lefts, rights;
            if (grid == Grid::Small) {
                lefts = { { 5, 1, 2 }, { 6, 1, 2 }, { 7, 2, 3 } };
                rights = { { 5, 1, 2 }, { 6, 1, 2 }, { 7, 1, 3 } };
            }
            else {
                for (unsigned n1 = 5 ; n1 <= 8 ; ++n1)
                    for (unsigned n2 = 1 ; n2 <= 2 ; ++n2)
                        for (unsigned n3 = 2 ; n3 <= 3 ; ++n3)
                            lefts.push_back({ n1, n2, n3 });
                for (unsigned n1 = 5 ; n1 <= 8 ; ++n1)
                    for (unsigned n3 = 2 ; n3 <= 3 ; ++n3)
                        rights.push_back({ n1, 1, n3 });
            }

            for (auto & p1 : lefts)
                for (auto & p2 : rights) {
                    auto what = describe(p1) + " + " + describe(p2);
                    auto g1 = make_G(p1), g2 = make_G(p2);
                    auto v1 = g1.vertex({ 1, Role::A, blueprint(p1.n1).alpha });
                    auto v2 = g2.vertex({ 1, Role::J, 1 });
                    auto u2 = g2.vertex({ 1, Role::A, blueprint(p2.n1).alpha });
                    if (! far_from(g2.graph, u2, v2)) {
                        c.skip(what + ": eccentricity hypothesis fails");
                        continue;
                    }

                    auto glued = glue(g1, v1, g2, v2);
                    for (auto kind : { Kind::Vertex, Kind::Edge }) {
                        auto b1 = canonical_basis(p1, kind), b2 = canonical_basis(p2, kind);
                        auto d1 = resolve(g1.graph, kind).dimension, d2 = resolve(g2.graph, kind).dimension;
                        c.check(b1.size() == d1 && b2.size() == d2, what + ": canonical " + to_string(kind) + " bases are bases");

                        auto d = resolve(glued.graph, kind).dimension;
                        c.check(d + 2 == d1 + d2, what + ": " + to_string(kind) + " dimension " + std::to_string(d)
                                + " = " + std::to_string(d1) + " + " + std::to_string(d2) + " - 2");

                        LandmarkSet merged;
                        for (auto z : b1)
                            if (z != v1)
                                merged.push_back(z);
                        for (auto z : b2)
                            if (z != v2)
                                merged.push_back(g1.graph.order() + z);
                        c.check(merged.size() == d && is_generator(glued.graph, kind, merged),
                                what + ": merged " + to_string(kind) + " basis resolves");
                    }
                }
        }

        auto lemma6(Grid grid, Checker & c) -> void
        {
            vector<unsigned> n2s = grid == Grid::Small ? vector<unsigned>{ 1 } : vector<unsigned>{ 1, 2 };
            vector<unsigned> n3s = grid == Grid::Small ? vector<unsigned>{ 2 } : vector<unsigned>{ 2, 3 };
            for (unsigned ell = 1 ; ell <= 3 ; ++ell)
                for (unsigned n1 = 5 ; n1 <= 7 ; ++n1)
                    for (auto n2 : n2s)
                        for (auto n3 : n3s) {
                            FamilyParams p{ n1, n2, n3, ell };
                            auto g = make_L(p);
                            bool odd = n1 % 2 == 1;
                            unsigned dim = odd ? n3 : n3 + ell, edim = odd ? n3 + ell : n3;
                            c.check(g.graph.order() == chain_order(p) && g.graph.is_connected(), describe(p) + ": order and connectivity");
                            c.check(certify_dimension(g.graph, Kind::Vertex, canonical_basis(p, Kind::Vertex), dim),
                                    describe(p) + ": dim = " + std::to_string(dim));
                            c.check(certify_dimension(g.graph, Kind::Edge, canonical_basis(p, Kind::Edge), edim),
                                    describe(p) + ": edim = " + std::to_string(edim));
                        }
        }

        auto theorem1(Grid grid, Checker & c) -> void
        {
            unsigned top = grid == Grid::Small ? 4 : 5;
            for (unsigned r = 2 ; r <= top ; ++r)
                for (unsigned t = 2 ; t <= top ; ++t) {
                    if (r == t)
                        continue;
                    auto n0 = realization_minimum_order(r, t);
                    for (auto n : { n0, n0 + 1, n0 + 5 }) {
                        auto what = "realize(" + std::to_string(r) + "," + std::to_string(t) + "," + std::to_string(n) + ")";
                        auto real = realize(r, t, n);
                        auto & g = real.graph.graph;
                        c.check(g.order() == n, what + ": order");
                        auto vb = canonical_basis(real.params, Kind::Vertex), eb = canonical_basis(real.params, Kind::Edge);
                        c.check(vb.size() == r && is_metric_generator(g, vb), what + ": vertex basis of size dim resolves");
                        c.check(eb.size() == t && is_edge_metric_generator(g, eb), what + ": edge basis of size edim resolves");

                        if (subset_count(n, std::max(r, t) - 1) > desk_scale_budget) {
                            c.skip(what + ": lower-bound refutation exceeds budget");
                            continue;
                        }
                        c.check(! has_generator_of_size(g, Kind::Vertex, r - 1), what + ": no metric generator below dim");
                        c.check(! has_generator_of_size(g, Kind::Edge, t - 1), what + ": no edge metric generator below edim");
                    }
                }
        }

        auto theorem2(Grid grid, Checker & c) -> void
        {
            vector<string> targets = grid == Grid::Small ? vector<string>{ "1", "2" } : vector<string>{ "1", "2", "5/2", "3" };
            for (auto & text : targets) {
                auto q = Rational::parse(text);
                auto w = ratio_witness(q, true, desk_scale_budget);
                auto what = "ratio_witness(" + text + ")";
                c.check(int64_t(w.predicted_dim) * q.den >= q.num * int64_t(w.predicted_edim), what + ": predicted ratio reaches target");
                if (! w.confirmed)
                    c.skip(what + ": confirmation exceeds budget");
                else
                    c.check(*w.confirmed, what + ": dim " + std::to_string(w.predicted_dim) + " and edim "
                            + std::to_string(w.predicted_edim) + " certified");
            }
        }
    }

    auto suite_names() -> const vector<string> &
    {
        static const vector<string> names{
            "observation1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "theorem1", "theorem2"
        };
        return names;
    }

    auto run_suite(const string & name, Grid grid) -> SuiteResult
    {
        static const std::map<string, std::function<void (Grid, Checker &)>> suites{
            { "observation1", observation1 },
            { "lemma2", lemma2 },
            { "lemma3", [] (Grid g, Checker & c) { lemma34(g, c, Kind::Vertex); } },
            { "lemma4", [] (Grid g, Checker & c) { lemma34(g, c, Kind::Edge); } },
            { "lemma5", lemma5 },
            { "lemma6", lemma6 },
            { "theorem1", theorem1 },
            { "theorem2", theorem2 }
        };

        auto it = suites.find(name);
        if (it == suites.end())
            throw InvalidParams("unknown suite '" + name + "'");

        auto start = std::chrono::steady_clock::now();
        SuiteResult result;
        result.name = name;
        Checker checker{ result };
        it->second(grid, checker);
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
}
