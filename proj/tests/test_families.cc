/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <metricdim/conformance.hh>
#include <metricdim/families.hh>
#include <metricdim/solver.hh>

#include "oracle/naive.hh"

#include <algorithm>
#include <set>

using namespace metricdim;

namespace
{
    auto names(const LabeledGraph & g, const LandmarkSet & s) -> std::set<std::string>
    {
        auto list = g.names(s);
        return { list.begin(), list.end() };
    }

    auto grid() -> std::vector<FamilyParams>
    {
        std::vector<FamilyParams> result;
        for (unsigned n1 = 5 ; n1 <= 10 ; ++n1)
            for (unsigned n2 = 1 ; n2 <= 3 ; ++n2)
                for (unsigned n3 = 2 ; n3 <= 4 ; ++n3)
                    result.push_back({ n1, n2, n3, 1 });
        return result;
    }
}

TEST_CASE("gadget orders and sizes")
{
    auto g734 = make_G({ 7, 3, 4, 1 });
    CHECK(g734.graph.order() == 16);
    CHECK(g734.graph.size() == 16);
    CHECK(make_G({ 5, 1, 2, 1 }).graph.order() == 10);
    CHECK(make_G({ 5, 1, 2, 1 }).graph.size() == 10);
    CHECK(make_G({ 6, 1, 2, 1 }).graph.order() == 11);

    // one cycle plus trees hanging off it
    for (auto & p : grid()) {
        auto g = make_G(p);
        CHECK(g.graph.order() == p.n1 + p.n2 + p.n3 + 2);
        CHECK(g.graph.order() == gadget_order(p.n1, p.n2, p.n3));
        CHECK(g.graph.size() == g.graph.order());
        CHECK(g.graph.is_connected());
    }

    CHECK_THROWS_AS(make_G({ 4, 1, 2, 1 }), InvalidParams);
    CHECK_THROWS_AS(make_G({ 5, 0, 2, 1 }), InvalidParams);
    CHECK_THROWS_AS(make_G({ 5, 1, 1, 1 }), InvalidParams);
    CHECK_THROWS_AS(make_L({ 5, 1, 2, 0 }), InvalidParams);
}

TEST_CASE("gadget adjacency follows the construction")
{
    auto g = make_G({ 7, 3, 4, 1 });
    auto at = [&] (Role r, unsigned k) { return g.vertex({ 1, r, k }); };
    for (unsigned k = 1 ; k <= 7 ; ++k)
        CHECK(g.graph.adjacent(at(Role::A, k), at(Role::A, k % 7 + 1)));
    CHECK(g.graph.adjacent(at(Role::A, 2), at(Role::B, 1)));
    CHECK(g.graph.adjacent(at(Role::B, 1), at(Role::B, 2)));
    CHECK(g.graph.adjacent(at(Role::B, 2), at(Role::B, 3)));
    CHECK(g.graph.adjacent(at(Role::A, 7), at(Role::C, 0)));
    CHECK(g.graph.adjacent(at(Role::A, 1), at(Role::I, 0)));
    for (unsigned k = 1 ; k <= 4 ; ++k)
        CHECK(g.graph.adjacent(at(Role::I, 0), at(Role::J, k)));
    CHECK(g.name(at(Role::A, 4)) == "a4");
    CHECK(g.name(at(Role::C, 0)) == "c");
    CHECK_THROWS_AS(g.vertex({ 1, Role::A, 8 }), InvalidParams);
}

TEST_CASE("subgadget is a subgraph under the label map")
{
    CHECK(make_G_sub(5, 1).graph.order() == 7);
    auto sub = make_G_sub(7, 3);
    CHECK(sub.graph.order() == 11);
    auto full = make_G({ 7, 3, 4, 1 });
    for (auto & e : sub.graph.edges())
        CHECK(full.graph.adjacent(full.vertex(sub.labels[e.u]), full.vertex(sub.labels[e.v])));
    CHECK(sub.graph.size() < full.graph.size());
    CHECK_THROWS_AS(make_G_sub(4, 1), InvalidParams);
}

TEST_CASE("chain orders")
{
    CHECK(make_L({ 7, 3, 4, 1 }).graph == make_G({ 7, 3, 4, 1 }).graph);
    CHECK(make_L({ 7, 3, 4, 3 }).graph.order() == 40);
    CHECK(make_L({ 5, 1, 2, 2 }).graph.order() == 20);
    for (unsigned ell = 1 ; ell <= 4 ; ++ell)
        for (auto & p0 : grid()) {
            auto p = p0;
            p.ell = ell;
            auto g = make_L(p);
            CHECK(g.graph.order() == (p.n1 + p.n2 + p.n3 + 2) + (ell - 1) * (p.n1 + 5));
            CHECK(g.graph.order() == chain_order(p));
            CHECK(g.graph.is_connected());
            CHECK(g.copies() == ell);
        }

    auto l = make_L({ 7, 3, 4, 3 });
    auto alpha = blueprint(7).alpha;
    CHECK(l.graph.adjacent(l.vertex({ 1, Role::A, alpha }), l.vertex({ 2, Role::J, 1 })));
    CHECK(l.graph.adjacent(l.vertex({ 2, Role::A, alpha }), l.vertex({ 3, Role::J, 1 })));
    CHECK(l.name(l.vertex({ 2, Role::J, 1 })) == "j1^2");
}

TEST_CASE("blueprint quantities")
{
    for (unsigned n1 = 5 ; n1 <= 40 ; ++n1) {
        auto b = blueprint(n1);
        CHECK(b.alpha == (n1 + 1) / 2);
        CHECK(b.beta == (n1 + 3 + 1) / 2);
        CHECK(b.beta < n1);
        CHECK(b.gamma <= b.delta);
        auto g = make_G({ n1, 1, 2, 1 });
        auto & d = g.graph.distances();
        auto a1 = g.vertex({ 1, Role::A, 1 });
        CHECK(d.at(a1, g.vertex({ 1, Role::A, b.alpha })) == d.at(a1, g.vertex({ 1, Role::A, b.beta })));
        CHECK(d.at(a1, g.vertex({ 1, Role::A, b.alpha })) == b.gamma);
    }
}

TEST_CASE("canonical bases")
{
    auto g734 = make_G({ 7, 3, 4, 1 });
    CHECK(names(g734, canonical_basis({ 7, 3, 4, 1 }, Kind::Vertex)) == std::set<std::string>{ "j1", "j2", "j3", "a4" });
    CHECK(names(g734, canonical_basis({ 7, 3, 4, 1 }, Kind::Edge)) == std::set<std::string>{ "j1", "j2", "j3", "a4", "a5" });
    auto g612 = make_G({ 6, 1, 2, 1 });
    CHECK(names(g612, canonical_basis({ 6, 1, 2, 1 }, Kind::Edge)) == std::set<std::string>{ "j1", "a3" });

    for (unsigned ell = 1 ; ell <= 3 ; ++ell)
        for (auto & p0 : grid()) {
            auto p = p0;
            p.ell = ell;
            auto g = make_L(p);
            bool odd = p.n1 % 2 == 1;
            auto vb = canonical_basis(p, Kind::Vertex), eb = canonical_basis(p, Kind::Edge);
            CHECK(std::is_sorted(vb.begin(), vb.end()));
            CHECK(vb.size() == p.n3 + (odd ? 0 : ell));
            CHECK(eb.size() == p.n3 + (odd ? ell : 0));
            CHECK(is_metric_generator(g.graph, vb));
            CHECK(is_edge_metric_generator(g.graph, eb));
        }
}

TEST_CASE("gluing")
{
    CHECK(glue({ make_path(2), { } }, 1, { make_path(2), { } }, 0).graph == make_path(4));

    auto g = make_G({ 5, 1, 2, 1 });
    auto alpha = blueprint(5).alpha;
    auto glued = glue(g, g.vertex({ 1, Role::A, alpha }), g, g.vertex({ 1, Role::J, 1 }));
    auto chain = make_L({ 5, 1, 2, 2 });
    CHECK(glued.graph == chain.graph);
    CHECK(glued.labels == chain.labels);
    CHECK(metric_dimension(glued.graph).dimension == 2);
    CHECK(oracle::metric_dimension_naive(make_G({ 5, 1, 2, 1 }).graph).dimension == 2);

    CHECK_THROWS_AS(glue(g, 10, g, 0), VertexOutOfRange);
}

TEST_CASE("glued dimensions add less two on the family grid")
{
    for (unsigned n1 : { 5u, 6u, 7u })
        for (unsigned n3 : { 2u, 3u }) {
            FamilyParams p{ n1, 1, n3, 1 }, q{ n1, 1, 2, 1 };
            auto g1 = make_G(p), g2 = make_G(q);
            auto glued = glue(g1, g1.vertex({ 1, Role::A, blueprint(n1).alpha }), g2, g2.vertex({ 1, Role::J, 1 }));
            auto d1 = metric_dimension(g1.graph).dimension, d2 = metric_dimension(g2.graph).dimension;
            auto e1 = edge_metric_dimension(g1.graph).dimension, e2 = edge_metric_dimension(g2.graph).dimension;
            CHECK(metric_dimension(glued.graph).dimension == d1 + d2 - 2);
            CHECK(edge_metric_dimension(glued.graph).dimension == e1 + e2 - 2);
        }
}

TEST_CASE("elementary constructions")
{
    CHECK(make_path(1).order() == 1);
    CHECK(make_path(1).size() == 0);
    CHECK(make_complete(2) == make_path(2));
    CHECK(make_complete(5).size() == 10);
    CHECK(make_star(3).degree(0) == 3);
    auto c4 = make_cycle(4), sq = cartesian_product(make_path(2), make_path(2));
    CHECK(c4.size() == sq.size());
    CHECK(metric_dimension(c4).dimension == metric_dimension(sq).dimension);
    CHECK_THROWS_AS(make_path(0), InvalidParams);
    CHECK_THROWS_AS(make_cycle(2), InvalidParams);
    CHECK_THROWS_AS(make_complete(0), InvalidParams);
}

TEST_CASE("realization")
{
    auto r = realize(2, 4, 20);
    CHECK(r.minimum_order == 20);
    CHECK(r.params.n1 == 5);
    CHECK(r.params.n2 == 1);
    CHECK(r.params.n3 == 2);
    CHECK(r.params.ell == 2);
    CHECK(r.graph.graph.order() == 20);

    auto s = realize(4, 2, 22);
    CHECK(s.minimum_order == 22);
    CHECK(s.params.n1 == 6);
    CHECK(s.params.ell == 2);
    CHECK(s.graph.graph.order() == 22);

    auto t = realize(2, 4, 23);
    CHECK(t.params.n2 == 4);
    CHECK(t.graph.graph.order() == 23);
    CHECK(metric_dimension(t.graph.graph).dimension == 2);
    CHECK(edge_metric_dimension(t.graph.graph).dimension == 4);

    CHECK_THROWS_AS(realize(3, 3, 30), EqualDimensionsUnsupported);
    CHECK_THROWS_AS(realize(1, 3, 30), InvalidTarget);
    CHECK_THROWS_AS(realize(3, 1, 30), InvalidTarget);
    try {
        realize(2, 4, 19);
        FAIL("expected OrderTooSmall");
    }
    catch (const OrderTooSmall & e) {
        CHECK(e.minimum_order() == 20);
    }
    CHECK(realization_minimum_order(4, 2) == 22);
}

TEST_CASE("realized graphs have the requested dimensions")
{
    for (unsigned a = 2 ; a <= 4 ; ++a)
        for (unsigned b = 2 ; b <= 4 ; ++b) {
            if (a == b)
                continue;
            auto n0 = realization_minimum_order(a, b);
            for (auto n : { n0, n0 + 3 }) {
                auto r = realize(a, b, n);
                CHECK(r.graph.graph.order() == n);
                CHECK(metric_dimension(r.graph.graph).dimension == a);
                CHECK(edge_metric_dimension(r.graph.graph).dimension == b);
            }
        }
}

TEST_CASE("family specs")
{
    CHECK(parse_family("G:7,3,4").graph == make_G({ 7, 3, 4, 1 }).graph);
    CHECK(parse_family("L:3,7,3,4").graph == make_L({ 7, 3, 4, 3 }).graph);
    CHECK(parse_family("cycle:8").graph == make_cycle(8));
    CHECK(parse_family("path:5").graph == make_path(5));
    CHECK(parse_family("complete:5").graph == make_complete(5));
    CHECK(parse_family("cp:cycle:8xcycle:8").graph == cartesian_product(make_cycle(8), make_cycle(8)));
    CHECK(parse_family("cycle:8").labels.empty());

    auto p = parse_family_params("L:3,7,3,4");
    REQUIRE(p);
    CHECK(p->ell == 3);
    CHECK(p->n1 == 7);
    CHECK(! parse_family_params("cycle:8"));

    for (auto & spec : family_spec_examples())
        CHECK_NOTHROW(parse_family(spec));

    for (auto bad : { "", "G", "G:7,3", "G:7,3,4,5", "G:4,1,2", "G:7,-1,4", "G:a,b,c", "cycle:2", "torus:8", "cp:cycle:8", "L:0,5,1,2" })
        CHECK_THROWS_AS(parse_family(bad), InvalidParams);
}

TEST_CASE("small conformance grid")
{
    for (auto & name : suite_names()) {
        auto r = run_suite(name, Grid::Small);
        INFO(name);
        for (auto & n : r.notes)
            INFO(n);
        CHECK(r.passed());
    }
}
