/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <metricdim/graph6.hh>
#include <metricdim/scan.hh>

#include "oracle/naive.hh"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace metricdim;

namespace
{
    auto random_stream(std::size_t count, std::uint64_t seed) -> std::string
    {
        std::mt19937_64 rng(seed);
        std::string text = ">>graph6<<\n";
        for (std::size_t k = 0 ; k < count ; ++k) {
            Vertex n = 2 + k % 9;
            // mostly connected, with some disconnected and corrupt lines mixed in
            auto g = k % 17 == 3 ? oracle::random_graph(n, 0.2, rng) : oracle::random_connected(n, 0.1 + 0.05 * (k % 9), rng);
            text += k % 101 == 50 ? std::string("B") : encode_graph6(g);
            text += '\n';
        }
        return text;
    }

    auto run(const std::string & text, const Predicate & pred, const ScanOptions & options = { }) -> ScanReport
    {
        std::istringstream in(text);
        return scan(in, pred, options);
    }

    auto run_serial(const std::string & text, const Predicate & pred) -> ScanReport
    {
        std::istringstream in(text);
        return scan_serial(in, pred);
    }

    auto same_outcome(const ScanReport & a, const ScanReport & b) -> bool
    {
        return a.total == b.total && a.decoded == b.decoded && a.connected == b.connected
            && a.disconnected == b.disconnected && a.matches == b.matches && a.diagnostics.size() == b.diagnostics.size();
    }

    struct TempFile
    {
        std::filesystem::path path;
        explicit TempFile(const std::string & name) : path(std::filesystem::temp_directory_path() / name)
        {
            std::filesystem::remove(path);
        }
        ~TempFile() { std::filesystem::remove(path); }
    };
}

TEST_CASE("rationals and predicates parse")
{
    auto half = Rational::parse("5/2");
    CHECK(half.num == 5);
    CHECK(half.den == 2);
    CHECK(Rational::parse("2.5").num == 5);
    CHECK(Rational::parse("2.5").den == 2);
    CHECK(Rational::parse("4/2").num == 2);
    CHECK(Rational::parse("4/2").den == 1);
    CHECK(Rational::parse("3").num == 3);
    CHECK(to_string(Rational::parse("10/4")) == "5/2");
    CHECK_THROWS_AS(Rational::parse("x"), InvalidParams);
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidParams);

    CHECK(Predicate::parse("lt").cmp == Comparison::Lt);
    CHECK(Predicate::parse("gt").cmp == Comparison::Gt);
    CHECK(Predicate::parse("eq").cmp == Comparison::Eq);
    CHECK(Predicate::parse("diff:2").diff == 2);
    CHECK(Predicate::parse("diff:-1").diff == -1);
    CHECK(to_string(Predicate::parse("ratio:5/2")) == "ratio:5/2");
    CHECK_THROWS_AS(Predicate::parse("le"), InvalidParams);
    CHECK_THROWS_AS(Predicate::parse("diff:"), InvalidParams);

    CHECK(Predicate::parse("lt").matches(1, 0));
    CHECK(! Predicate::parse("lt").matches(2, 2));
    CHECK(Predicate::parse("gt").matches(2, 3));
    CHECK(Predicate::parse("eq").matches(2, 2));
    CHECK(Predicate::parse("diff:2").matches(4, 2));
    CHECK(Predicate::parse("ratio:5/2").matches(5, 2));
    CHECK(! Predicate::parse("ratio:5/2").matches(4, 2));
}

TEST_CASE("classify on fixtures")
{
    auto lt = Predicate::parse("lt");
    auto k2 = classify(make_complete(2), lt);
    REQUIRE(k2);
    CHECK(k2->dim == 1);
    CHECK(k2->edim == 0);
    CHECK(! classify(make_cycle(5), lt));

    auto l = make_L({ 6, 1, 2, 4 }).graph;
    auto ratio = classify(l, Predicate::parse("ratio:3"));
    REQUIRE(ratio);
    CHECK(ratio->dim == 6);
    CHECK(ratio->edim == 2);
    CHECK(! classify(l, Predicate::parse("ratio:7/2")));
    CHECK(classify(l, Predicate::parse("diff:4")));
    CHECK(! classify(l, Predicate::parse("diff:3")));
}

TEST_CASE("early exit never changes the outcome")
{
    std::mt19937_64 rng(10);
    std::vector<Graph> sample;
    for (int k = 0 ; k < 1500 ; ++k)
        sample.push_back(oracle::random_connected(2 + k % 10, 0.05 + 0.1 * (k % 8), rng));
    sample.push_back(make_complete(2));
    sample.push_back(make_L({ 6, 1, 2, 2 }).graph);

    for (auto spec : { "lt", "gt", "eq", "diff:0", "diff:1", "diff:-1", "diff:2", "ratio:1", "ratio:3/2", "ratio:2" }) {
        auto fast = Predicate::parse(spec), slow = fast;
        slow.early_exit = false;
        for (auto & g : sample) {
            auto a = classify(g, fast), b = classify(g, slow);
            REQUIRE(a == b);
            if (b) {
                CHECK(b->dim == metric_dimension(g).dimension);
                CHECK(b->edim == edge_metric_dimension(g).dimension);
            }
        }
    }
}

TEST_CASE("single K2 record matches lt")
{
    auto report = run("A_\n", Predicate::parse("lt"));
    REQUIRE(report.matches.size() == 1);
    CHECK(report.matches[0].record == "A_");
    CHECK(report.matches[0].dim == 1);
    CHECK(report.matches[0].edim == 0);
    CHECK(report.complete);
}

TEST_CASE("parallel scan matches the serial reference")
{
    auto text = random_stream(3000, 7);
    for (auto spec : { "lt", "gt", "eq", "ratio:2" }) {
        auto pred = Predicate::parse(spec);
        auto reference = run_serial(text, pred);
        CHECK(reference.total == 3000);
        CHECK(reference.decoded + reference.diagnostics.size() == reference.total);
        CHECK(reference.connected + reference.disconnected == reference.decoded);
        CHECK(! reference.diagnostics.empty());
        CHECK(reference.disconnected > 0);
        for (unsigned jobs : { 1u, 2u, 4u })
            for (std::size_t batch : { std::size_t{ 1 }, std::size_t{ 64 }, std::size_t{ 4096 } }) {
                auto r = run(text, pred, { jobs, batch });
                CHECK(same_outcome(r, reference));
            }

        // every match re-solves to the recorded dimensions
        for (auto & m : reference.matches) {
            auto g = decode_graph6(m.record);
            CHECK(m.dim == metric_dimension(g).dimension);
            CHECK(m.edim == edge_metric_dimension(g).dimension);
            CHECK(pred.matches(m.dim, m.edim));
        }
    }
}

TEST_CASE("strict scans stop at the first bad record")
{
    std::istringstream in("A_\nB\nA_\n");
    ScanOptions options;
    options.strict = true;
    auto report = scan(in, Predicate::parse("lt"), options);
    CHECK(! report.complete);
    CHECK(report.matches.size() == 1);
    CHECK(report.diagnostics.size() == 1);
}

TEST_CASE("checkpoints")
{
    TempFile file("metricdim-test-checkpoint.txt");
    Checkpoint cp{ "lt", 42, 40, 39, 1, { { 7, "A_", 1, 0 } }, { { 9, Graph6ErrorKind::PaddingBitsSet, "pad\tbits" } } };
    write_checkpoint(file.path, cp);
    auto back = read_checkpoint(file.path);
    REQUIRE(back);
    CHECK(back->predicate == "lt");
    CHECK(back->last_line == 42);
    CHECK(back->decoded == 40);
    CHECK(back->connected == 39);
    CHECK(back->disconnected == 1);
    CHECK(back->matches == cp.matches);
    REQUIRE(back->diagnostics.size() == 1);
    CHECK(back->diagnostics[0].kind == Graph6ErrorKind::PaddingBitsSet);
    CHECK(back->diagnostics[0].message == "pad bits");
    CHECK(! read_checkpoint(file.path.string() + ".missing"));
}

TEST_CASE("resume from a checkpoint reproduces the full scan")
{
    auto text = random_stream(2000, 3);
    auto pred = Predicate::parse("lt");
    auto reference = run_serial(text, pred);

    // cut the stream to simulate an interruption after 1000 records
    std::size_t cut = 0;
    for (int k = 0 ; k < 1001 ; ++k)
        cut = text.find('\n', cut) + 1;

    TempFile file("metricdim-test-resume.txt");
    ScanOptions options;
    options.batch = 100;
    options.checkpoint = file.path;
    options.checkpoint_interval = 300;

    auto first = run(text.substr(0, cut), pred, options);
    CHECK(! first.resumed);
    auto saved = read_checkpoint(file.path);
    REQUIRE(saved);
    CHECK(saved->last_line == 1001);

    auto second = run(text, pred, options);
    CHECK(second.resumed);
    CHECK(same_outcome(second, reference));

    CHECK_THROWS_AS(run(text, Predicate::parse("gt"), options), Error);
}

TEST_CASE("labelled connected enumeration")
{
    auto count = [] (unsigned n) {
        std::size_t c = 0;
        LabeledConnectedGraphs all(n);
        while (auto g = all.next()) {
            CHECK(g->order() == n);
            CHECK(g->is_connected());
            ++c;
        }
        return c;
    };

    // brute force over every edge subset with union-find
    auto brute = [] (unsigned n) {
        std::vector<Edge> pairs;
        for (Vertex v = 1 ; v < n ; ++v)
            for (Vertex u = 0 ; u < v ; ++u)
                pairs.push_back({ u, v });
        std::size_t c = 0;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << pairs.size()) ; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t k = 0 ; k < pairs.size() ; ++k)
                if (mask >> k & 1)
                    edges.push_back(pairs[k]);
            c += oracle::connected_by_union_find(n, edges);
        }
        return c;
    };

    CHECK(count(1) == 1);
    CHECK(count(2) == 1);
    CHECK(count(3) == 4);
    CHECK(count(4) == 38);
    CHECK(count(5) == 728);
    for (unsigned n = 1 ; n <= 5 ; ++n)
        CHECK(count(n) == brute(n));

    CHECK_THROWS_AS(LabeledConnectedGraphs(8), OrderTooLarge);
    CHECK_THROWS_AS(LabeledConnectedGraphs(0), InvalidParams);
    CHECK(*LabeledConnectedGraphs::from_mask(3, 0b101) == make_path(3));
    CHECK(*LabeledConnectedGraphs::from_mask(3, 0b111) == make_complete(3));
    CHECK(! LabeledConnectedGraphs::from_mask(3, 0b001));
}

TEST_CASE("small orders have no edim < dim graphs beyond K2")
{
    auto report = verify_small_orders(6, 2);
    CHECK(report.violations() == 0);
    REQUIRE(report.orders.size() == 6);
    CHECK(report.orders[1].violations == 1);     // K2
    CHECK(report.orders[5].graphs == 26704);
    CHECK(verify_small_orders(5).orders[4].histogram == report.orders[4].histogram);
    CHECK_THROWS_AS(verify_small_orders(8), OrderTooLarge);
}

TEST_CASE("ratio witnesses")
{
    auto one = ratio_witness(Rational::parse("1"));
    CHECK(one.params.ell == 1);
    CHECK(one.predicted_dim == 3);
    CHECK(one.predicted_edim == 2);
    CHECK(one.confirmed == true);

    auto two = ratio_witness(Rational::parse("2"));
    CHECK(two.params.ell == 2);
    CHECK(two.params.n1 == 6);
    CHECK(two.predicted_dim == 4);
    CHECK(two.predicted_edim == 2);
    CHECK(two.confirmed == true);

    auto three = ratio_witness(Rational::parse("3"));
    CHECK(three.params.ell == 4);
    CHECK(three.predicted_dim == 6);
    CHECK(three.confirmed == true);

    auto unconfirmed = ratio_witness(Rational::parse("5/2"), false);
    CHECK(unconfirmed.params.ell == 3);
    CHECK(! unconfirmed.confirmed);

    CHECK_THROWS_AS(ratio_witness(Rational::parse("1/2")), InvalidParams);
    CHECK(subset_count(5, 2) == 10.0);
}
