/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <metricdim/cli.hh>
#include <metricdim/conformance.hh>
#include <metricdim/families.hh>
#include <metricdim/graph6.hh>
#include <metricdim/scan.hh>
#include <metricdim/solver.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using std::optional;
using std::ostream;
using std::size_t;
using std::string;
using std::vector;

namespace metricdim
{
    auto read_edge_list(std::istream & in) -> Graph
    {
        vector<Edge> edges;
        Vertex n = 0;
        string line;
        size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#') ; hash != string::npos)
                line.erase(hash);
            std::istringstream fields(line);
            long long u, v;
            if (! (fields >> u)) {
                if (line.find_first_not_of(" \t\r") != string::npos)
                    throw InvalidParams("edge list line " + std::to_string(number) + ": expected 'u v'");
                continue;
            }
            string extra;
            if (! (fields >> v) || (fields >> extra) || u < 0 || v < 0 || u >= (1ll << 18) || v >= (1ll << 18))
                throw InvalidParams("edge list line " + std::to_string(number) + ": expected two vertex ids");
            edges.push_back({ Vertex(u), Vertex(v) });
            n = std::max(n, Vertex(std::max(u, v) + 1));
        }
        return Graph(n, edges);
    }

    namespace
    {
        class UsageError : public Error
        {
            public:
                using Error::Error;
        };

        enum class Format
        {
            Text,
            Records
        };

        struct InputOptions
        {
            string family, g6, g6_file, edges;
        };

        struct Input
        {
            string name;
            LabeledGraph graph;
            optional<FamilyParams> params;
        };

        auto add_input_options(CLI::App * cmd, InputOptions & opts) -> void
        {
            cmd->add_option("--family", opts.family, "family spec, e.g. G:7,3,4");
            cmd->add_option("--g6", opts.g6, "a graph6 record");
            cmd->add_option("--g6-file", opts.g6_file, "file of graph6 records, one per line");
            cmd->add_option("--edges", opts.edges, "edge-list file, one 'u v' pair per line");
        }

        auto count_sources(const InputOptions & opts) -> int
        {
            return int(! opts.family.empty()) + int(! opts.g6.empty()) + int(! opts.g6_file.empty()) + int(! opts.edges.empty());
        }

        auto load_inputs(const InputOptions & opts, bool strict) -> vector<Input>
        {
            if (count_sources(opts) != 1)
                throw UsageError("exactly one of --family, --g6, --g6-file, --edges is required");

            vector<Input> result;
            if (! opts.family.empty()) {
                try {
                    result.push_back({ opts.family, parse_family(opts.family), parse_family_params(opts.family) });
                }
                catch (const InvalidParams & e) {
                    throw UsageError(e.what());
                }
            }
            else if (! opts.g6.empty()) {
                try {
                    result.push_back({ opts.g6, { decode_graph6(opts.g6), { } }, std::nullopt });
                }
                catch (const Graph6Error & e) {
                    throw UsageError(string("--g6: ") + e.what());
                }
            }
            else if (! opts.g6_file.empty()) {
                std::ifstream in(opts.g6_file);
                if (! in)
                    throw Error("cannot open " + opts.g6_file);
                Graph6Reader reader(in, strict);
                while (auto item = reader.next()) {
                    if (auto d = std::get_if<Graph6Diagnostic>(&*item))
                        throw Error(opts.g6_file + ":" + std::to_string(d->line) + ": " + d->message);
                    auto & e = std::get<Graph6Entry>(*item);
                    result.push_back({ e.record, { std::move(e.graph), { } }, std::nullopt });
                }
            }
            else {
                std::ifstream in(opts.edges);
                if (! in)
                    throw Error("cannot open " + opts.edges);
                try {
                    result.push_back({ opts.edges, { read_edge_list(in), { } }, std::nullopt });
                }
                catch (const InvalidParams & e) {
                    throw UsageError(e.what());
                }
            }
            return result;
        }

        auto parse_format(const string & text) -> Format
        {
            if (text == "text")
                return Format::Text;
            if (text == "records")
                return Format::Records;
            throw UsageError("--format must be text or records");
        }

        auto join(const vector<string> & items) -> string
        {
            string result = "[";
            for (size_t i = 0 ; i < items.size() ; ++i)
                result += (i ? "," : "") + items[i];
            return result + "]";
        }

        /// j's before a's, then by copy and index, the order the explicit bases are written in.
        auto role_order(const LabeledGraph & g, LandmarkSet basis) -> LandmarkSet
        {
            auto rank = [] (Role r) { return r == Role::J ? 0 : r == Role::A ? 1 : 2; };
            std::sort(basis.begin(), basis.end(), [&] (Vertex x, Vertex y) {
                auto & lx = g.labels[x];
                auto & ly = g.labels[y];
                return std::tuple(rank(lx.role), lx.copy, lx.index) < std::tuple(rank(ly.role), ly.copy, ly.index);
            });
            return basis;
        }

        /// The basis shown for a solved input: the family's explicit basis when
        /// it certifies at the solved size, otherwise the lex-least witness.
        auto shown_basis(const Input & input, const ResolveResult & r, bool lex) -> vector<string>
        {
            if (! lex && input.params) {
                auto basis = canonical_basis(*input.params, r.kind);
                if (basis.size() == r.dimension && is_generator(input.graph.graph, r.kind, basis))
                    return input.graph.names(role_order(input.graph, basis));
            }
            return input.graph.names(r.witness);
        }

        struct Common
        {
            string format = "text";
            unsigned jobs = 1;
        };

        auto cmd_solve(const string & which, const InputOptions & inputs, const Common & common, bool lex, ostream & out) -> int
        {
            auto format = parse_format(common.format);
            SolveOptions solve{ std::max(1u, common.jobs) };
            auto list = load_inputs(inputs, true);
            bool many = list.size() > 1;
            for (auto & input : list) {
                auto & g = input.graph.graph;
                optional<ResolveResult> dim, edim;
                if (which != "edim")
                    dim = metric_dimension(g, solve);
                if (which != "dim")
                    edim = edge_metric_dimension(g, solve);

                if (format == Format::Records) {
                    out << encode_graph6(g);
                    if (dim)
                        out << '\t' << dim->dimension;
                    if (edim)
                        out << '\t' << edim->dimension;
                    out << '\n';
                    continue;
                }

                if (many)
                    out << input.name << ' ';
                if (which == "both")
                    out << "dim=" << dim->dimension << " edim=" << edim->dimension << '\n';
                else {
                    auto & r = dim ? *dim : *edim;
                    out << which << "=" << r.dimension << " basis=" << join(shown_basis(input, r, lex)) << '\n';
                }
            }
            return exit_code::ok;
        }

        auto cmd_family(const InputOptions & inputs, const Common & common, ostream & out) -> int
        {
            auto format = parse_format(common.format);
            auto list = load_inputs(inputs, true);
            for (auto & input : list) {
                auto & g = input.graph.graph;
                if (format == Format::Records) {
                    out << encode_graph6(g) << '\n';
                    continue;
                }
                out << "order=" << g.order() << " size=" << g.size() << " connected=" << (g.is_connected() ? "yes" : "no") << '\n';
                out << "graph6=" << encode_graph6(g) << '\n';
                if (input.params) {
                    auto & p = *input.params;
                    bool odd = p.n1 % 2 == 1;
                    out << "predicted dim=" << (odd ? p.n3 : p.n3 + p.ell) << " edim=" << (odd ? p.n3 + p.ell : p.n3) << '\n';
                    out << "vertex_basis=" << join(input.graph.names(role_order(input.graph, canonical_basis(p, Kind::Vertex)))) << '\n';
                    out << "edge_basis=" << join(input.graph.names(role_order(input.graph, canonical_basis(p, Kind::Edge)))) << '\n';
                }
                if (! input.graph.labels.empty()) {
                    out << "labels=";
                    for (Vertex v = 0 ; v < g.order() ; ++v)
                        out << (v ? " " : "") << v << ":" << input.graph.name(v);
                    out << '\n';
                }
            }
            return exit_code::ok;
        }

        auto family_name(const FamilyParams & p) -> string
        {
            return "L:" + std::to_string(p.ell) + "," + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + std::to_string(p.n3);
        }

        auto cmd_realize(unsigned dim, unsigned edim, size_t order, bool confirm, const Common & common, ostream & out) -> int
        {
            auto format = parse_format(common.format);
            auto real = realize(dim, edim, order);
            auto & g = real.graph.graph;
            if (format == Format::Records) {
                out << encode_graph6(g) << '\t' << dim << '\t' << edim << '\n';
                return exit_code::ok;
            }
            out << "family=" << family_name(real.params) << " order=" << g.order() << " n0=" << real.minimum_order
                << " predicted dim=" << dim << " edim=" << edim << '\n';
            if (confirm) {
                SolveOptions solve{ std::max(1u, common.jobs) };
                bool ok_dim = certify_dimension(g, Kind::Vertex, canonical_basis(real.params, Kind::Vertex), dim, solve);
                bool ok_edim = certify_dimension(g, Kind::Edge, canonical_basis(real.params, Kind::Edge), edim, solve);
                out << "confirmed dim=" << (ok_dim ? "yes" : "no") << " edim=" << (ok_edim ? "yes" : "no") << '\n';
                if (! ok_dim || ! ok_edim) {
                    out << encode_graph6(g) << '\n';
                    return exit_code::failure;
                }
            }
            out << encode_graph6(g) << '\n';
            return exit_code::ok;
        }

        auto cmd_ratio(const string & q_text, bool confirm, const Common & common, ostream & out) -> int
        {
            auto format = parse_format(common.format);
            Rational q;
            try {
                q = Rational::parse(q_text);
            }
            catch (const InvalidParams & e) {
                throw UsageError(string("--q: ") + e.what());
            }
            auto w = ratio_witness(q, confirm);
            auto & g = w.graph.graph;
            if (format == Format::Records) {
                out << encode_graph6(g) << '\t' << w.predicted_dim << '\t' << w.predicted_edim << '\n';
                return exit_code::ok;
            }
            out << "family=" << family_name(w.params) << " order=" << g.order()
                << " predicted dim=" << w.predicted_dim << " edim=" << w.predicted_edim
                << " confirmed=" << (! w.confirmed ? "skipped" : *w.confirmed ? "yes" : "no") << '\n';
            out << encode_graph6(g) << '\n';
            return (w.confirmed && ! *w.confirmed) ? exit_code::failure : exit_code::ok;
        }

        struct ScanArgs
        {
            string pred = "lt";
            string checkpoint;
            size_t checkpoint_interval = 10'000'000;
            size_t batch = 4096;
            bool strict = false;
            bool no_early_exit = false;
            bool serial = false;
        };

        auto cmd_scan(const InputOptions & inputs, const ScanArgs & args, const Common & common, std::istream & in, ostream & out, ostream & err) -> int
        {
            auto format = parse_format(common.format);
            if (! inputs.family.empty() || ! inputs.edges.empty())
                throw UsageError("scan reads graph6 from --g6, --g6-file or standard input");
            if (count_sources(inputs) > 1)
                throw UsageError("at most one of --g6, --g6-file");

            Predicate pred;
            try {
                pred = Predicate::parse(args.pred);
            }
            catch (const InvalidParams & e) {
                throw UsageError(e.what());
            }
            pred.early_exit = ! args.no_early_exit;

            std::ifstream file;
            std::istringstream single;
            std::istream * source = &in;
            if (! inputs.g6_file.empty()) {
                file.open(inputs.g6_file);
                if (! file)
                    throw Error("cannot open " + inputs.g6_file);
                source = &file;
            }
            else if (! inputs.g6.empty()) {
                single.str(inputs.g6 + "\n");
                source = &single;
            }

            ScanReport report;
            if (args.serial)
                report = scan_serial(*source, pred, args.strict);
            else {
                ScanOptions options;
                options.jobs = std::max(1u, common.jobs);
                options.batch = args.batch;
                options.strict = args.strict;
                options.checkpoint_interval = args.checkpoint_interval;
                if (! args.checkpoint.empty())
                    options.checkpoint = args.checkpoint;
                report = scan(*source, pred, options);
            }

            for (auto & d : report.diagnostics)
                err << "line " << d.line << ": " << d.message << '\n';

            if (format == Format::Records)
                for (auto & m : report.matches)
                    out << m.record << '\t' << m.dim << '\t' << m.edim << '\n';
            else {
                out << "predicate=" << to_string(pred) << " records=" << report.total << " decoded=" << report.decoded
                    << " connected=" << report.connected << " disconnected=" << report.disconnected
                    << " errors=" << report.diagnostics.size() << " matches=" << report.matches.size() << '\n';
                for (auto & m : report.matches)
                    out << "match line=" << m.line << " graph6=" << m.record << " dim=" << m.dim << " edim=" << m.edim << '\n';
                out << "complete=" << (report.complete ? "yes" : "no") << (report.resumed ? " resumed=yes" : "")
                    << " seconds=" << std::fixed << std::setprecision(3) << report.seconds << '\n';
            }
            if (! report.complete) {
                err << "scan incomplete: " << report.failure << '\n';
                return exit_code::failure;
            }
            return exit_code::ok;
        }

        struct VerifyArgs
        {
            bool lemmas = false;
            vector<string> suites;
            string grid = "small";
            unsigned small_orders = 0;
        };

        auto cmd_verify(const VerifyArgs & args, const Common & common, ostream & out) -> int
        {
            Grid grid;
            if (args.grid == "small")
                grid = Grid::Small;
            else if (args.grid == "full")
                grid = Grid::Full;
            else
                throw UsageError("--grid must be small or full");

            auto suites = args.suites;
            for (auto & s : suites)
                if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    throw UsageError("unknown suite '" + s + "'");
            if (args.lemmas)
                suites = suite_names();
            if (suites.empty() && args.small_orders == 0)
                throw UsageError("verify needs --lemmas, --suite or --small-orders");
            if (args.small_orders > max_enumeration_order)
                throw UsageError("--small-orders supports at most " + std::to_string(max_enumeration_order));

            bool all_ok = true;
            for (auto & name : suites) {
                auto r = run_suite(name, grid);
                all_ok = all_ok && r.passed();
                out << std::left << std::setw(14) << name << (r.passed() ? "PASS" : "FAIL")
                    << "  checks=" << r.checks << " failures=" << r.failures << " skipped=" << r.skipped
                    << " seconds=" << std::fixed << std::setprecision(2) << r.seconds << '\n';
                for (auto & note : r.notes)
                    out << "    " << note << '\n';
            }

            if (args.small_orders > 0) {
                auto report = verify_small_orders(args.small_orders, std::max(1u, common.jobs));
                bool ok = report.violations() == 0;
                all_ok = all_ok && ok;
                out << std::left << std::setw(14) << "small-orders" << (ok ? "PASS" : "FAIL")
                    << "  max_n=" << args.small_orders << " violations=" << report.violations() << '\n';
                for (auto & o : report.orders) {
                    out << "    n=" << o.order << " graphs=" << o.graphs << " edim<dim=" << o.violations << " dim-edim:";
                    for (auto & [d, c] : o.histogram)
                        out << ' ' << d << "=" << c;
                    out << '\n';
                }
            }
            return all_ok ? exit_code::ok : exit_code::failure;
        }

        auto help_footer() -> string
        {
            string result = "Family specs:";
            for (auto & s : family_spec_examples())
                result += " " + s;
            return result;
        }
    }

    auto run_cli(const vector<string> & args, std::istream & in, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Exact metric and edge metric dimension of graphs", "metricdim" };
        app.footer(help_footer());
        app.require_subcommand(1);

        Common common;
        InputOptions inputs;
        bool lex = false;
        auto add_common = [&] (CLI::App * cmd) {
            cmd->add_option("--format", common.format, "text or records");
            cmd->add_option("--jobs", common.jobs, "worker threads");
        };

        vector<std::pair<string, CLI::App *>> solvers;
        for (string which : { "dim", "edim", "both" }) {
            auto desc = which == "dim" ? "metric dimension" : which == "edim" ? "edge metric dimension" : "both dimensions";
            auto cmd = app.add_subcommand(which, desc);
            add_input_options(cmd, inputs);
            add_common(cmd);
            cmd->add_flag("--lex-witness", lex, "print the lexicographically least basis instead of the family's explicit one");
            solvers.push_back({ which, cmd });
        }

        auto family = app.add_subcommand("family", "construct a family graph and print it");
        add_input_options(family, inputs);
        add_common(family);

        unsigned r_dim = 0, r_edim = 0;
        size_t r_order = 0;
        bool r_confirm = false;
        auto realize_cmd = app.add_subcommand("realize", "graph of given order, dimension and edge dimension");
        realize_cmd->add_option("--dim", r_dim, "target metric dimension")->required();
        realize_cmd->add_option("--edim", r_edim, "target edge metric dimension")->required();
        realize_cmd->add_option("--order", r_order, "target order")->required();
        realize_cmd->add_flag("--confirm", r_confirm, "certify both dimensions with the solver");
        add_common(realize_cmd);

        ScanArgs scan_args;
        auto scan_cmd = app.add_subcommand("scan", "filter a graph6 stream by a dim/edim predicate");
        add_input_options(scan_cmd, inputs);
        add_common(scan_cmd);
        scan_cmd->add_option("--pred", scan_args.pred, "lt | gt | eq | diff:k | ratio:q (edim op dim)");
        scan_cmd->add_option("--checkpoint", scan_args.checkpoint, "checkpoint file, resumed when present");
        scan_cmd->add_option("--checkpoint-interval", scan_args.checkpoint_interval, "records between checkpoints");
        scan_cmd->add_option("--batch", scan_args.batch, "graphs per parallel batch");
        scan_cmd->add_flag("--strict", scan_args.strict, "abort on the first malformed record");
        scan_cmd->add_flag("--no-early-exit", scan_args.no_early_exit, "solve both dimensions exactly for every graph");
        scan_cmd->add_flag("--serial", scan_args.serial, "use the single-threaded reference scan");

        VerifyArgs verify_args;
        auto verify_cmd = app.add_subcommand("verify", "run conformance suites");
        verify_cmd->add_flag("--lemmas", verify_args.lemmas, "run every suite");
        verify_cmd->add_option("--suite", verify_args.suites, "run a named suite (repeatable)");
        verify_cmd->add_option("--grid", verify_args.grid, "small or full");
        verify_cmd->add_option("--small-orders", verify_args.small_orders, "check all labelled connected graphs up to this order (<= 7)");
        add_common(verify_cmd);

        string q_text;
        bool no_confirm = false;
        auto ratio_cmd = app.add_subcommand("ratio", "graph with dim/edim at least q");
        ratio_cmd->add_option("--q", q_text, "target ratio, e.g. 3 or 5/2")->required();
        ratio_cmd->add_flag("--no-confirm", no_confirm, "skip solver confirmation");
        add_common(ratio_cmd);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            app.exit(e, out, err);
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            err << app.help();
            return exit_code::usage;
        }

        try {
            for (auto & [which, cmd] : solvers)
                if (cmd->parsed())
                    return cmd_solve(which, inputs, common, lex, out);
            if (family->parsed())
                return cmd_family(inputs, common, out);
            if (realize_cmd->parsed())
                return cmd_realize(r_dim, r_edim, r_order, r_confirm, common, out);
            if (scan_cmd->parsed())
                return cmd_scan(inputs, scan_args, common, in, out, err);
            if (verify_cmd->parsed())
                return cmd_verify(verify_args, common, out);
            if (ratio_cmd->parsed())
                return cmd_ratio(q_text, ! no_confirm, common, out);
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::failure;
        }
        return exit_code::usage;
    }
}
