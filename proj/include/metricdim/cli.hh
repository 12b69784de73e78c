/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_CLI_HH
#define METRICDIM_GUARD_CLI_HH 1

#include <metricdim/graph.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace metricdim
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int failure = 1;
        inline constexpr int usage = 2;
    }

    /// Parses "u v" lines (0-based, '#' comments). The order is one more than the largest id.
    auto read_edge_list(std::istream &) -> Graph;

    /// args excludes the program name. Results go to out, diagnostics to err.
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
