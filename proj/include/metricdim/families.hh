/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_FAMILIES_HH
#define METRICDIM_GUARD_FAMILIES_HH 1

#include <metricdim/graph.hh>
#include <metricdim/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace metricdim
{
    /// Vertex roles of the cycle/path/pendant gadget: cycle a_k, path b_k,
    /// pendant c on a_{n1}, hub i on a_1, and pendants j_k on i.
    enum class Role
    {
        A,
        B,
        C,
        I,
        J
    };

    struct RoleLabel
    {
        unsigned copy = 1;
        Role role = Role::A;
        unsigned index = 0;   // 1-based for a, b, j; 0 for c and i

        auto operator<=> (const RoleLabel &) const = default;
    };

    /// "a4", "j1", "c"; with_copy appends "^k".
    auto to_string(const RoleLabel &, bool with_copy) -> std::string;

    struct FamilyParams
    {
        unsigned n1 = 5, n2 = 1, n3 = 2, ell = 1;

        /// Throws InvalidParams unless n1 >= 5, n2 >= 1, n3 >= 2, ell >= 1.
        auto validate() const -> void;
    };

    /// Quantities used by the explicit bases: alpha = floor((n1+1)/2),
    /// beta = ceil((n1+3)/2), gamma = d(a_1, a_alpha) = floor((n1-1)/2), delta = floor(n1/2).
    struct BasisBlueprint
    {
        unsigned alpha, beta, gamma, delta;
    };

    auto blueprint(unsigned n1) -> BasisBlueprint;

    /**
     * A graph together with a role label per vertex. Label-free graphs
     * (cycles, products, decoded streams) have an empty label table.
     */
    struct LabeledGraph
    {
        Graph graph;
        std::vector<RoleLabel> labels;

        auto copies() const -> unsigned;
        auto vertex(const RoleLabel &) const -> Vertex;
        auto name(Vertex) const -> std::string;
        auto names(std::span<const Vertex>) const -> std::vector<std::string>;
    };

    auto gadget_order(unsigned n1, unsigned n2, unsigned n3) -> std::size_t;
    auto chain_order(const FamilyParams &) -> std::size_t;

    /// G_{n1,n2,n3}. Ids within a copy: a_1..a_{n1}, b_1..b_{n2}, c, i, j_1..j_{n3}.
    auto make_G(const FamilyParams &) -> LabeledGraph;

    /// G_{n1,n2}: the gadget without i and the j pendants.
    auto make_G_sub(unsigned n1, unsigned n2) -> LabeledGraph;

    /// L^ell_{n1,n2,n3}: copy 1 is G_{n1,n2,n3}, copies 2..ell are G_{n1,1,2},
    /// and a_alpha of copy k is joined to j_1 of copy k+1.
    auto make_L(const FamilyParams &) -> LabeledGraph;

    /// The explicit generator of make_L(p) (make_G(p) when ell = 1) for the given kind.
    auto canonical_basis(const FamilyParams &, Kind) -> LandmarkSet;

    /// Disjoint union plus the edge v1-v2; copy indices of g2 are shifted past g1's.
    auto glue(const LabeledGraph & g1, Vertex v1, const LabeledGraph & g2, Vertex v2) -> LabeledGraph;

    auto make_path(unsigned n) -> Graph;
    auto make_cycle(unsigned n) -> Graph;
    auto make_complete(unsigned n) -> Graph;
    auto make_star(unsigned leaves) -> Graph;

    struct Realization
    {
        LabeledGraph graph;
        FamilyParams params;
        std::size_t minimum_order;
        unsigned dim, edim;
    };

    /// The smallest order the chain construction reaches for the targets. Throws like realize().
    auto realization_minimum_order(unsigned dim, unsigned edim) -> std::size_t;

    /**
     * A graph of exactly the requested order with metric dimension dim and
     * edge metric dimension edim: L^{edim-dim}_{5,n2,dim} when dim < edim,
     * L^{dim-edim}_{6,n2,edim} otherwise, with n2 stretched to fill the order.
     */
    auto realize(unsigned dim, unsigned edim, std::size_t order) -> Realization;

    /**
     * Family spec strings: "G:n1,n2,n3", "L:ell,n1,n2,n3", "cycle:n",
     * "path:n", "complete:n", "cp:<spec>x<spec>".
     */
    auto parse_family(const std::string & spec) -> LabeledGraph;

    /// Parameters when spec names a G or L family, for canonical bases and predictions.
    auto parse_family_params(const std::string & spec) -> std::optional<FamilyParams>;

    auto family_spec_examples() -> const std::vector<std::string> &;
}

#endif
