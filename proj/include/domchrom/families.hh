#pragma once

#include <domchrom/coloring.hh>
#include <domchrom/digraph.hh>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace domchrom
{
    enum class FamilyKind
    {
        path,
        cycle,
        star,
        complete,
        complete_bipartite,
        tilde_cycle,
        fig3,
        fig4
    };

    auto to_string(FamilyKind kind) -> std::string;
    auto parse_family_kind(std::string_view text) -> FamilyKind;

    /**
     * Family and its integer parameters:
     *   path n (n >= 1), cycle n (n >= 3), star leaves [in_arcs] (leaves >= 1),
     *   complete n (n >= 1), complete-bipartite m n (m, n >= 1),
     *   tilde-cycle n (n >= 3), fig3, fig4 (no parameters).
     */
    struct FamilySpec
    {
        FamilyKind kind;
        std::vector<int> params;
    };

    /// Throws InvalidArgument when params are out of range for the kind.
    auto validate(const FamilySpec & spec) -> void;

    /// Star: hub 0, leaves 1..k. K_{m,n}: X = 0..m-1, Y = m..m+n-1. Tilde cycle: cycle edges, then hub n to each.
    auto base_graph(const FamilySpec & spec) -> BaseGraph;

    /// A digraph with a colouring that verifies in sink-exempt mode using exactly claimed_value classes.
    class ConstructiveWitness
    {
        public:
            /// Throws InvalidArgument if the colouring does not verify or uses a different number of classes.
            ConstructiveWitness(Digraph digraph, Coloring coloring, int claimed_value);

            auto digraph() const -> const Digraph & { return _digraph; }
            auto coloring() const -> const Coloring & { return _coloring; }
            auto claimed_value() const -> int { return _claimed_value; }

        private:
            Digraph _digraph;
            Coloring _coloring;
            int _claimed_value;
    };

    auto directed_path(int n) -> Digraph;
    auto directed_cycle(int n) -> Digraph;

    /// Minimum over orientations of the path on n vertices.
    auto chi_d_path_formula(int n) -> int;

    /// Minimum over orientations of the cycle on n vertices; k + 2 with k = ceil(n / 4) outside n in {3, 4, 5, 6}.
    auto chi_d_cycle_formula(int n) -> int;

    /// An orientation of the path 0..n-1 with a colouring attaining chi_d_path_formula(n).
    auto path_optimal(int n) -> ConstructiveWitness;

    /// An orientation of cycle_base(n) with a colouring attaining chi_d_cycle_formula(n).
    auto cycle_optimal(int n) -> ConstructiveWitness;

    /// Star with hub 0: leaves 1..in_arcs point at the hub, the remaining leaves are pointed at.
    auto star_oriented(int leaves, int in_arcs) -> Digraph;

    /// Every arc from 0..m-1 to m..m+n-1.
    auto one_way_complete_bipartite(int m, int n) -> Digraph;

    /// chooser(u, v) with u < v returns true for u -> v.
    using ArcChooser = std::function<bool (Vertex, Vertex)>;

    auto tournament(int n, const ArcChooser & chooser) -> Digraph;
    auto transitive_tournament(int n) -> Digraph;

    /// Bit j (LSB first) of index orients the j-th pair (u < v, lexicographic) as v -> u when set.
    auto tournament_from_index(int n, std::uint64_t index) -> Digraph;
    auto random_tournament(int n, std::uint64_t seed) -> Digraph;

    /// Directed n-cycle on 0..n-1 plus hub n with an arc from every cycle vertex.
    auto tilde_cycle(int n) -> Digraph;

    /// Path 0 -> 1 -> ... -> 5 plus 4 -> 0.
    auto fig3_digraph() -> Digraph;

    /// Cycle 0 -> 1 -> ... -> 5 -> 0 plus 5 -> 2 and 1 -> 3.
    auto fig4_digraph() -> Digraph;

    /// The family's representative digraph: the optimal orientation for paths and
    /// cycles, the given orientation for the rest (complete takes an optional seed).
    auto family_digraph(const FamilySpec & spec) -> Digraph;
}
