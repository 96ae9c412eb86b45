#pragma once

#include <domchrom/coloring.hh>
#include <domchrom/digraph.hh>
#include <domchrom/solver.hh>

#include <optional>
#include <vector>

namespace domchrom
{
    /// chi_d(D) - chi(G_D) for one fixed digraph.
    struct SigmaReport
    {
        int sigma_definitional;
        int chi_d_value;
        int chi_value;
    };

    /**
     * Orientation-level quantities for a base graph. The definitional value
     * subtracts chi(base) from the maximum over orientations; the spread
     * subtracts the minimum over orientations. The printed path and cycle
     * tables agree with the spread, not with the definitional value.
     */
    struct SigmaStarReport
    {
        int sigma_star_definitional;
        int orientation_spread;
        int min_chi_d;
        int max_chi_d;
        int chi_value;
        std::optional<int> printed_table_value;     ///< only for path and cycle bases with n >= 4
    };

    /// Maps each vertex of H to a vertex of D.
    struct Embedding
    {
        std::vector<Vertex> vertex_map;

        static auto identity(int n) -> Embedding;
    };

    /// Throws Infeasible when d has no dominator colouring in mode.
    auto sigma(const Digraph & d, DominationMode mode = DominationMode::sink_exempt) -> SigmaReport;

    auto sigma_star(const BaseGraph & base, DominationMode mode = DominationMode::sink_exempt, const SweepOptions & options = {}) -> SigmaStarReport;

    /// Table values 3k-2, 3k-1, 3k-1, 3k for n = 4k, 4k+1, 4k+2, 4k+3; n >= 4.
    auto printed_sigma_star_path(int n) -> int;

    /// Table values 3k-2, 3k-2, 3k-1, 3k for n = 4k, 4k+1, 4k+2, 4k+3; n >= 4.
    auto printed_sigma_star_cycle(int n) -> int;

    /// Base is connected with n - 1 edges and maximum degree <= 2.
    auto is_path_graph(const BaseGraph & g) -> bool;

    /// Base is connected, n >= 3, and every vertex has degree 2.
    auto is_cycle_graph(const BaseGraph & g) -> bool;

    /// True iff e is injective, lands inside d, and sends every arc of h to an arc of d.
    auto is_subdigraph(const Digraph & d, const Digraph & h, const Embedding & e) -> bool;

    /// chi_d(h) - chi_d(d); throws InvalidArgument for a bad embedding, Infeasible when either side has no colouring.
    auto discrepancy(const Digraph & d, const Digraph & h, const Embedding & e, DominationMode mode = DominationMode::sink_exempt) -> int;
}
