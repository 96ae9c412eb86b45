#pragma once

#include <domchrom/coloring.hh>
#include <domchrom/digraph.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace domchrom
{
    /// Largest vertex count the bitmask search accepts.
    inline constexpr int max_solver_vertices = 64;

    /// Largest vertex count chi_d_oracle accepts.
    inline constexpr int max_oracle_vertices = 10;

    struct SolveOutcome
    {
        std::optional<int> value;           ///< empty when no dominator colouring exists
        std::optional<Coloring> witness;
        std::uint64_t nodes_explored = 0;
        DominationMode mode = DominationMode::sink_exempt;

        auto feasible() const -> bool { return value.has_value(); }
    };

    /// Exact chromatic number, by iterative deepening over canonical colourings.
    auto chi(const BaseGraph & g) -> int;

    /**
     * Exact dominator chromatic number of a fixed digraph. Tries k upwards
     * from chi(underlying(d)); within each k, backtracks over
     * restricted-growth colourings in vertex order 0..n-1 with colour
     * indices tried ascending, so the witness is deterministic.
     */
    auto chi_d(const Digraph & d, DominationMode mode = DominationMode::sink_exempt) -> SolveOutcome;

    /// Unpruned enumeration of every canonical colouring, checked with verify(). Test oracle only.
    auto chi_d_oracle(const Digraph & d, DominationMode mode = DominationMode::sink_exempt) -> SolveOutcome;

    /// DOMCHROM_MAX_SWEEP_EDGES if set to a positive integer, else 24.
    auto default_max_sweep_edges() -> int;

    struct SweepOptions
    {
        int max_edges = default_max_sweep_edges();
        std::size_t code_limit = 64;
        unsigned threads = 0;               ///< 0 picks hardware concurrency
    };

    struct SweepReport
    {
        BaseGraph base;
        DominationMode mode = DominationMode::sink_exempt;
        std::map<int, std::uint64_t> distribution;
        std::uint64_t infeasible = 0;       ///< only ever nonzero in strict mode
        std::optional<int> min_value, max_value;
        std::vector<OrientationCode> argmin_codes, argmax_codes;    ///< ascending code order, capped
        bool argmin_overflow = false, argmax_overflow = false;

        auto orientation_count() const -> std::uint64_t;
    };

    /// Solves every orientation of base. Throws GuardExceeded past options.max_edges.
    auto sweep(const BaseGraph & base, DominationMode mode = DominationMode::sink_exempt, const SweepOptions & options = {}) -> SweepReport;

    struct OrientationExtreme
    {
        int value;
        OrientationCode code;
        Coloring witness;
    };

    /// Smallest-index orientation attaining the minimum, with its witness.
    auto min_over_orientations(const BaseGraph & base, DominationMode mode = DominationMode::sink_exempt, const SweepOptions & options = {}) -> OrientationExtreme;
    auto max_over_orientations(const BaseGraph & base, DominationMode mode = DominationMode::sink_exempt, const SweepOptions & options = {}) -> OrientationExtreme;
}
