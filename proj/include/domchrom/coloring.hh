#pragma once

#include <domchrom/digraph.hh>

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace domchrom
{
    /**
     * A surjective vertex colouring in restricted-growth form: the first
     * vertex of class j comes before the first vertex of class j + 1.
     */
    class Coloring
    {
        public:
            Coloring() = default;

            /// Throws InvalidArgument unless assignment is already canonical.
            explicit Coloring(std::vector<int> assignment);

            auto size() const -> int { return static_cast<int>(_assignment.size()); }
            auto classes() const -> int { return _k; }
            auto assignment() const -> const std::vector<int> & { return _assignment; }
            auto operator[] (Vertex v) const -> int { return _assignment.at(v); }

            /// Members of class c, ascending.
            auto members(int c) const -> std::vector<Vertex>;

            friend auto operator== (const Coloring &, const Coloring &) -> bool = default;

        private:
            std::vector<int> _assignment;
            int _k = 0;
    };

    /// Relabels an arbitrary colour list into canonical form, keeping the partition.
    auto canonicalize(const std::vector<int> & raw) -> Coloring;

    enum class DominationMode
    {
        sink_exempt,    ///< vertices with out-degree >= 1 must dominate a class
        strict          ///< every vertex must dominate a class
    };

    auto to_string(DominationMode mode) -> std::string;
    auto parse_mode(std::string_view text) -> DominationMode;

    struct ProperViolation
    {
        Arc arc;
        friend auto operator== (const ProperViolation &, const ProperViolation &) -> bool = default;
    };

    struct DominationViolation
    {
        Vertex vertex;
        friend auto operator== (const DominationViolation &, const DominationViolation &) -> bool = default;
    };

    using Violation = std::variant<ProperViolation, DominationViolation>;

    struct Verdict
    {
        bool ok = true;
        std::vector<Violation> violations;
    };

    auto is_proper(const Digraph & d, const Coloring & c) -> bool;

    /// Classes j with every member in the open out-neighbourhood of v.
    auto dominated_classes(const Digraph & d, Vertex v, const Coloring & c) -> std::set<int>;

    /// Lists every monochromatic arc (in arc order) then every required vertex that dominates nothing.
    auto verify(const Digraph & d, const Coloring & c, DominationMode mode = DominationMode::sink_exempt) -> Verdict;
}
