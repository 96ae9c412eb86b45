#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domchrom
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;
    using Arc = std::pair<Vertex, Vertex>;

    /**
     * Undirected simple graph. Edges are stored normalised (u < v) in the
     * order given at construction; that order is what orientation codes
     * index into.
     */
    class BaseGraph
    {
        public:
            BaseGraph() = default;

            /// Throws InvalidArgument on loops, duplicate edges or endpoints >= n.
            BaseGraph(int n, std::vector<Edge> edges);

            auto size() const -> int { return _n; }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

            auto neighbours(Vertex v) const -> const std::vector<Vertex> &;
            auto degree(Vertex v) const -> int;

            friend auto operator== (const BaseGraph &, const BaseGraph &) -> bool = default;

        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adj;
    };

    /**
     * Simple loopless oriented graph: no duplicate arcs and no digons.
     */
    class Digraph
    {
        public:
            Digraph() = default;

            auto size() const -> int { return _n; }
            auto arcs() const -> const std::vector<Arc> & { return _arcs; }
            auto arc_count() const -> int { return static_cast<int>(_arcs.size()); }

            /// Heads of arcs leaving v, ascending.
            auto out_neighbours(Vertex v) const -> const std::vector<Vertex> &;
            auto in_neighbours(Vertex v) const -> const std::vector<Vertex> &;
            auto out_degree(Vertex v) const -> int;
            auto has_arc(Vertex u, Vertex v) const -> bool;

            friend auto make_digraph(int n, std::vector<Arc> arcs) -> Digraph;

            /// Same arc set, order ignored.
            friend auto operator== (const Digraph & a, const Digraph & b) -> bool;

        private:
            int _n = 0;
            std::vector<Arc> _arcs;
            std::vector<std::vector<Vertex>> _out, _in;
    };

    /// First arc that breaks a Digraph invariant, with the rule it breaks.
    struct ArcIssue
    {
        int index;
        std::string rule;
    };

    auto find_arc_issue(int n, const std::vector<Arc> & arcs) -> std::optional<ArcIssue>;
    auto find_edge_issue(int n, const std::vector<Edge> & edges) -> std::optional<ArcIssue>;

    /// Validating constructor; throws InvalidArgument naming the violated rule.
    auto make_digraph(int n, std::vector<Arc> arcs) -> Digraph;

    auto out_neighbors(const Digraph & d, Vertex v) -> std::vector<Vertex>;
    auto out_degree_sequence(const Digraph & d) -> std::vector<int>;
    auto underlying(const Digraph & d) -> BaseGraph;
    auto reverse(const Digraph & d) -> Digraph;
    auto is_connected(const BaseGraph & g) -> bool;

    /**
     * One direction bit per base edge, in edge order. Bit 0 orients the
     * normalised edge {u < v} as u -> v, bit 1 as v -> u.
     */
    struct OrientationCode
    {
        BaseGraph base;
        std::vector<bool> bits;

        /// Bit i is taken from position (m - 1 - i) of index, so the first edge is the MSB.
        static auto from_index(const BaseGraph & base, std::uint64_t index) -> OrientationCode;

        auto index() const -> std::uint64_t;
        auto to_string() const -> std::string;

        friend auto operator== (const OrientationCode &, const OrientationCode &) -> bool = default;
    };

    auto orient(const OrientationCode & code) -> Digraph;

    /// Inverse of orient for a digraph whose underlying graph is base.
    auto orientation_of(const BaseGraph & base, const Digraph & d) -> OrientationCode;

    /**
     * Orbits of the 2^n orientation codes of cycle_base(n) under rotations
     * and reflections of the cycle. Each class is a sorted list of code
     * indices; classes are sorted by their smallest member.
     */
    auto cycle_symmetry_classes(int n) -> std::vector<std::vector<std::uint64_t>>;

    /// Edges {0,1},...,{n-2,n-1} then {0,n-1}.
    auto cycle_base(int n) -> BaseGraph;
    auto path_base(int n) -> BaseGraph;
}
