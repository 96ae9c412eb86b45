#include <domchrom/digraph.hh>
#include <domchrom/errors.hh>

#include <algorithm>
#include <set>

using namespace domchrom;

namespace
{
    auto sorted_adjacency(int n, const std::vector<std::pair<Vertex, Vertex>> & pairs, bool forward, bool backward)
        -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result(n);
        for (auto & [u, v] : pairs) {
            if (forward)
                result[u].push_back(v);
            if (backward)
                result[v].push_back(u);
        }
        for (auto & r : result)
            std::sort(r.begin(), r.end());
        return result;
    }

    auto check_vertex(int n, Vertex v) -> void
    {
        if (v < 0 || v >= n)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
    }
}

auto domchrom::find_edge_issue(int n, const std::vector<Edge> & edges) -> std::optional<ArcIssue>
{
    if (n < 0)
        return ArcIssue{ -1, "negative vertex count" };

    std::set<Edge> seen;
    for (int i = 0 ; i < static_cast<int>(edges.size()) ; ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            return ArcIssue{ i, "endpoint out of range" };
        if (u == v)
            return ArcIssue{ i, "self-loop" };
        if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
            return ArcIssue{ i, "duplicate edge" };
    }
    return std::nullopt;
}

auto domchrom::find_arc_issue(int n, const std::vector<Arc> & arcs) -> std::optional<ArcIssue>
{
    if (n < 0)
        return ArcIssue{ -1, "negative vertex count" };

    std::set<Arc> seen;
    for (int i = 0 ; i < static_cast<int>(arcs.size()) ; ++i) {
        auto [u, v] = arcs[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            return ArcIssue{ i, "endpoint out of range" };
        if (u == v)
            return ArcIssue{ i, "self-loop" };
        if (seen.contains({ u, v }))
            return ArcIssue{ i, "duplicate arc" };
        if (seen.contains({ v, u }))
            return ArcIssue{ i, "digon" };
        seen.emplace(u, v);
    }
    return std::nullopt;
}

BaseGraph::BaseGraph(int n, std::vector<Edge> edges) :
    _n(n)
{
    if (auto issue = find_edge_issue(n, edges))
        throw InvalidArgument("invalid base graph: " + issue->rule);

    for (auto & [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    _edges = std::move(edges);
    _adj = sorted_adjacency(_n, _edges, true, true);
}

auto BaseGraph::neighbours(Vertex v) const -> const std::vector<Vertex> &
{
    check_vertex(_n, v);
    return _adj[v];
}

auto BaseGraph::degree(Vertex v) const -> int
{
    return static_cast<int>(neighbours(v).size());
}

auto domchrom::make_digraph(int n, std::vector<Arc> arcs) -> Digraph
{
    if (auto issue = find_arc_issue(n, arcs))
        throw InvalidArgument("invalid digraph: " + issue->rule);

    Digraph result;
    result._n = n;
    result._out = sorted_adjacency(n, arcs, true, false);
    result._in = sorted_adjacency(n, arcs, false, true);
    result._arcs = std::move(arcs);
    return result;
}

auto Digraph::out_neighbours(Vertex v) const -> const std::vector<Vertex> &
{
    check_vertex(_n, v);
    return _out[v];
}

auto Digraph::in_neighbours(Vertex v) const -> const std::vector<Vertex> &
{
    check_vertex(_n, v);
    return _in[v];
}

auto Digraph::out_degree(Vertex v) const -> int
{
    return static_cast<int>(out_neighbours(v).size());
}

auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
{
    auto & o = out_neighbours(u);
    return std::binary_search(o.begin(), o.end(), v);
}

namespace domchrom
{
    auto operator== (const Digraph & a, const Digraph & b) -> bool
    {
        return a._n == b._n && a._out == b._out;
    }
}

auto domchrom::out_neighbors(const Digraph & d, Vertex v) -> std::vector<Vertex>
{
    return d.out_neighbours(v);
}

auto domchrom::out_degree_sequence(const Digraph & d) -> std::vector<int>
{
    std::vector<int> result(d.size());
    for (Vertex v = 0 ; v < d.size() ; ++v)
        result[v] = d.out_degree(v);
    return result;
}

auto domchrom::underlying(const Digraph & d) -> BaseGraph
{
    return BaseGraph{ d.size(), std::vector<Edge>(d.arcs().begin(), d.arcs().end()) };
}

auto domchrom::reverse(const Digraph & d) -> Digraph
{
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (auto & [u, v] : d.arcs())
        arcs.emplace_back(v, u);
    return make_digraph(d.size(), std::move(arcs));
}

auto domchrom::is_connected(const BaseGraph & g) -> bool
{
    if (g.size() <= 1)
        return true;

    std::vector<bool> seen(g.size(), false);
    std::vector<Vertex> stack{ 0 };
    seen[0] = true;
    int reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbours(v))
            if (! seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.size();
}

auto OrientationCode::from_index(const BaseGraph & base, std::uint64_t index) -> OrientationCode
{
    int m = base.edge_count();
    if (m > 64)
        throw GuardExceeded("orientation codes are limited to 64 edges");
    if (m < 64 && (index >> m) != 0)
        throw InvalidArgument("orientation index has more bits than the base has edges");

    OrientationCode result{ base, std::vector<bool>(m) };
    for (int i = 0 ; i < m ; ++i)
        result.bits[i] = (index >> (m - 1 - i)) & 1;
    return result;
}

auto OrientationCode::index() const -> std::uint64_t
{
    if (bits.size() > 64)
        throw GuardExceeded("orientation codes are limited to 64 edges");
    std::uint64_t result = 0;
    for (bool b : bits)
        result = (result << 1) | (b ? 1 : 0);
    return result;
}

auto OrientationCode::to_string() const -> std::string
{
    std::string result;
    for (bool b : bits)
        result.push_back(b ? '1' : '0');
    return result;
}

auto domchrom::orient(const OrientationCode & code) -> Digraph
{
    if (static_cast<int>(code.bits.size()) != code.base.edge_count())
        throw InvalidArgument("orientation code length does not match edge count");

    std::vector<Arc> arcs;
    arcs.reserve(code.bits.size());
    for (std::size_t i = 0 ; i < code.bits.size() ; ++i) {
        auto [u, v] = code.base.edges()[i];
        arcs.push_back(code.bits[i] ? Arc{ v, u } : Arc{ u, v });
    }
    return make_digraph(code.base.size(), std::move(arcs));
}

auto domchrom::orientation_of(const BaseGraph & base, const Digraph & d) -> OrientationCode
{
    if (d.size() != base.size() || d.arc_count() != base.edge_count())
        throw InvalidArgument("digraph is not an orientation of the base graph");

    OrientationCode result{ base, std::vector<bool>(base.edge_count()) };
    for (int i = 0 ; i < base.edge_count() ; ++i) {
        auto [u, v] = base.edges()[i];
        if (d.has_arc(u, v))
            result.bits[i] = false;
        else if (d.has_arc(v, u))
            result.bits[i] = true;
        else
            throw InvalidArgument("digraph is not an orientation of the base graph");
    }
    return result;
}

auto domchrom::path_base(int n) -> BaseGraph
{
    if (n < 1)
        throw InvalidArgument("path needs at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    return BaseGraph{ n, std::move(edges) };
}

auto domchrom::cycle_base(int n) -> BaseGraph
{
    if (n < 3)
        throw InvalidArgument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return BaseGraph{ n, std::move(edges) };
}

auto domchrom::cycle_symmetry_classes(int n) -> std::vector<std::vector<std::uint64_t>>
{
    if (n < 3)
        throw InvalidArgument("cycle needs at least three vertices");
    if (n > 24)
        throw GuardExceeded("cycle symmetry classes limited to n <= 24");

    // Work in "forward" flags: flag i set means edge i points i -> i+1 (mod n).
    // Edge n-1 is stored as {0, n-1}, so its code bit is the complement.
    const std::uint64_t total = std::uint64_t{ 1 } << n;
    auto code_to_flags = [n] (std::uint64_t code) {
        std::vector<bool> f(n);
        for (int i = 0 ; i < n ; ++i)
            f[i] = (code >> (n - 1 - i)) & 1;
        f[n - 1] = ! f[n - 1];
        return f;
    };
    auto flags_to_code = [n] (const std::vector<bool> & f) {
        std::uint64_t code = 0;
        for (int i = 0 ; i < n ; ++i) {
            bool bit = (i == n - 1) ? ! f[i] : f[i];
            code = (code << 1) | (bit ? 1 : 0);
        }
        return code;
    };

    std::vector<std::int64_t> class_of(total, -1);
    std::vector<std::vector<std::uint64_t>> result;
    for (std::uint64_t code = 0 ; code < total ; ++code) {
        if (class_of[code] != -1)
            continue;

        auto id = static_cast<std::int64_t>(result.size());
        auto f = code_to_flags(code);
        std::set<std::uint64_t> orbit;
        for (int r = 0 ; r < n ; ++r) {
            std::vector<bool> rotated(n), reflected(n);
            for (int i = 0 ; i < n ; ++i)
                rotated[(i + r) % n] = f[i];
            // vertex i -> -i sends edge i to edge n-1-i and flips its direction
            for (int i = 0 ; i < n ; ++i)
                reflected[n - 1 - i] = ! rotated[i];
            orbit.insert(flags_to_code(rotated));
            orbit.insert(flags_to_code(reflected));
        }
        for (auto c : orbit)
            class_of[c] = id;
        result.emplace_back(orbit.begin(), orbit.end());
    }
    return result;
}
