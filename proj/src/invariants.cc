#include <domchrom/errors.hh>
#include <domchrom/invariants.hh>

#include <set>

using namespace domchrom;

namespace
{
    auto solved_value(const Digraph & d, DominationMode mode) -> int
    {
        auto outcome = chi_d(d, mode);
        if (! outcome.value)
            throw Infeasible("digraph has no dominator coloring in " + to_string(mode) + " mode");
        return *outcome.value;
    }

    auto table_k(int n) -> int
    {
        if (n < 4)
            throw InvalidArgument("printed tables start at n = 4");
        return n / 4;
    }
}

auto Embedding::identity(int n) -> Embedding
{
    Embedding result;
    for (int i = 0 ; i < n ; ++i)
        result.vertex_map.push_back(i);
    return result;
}

auto domchrom::sigma(const Digraph & d, DominationMode mode) -> SigmaReport
{
    int value = solved_value(d, mode);
    int c = chi(underlying(d));
    return SigmaReport{ value - c, value, c };
}

auto domchrom::printed_sigma_star_path(int n) -> int
{
    int k = table_k(n);
    switch (n % 4) {
        case 0:  return 3 * k - 2;
        case 1:  return 3 * k - 1;
        case 2:  return 3 * k - 1;
        default: return 3 * k;
    }
}

auto domchrom::printed_sigma_star_cycle(int n) -> int
{
    int k = table_k(n);
    switch (n % 4) {
        case 0:  return 3 * k - 2;
        case 1:  return 3 * k - 2;
        case 2:  return 3 * k - 1;
        default: return 3 * k;
    }
}

auto domchrom::is_path_graph(const BaseGraph & g) -> bool
{
    if (g.size() < 1 || g.edge_count() != g.size() - 1 || ! is_connected(g))
        return false;
    for (Vertex v = 0 ; v < g.size() ; ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

auto domchrom::is_cycle_graph(const BaseGraph & g) -> bool
{
    if (g.size() < 3 || g.edge_count() != g.size() || ! is_connected(g))
        return false;
    for (Vertex v = 0 ; v < g.size() ; ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

auto domchrom::sigma_star(const BaseGraph & base, DominationMode mode, const SweepOptions & options) -> SigmaStarReport
{
    auto report = sweep(base, mode, options);
    if (! report.min_value)
        throw Infeasible("no orientation admits a dominator coloring in " + to_string(mode) + " mode");

    int c = chi(base);
    SigmaStarReport result{ *report.max_value - c, *report.max_value - *report.min_value,
        *report.min_value, *report.max_value, c, std::nullopt };

    if (base.size() >= 4) {
        if (is_path_graph(base))
            result.printed_table_value = printed_sigma_star_path(base.size());
        else if (is_cycle_graph(base))
            result.printed_table_value = printed_sigma_star_cycle(base.size());
    }
    return result;
}

auto domchrom::is_subdigraph(const Digraph & d, const Digraph & h, const Embedding & e) -> bool
{
    if (static_cast<int>(e.vertex_map.size()) != h.size())
        throw InvalidArgument("embedding maps " + std::to_string(e.vertex_map.size()) + " vertices but H has "
                + std::to_string(h.size()));

    std::set<Vertex> images;
    for (auto v : e.vertex_map)
        if (v < 0 || v >= d.size() || ! images.insert(v).second)
            return false;

    for (auto & [u, v] : h.arcs())
        if (! d.has_arc(e.vertex_map[u], e.vertex_map[v]))
            return false;
    return true;
}

auto domchrom::discrepancy(const Digraph & d, const Digraph & h, const Embedding & e, DominationMode mode) -> int
{
    if (! is_subdigraph(d, h, e))
        throw InvalidArgument("embedding does not place H inside D");
    return solved_value(h, mode) - solved_value(d, mode);
}
