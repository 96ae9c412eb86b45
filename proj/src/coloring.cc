#include <domchrom/coloring.hh>
#include <domchrom/errors.hh>

#include <map>

using namespace domchrom;

namespace
{
    auto check_size(const Digraph & d, const Coloring & c) -> void
    {
        if (c.size() != d.size())
            throw InvalidArgument("coloring covers " + std::to_string(c.size()) + " vertices but digraph has " + std::to_string(d.size()));
    }
}

Coloring::Coloring(std::vector<int> assignment) :
    _assignment(std::move(assignment))
{
    for (auto c : _assignment) {
        if (c < 0 || c > _k)
            throw InvalidArgument("coloring is not in restricted-growth form");
        if (c == _k)
            ++_k;
    }
}

auto Coloring::members(int c) const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (Vertex v = 0 ; v < size() ; ++v)
        if (_assignment[v] == c)
            result.push_back(v);
    return result;
}

auto domchrom::canonicalize(const std::vector<int> & raw) -> Coloring
{
    std::map<int, int> relabel;
    std::vector<int> result;
    result.reserve(raw.size());
    for (auto c : raw) {
        auto [it, _] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
        result.push_back(it->second);
    }
    return Coloring{ std::move(result) };
}

auto domchrom::to_string(DominationMode mode) -> std::string
{
    switch (mode) {
        case DominationMode::sink_exempt: return "sink-exempt";
        case DominationMode::strict:      return "strict";
    }
    return "unknown";
}

auto domchrom::parse_mode(std::string_view text) -> DominationMode
{
    if (text == "sink-exempt")
        return DominationMode::sink_exempt;
    if (text == "strict")
        return DominationMode::strict;
    throw InvalidArgument("unknown domination mode '" + std::string(text) + "'");
}

auto domchrom::is_proper(const Digraph & d, const Coloring & c) -> bool
{
    check_size(d, c);
    for (auto & [u, v] : d.arcs())
        if (c[u] == c[v])
            return false;
    return true;
}

auto domchrom::dominated_classes(const Digraph & d, Vertex v, const Coloring & c) -> std::set<int>
{
    check_size(d, c);
    auto & out = d.out_neighbours(v);

    // class j is dominated iff all of its members are out-neighbours of v
    std::vector<int> class_size(c.classes(), 0), inside(c.classes(), 0);
    for (Vertex u = 0 ; u < c.size() ; ++u)
        ++class_size[c[u]];
    for (auto u : out)
        ++inside[c[u]];

    std::set<int> result;
    for (int j = 0 ; j < c.classes() ; ++j)
        if (class_size[j] > 0 && inside[j] == class_size[j])
            result.insert(j);
    return result;
}

auto domchrom::verify(const Digraph & d, const Coloring & c, DominationMode mode) -> Verdict
{
    check_size(d, c);

    Verdict result;
    for (auto & arc : d.arcs())
        if (c[arc.first] == c[arc.second])
            result.violations.emplace_back(ProperViolation{ arc });

    for (Vertex v = 0 ; v < d.size() ; ++v) {
        if (mode == DominationMode::sink_exempt && d.out_degree(v) == 0)
            continue;
        if (dominated_classes(d, v, c).empty())
            result.violations.emplace_back(DominationViolation{ v });
    }

    result.ok = result.violations.empty();
    return result;
}
