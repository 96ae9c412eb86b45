#include <domchrom/errors.hh>
#include <domchrom/families.hh>

#include <random>

using namespace domchrom;

namespace
{
    auto require(bool condition, const std::string & what) -> void
    {
        if (! condition)
            throw InvalidArgument(what);
    }

    /// Orients the path 0..n-1 so vertex i has out-degree degrees[i].
    auto path_with_out_degrees(const std::vector<int> & degrees) -> Digraph
    {
        int n = static_cast<int>(degrees.size());
        std::vector<Arc> arcs;
        bool previous_backward = false;
        for (int i = 0 ; i + 1 < n ; ++i) {
            int forward = degrees[i] - (previous_backward ? 1 : 0);
            require(forward == 0 || forward == 1, "out-degree sequence is not realisable on a path");
            arcs.push_back(forward ? Arc{ i, i + 1 } : Arc{ i + 1, i });
            previous_backward = ! forward;
        }
        require(degrees[n - 1] == (previous_backward ? 1 : 0), "out-degree sequence is not realisable on a path");
        return make_digraph(n, std::move(arcs));
    }

    /// Orients cycle_base(n) so vertex i has out-degree degrees[i]; arcs follow the base edge order.
    auto cycle_with_out_degrees(const std::vector<int> & degrees) -> Digraph
    {
        int n = static_cast<int>(degrees.size());
        // forward[i]: edge {i, i+1 mod n} points i -> i+1; out(i) = forward[i] + !forward[i-1]
        for (int last : { 0, 1 }) {
            std::vector<int> forward(n);
            int previous = last;
            bool ok = true;
            for (int i = 0 ; i < n && ok ; ++i) {
                forward[i] = degrees[i] - 1 + previous;
                ok = forward[i] == 0 || forward[i] == 1;
                previous = forward[i];
            }
            if (! ok || forward[n - 1] != last)
                continue;

            std::vector<Arc> arcs;
            for (int i = 0 ; i + 1 < n ; ++i)
                arcs.push_back(forward[i] ? Arc{ i, i + 1 } : Arc{ i + 1, i });
            arcs.push_back(forward[n - 1] ? Arc{ n - 1, 0 } : Arc{ 0, n - 1 });
            return make_digraph(n, std::move(arcs));
        }
        throw InvalidArgument("out-degree sequence is not realisable on a cycle");
    }

    /// {0,2,0,2,...} of length n, starting with a sink.
    auto alternating(int n) -> std::vector<int>
    {
        std::vector<int> result(n);
        for (int i = 0 ; i < n ; ++i)
            result[i] = (i % 2) ? 2 : 0;
        return result;
    }

    // Raw labels used while building witnesses; canonicalize() renumbers them.
    constexpr int sources = 0;      // every out-degree-2 vertex
    constexpr int shared_sinks = 1;

    /**
     * The P_{4k+1} scheme on 1-based v_1..v_n with out-degrees {0,2,...,2,0}:
     * even positions share one class, positions 3 mod 4 are unique, positions
     * 1 mod 4 share another class. Returns 0-based raw labels.
     */
    auto alternating_path_labels(int n) -> std::vector<int>
    {
        std::vector<int> labels(n);
        int next_unique = 2;
        for (int i = 1 ; i <= n ; ++i) {
            if (i % 2 == 0)
                labels[i - 1] = sources;
            else if (i % 4 == 3)
                labels[i - 1] = next_unique++;
            else
                labels[i - 1] = shared_sinks;
        }
        return labels;
    }

    auto fresh_label(const std::vector<int> & labels) -> int
    {
        int result = 0;
        for (auto l : labels)
            result = std::max(result, l + 1);
        return result;
    }
}

auto domchrom::to_string(FamilyKind kind) -> std::string
{
    switch (kind) {
        case FamilyKind::path:               return "path";
        case FamilyKind::cycle:              return "cycle";
        case FamilyKind::star:               return "star";
        case FamilyKind::complete:           return "complete";
        case FamilyKind::complete_bipartite: return "complete-bipartite";
        case FamilyKind::tilde_cycle:        return "tilde-cycle";
        case FamilyKind::fig3:               return "fig3";
        case FamilyKind::fig4:               return "fig4";
    }
    return "unknown";
}

auto domchrom::parse_family_kind(std::string_view text) -> FamilyKind
{
    for (auto kind : { FamilyKind::path, FamilyKind::cycle, FamilyKind::star, FamilyKind::complete,
            FamilyKind::complete_bipartite, FamilyKind::tilde_cycle, FamilyKind::fig3, FamilyKind::fig4 })
        if (to_string(kind) == text)
            return kind;
    throw InvalidArgument("unknown family '" + std::string(text) + "'");
}

auto domchrom::validate(const FamilySpec & spec) -> void
{
    auto & p = spec.params;
    auto name = to_string(spec.kind);
    auto count = [&] (std::size_t lo, std::size_t hi) {
        require(p.size() >= lo && p.size() <= hi, name + " takes " + (lo == hi ? std::to_string(lo) :
                    std::to_string(lo) + " to " + std::to_string(hi)) + " parameter(s)");
    };

    switch (spec.kind) {
        case FamilyKind::path:
            count(1, 1);
            require(p[0] >= 1, "path needs n >= 1");
            break;
        case FamilyKind::cycle:
        case FamilyKind::tilde_cycle:
            count(1, 1);
            require(p[0] >= 3, name + " needs n >= 3");
            break;
        case FamilyKind::star:
            count(1, 2);
            require(p[0] >= 1, "star needs at least one leaf");
            require(p.size() == 1 || (p[1] >= 0 && p[1] <= p[0]), "star in-arc count must lie in [0, leaves]");
            break;
        case FamilyKind::complete:
            count(1, 2);
            require(p[0] >= 1, "complete needs n >= 1");
            require(p.size() == 1 || p[1] >= 0, "tournament seed must be nonnegative");
            break;
        case FamilyKind::complete_bipartite:
            count(2, 2);
            require(p[0] >= 1 && p[1] >= 1, "complete-bipartite needs m, n >= 1");
            break;
        case FamilyKind::fig3:
        case FamilyKind::fig4:
            count(0, 0);
            break;
    }
}

auto domchrom::base_graph(const FamilySpec & spec) -> BaseGraph
{
    validate(spec);
    auto & p = spec.params;
    std::vector<Edge> edges;

    switch (spec.kind) {
        case FamilyKind::path:
            return path_base(p[0]);
        case FamilyKind::cycle:
            return cycle_base(p[0]);
        case FamilyKind::star:
            for (int i = 1 ; i <= p[0] ; ++i)
                edges.emplace_back(0, i);
            return BaseGraph{ p[0] + 1, std::move(edges) };
        case FamilyKind::complete:
            for (int u = 0 ; u < p[0] ; ++u)
                for (int v = u + 1 ; v < p[0] ; ++v)
                    edges.emplace_back(u, v);
            return BaseGraph{ p[0], std::move(edges) };
        case FamilyKind::complete_bipartite:
            for (int x = 0 ; x < p[0] ; ++x)
                for (int y = 0 ; y < p[1] ; ++y)
                    edges.emplace_back(x, p[0] + y);
            return BaseGraph{ p[0] + p[1], std::move(edges) };
        case FamilyKind::tilde_cycle:
            edges = cycle_base(p[0]).edges();
            for (int i = 0 ; i < p[0] ; ++i)
                edges.emplace_back(i, p[0]);
            return BaseGraph{ p[0] + 1, std::move(edges) };
        case FamilyKind::fig3:
            return underlying(fig3_digraph());
        case FamilyKind::fig4:
            return underlying(fig4_digraph());
    }
    throw InvalidArgument("unknown family");
}

ConstructiveWitness::ConstructiveWitness(Digraph digraph, Coloring coloring, int claimed_value) :
    _digraph(std::move(digraph)),
    _coloring(std::move(coloring)),
    _claimed_value(claimed_value)
{
    if (_coloring.classes() != _claimed_value)
        throw InvalidArgument("witness uses " + std::to_string(_coloring.classes()) + " classes, claimed "
                + std::to_string(_claimed_value));
    if (! verify(_digraph, _coloring, DominationMode::sink_exempt).ok)
        throw InvalidArgument("witness coloring is not a dominator coloring");
}

auto domchrom::directed_path(int n) -> Digraph
{
    require(n >= 1, "directed path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0 ; i + 1 < n ; ++i)
        arcs.emplace_back(i, i + 1);
    return make_digraph(n, std::move(arcs));
}

auto domchrom::directed_cycle(int n) -> Digraph
{
    require(n >= 3, "directed cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (int i = 0 ; i + 1 < n ; ++i)
        arcs.emplace_back(i, i + 1);
    arcs.emplace_back(n - 1, 0);
    return make_digraph(n, std::move(arcs));
}

auto domchrom::chi_d_path_formula(int n) -> int
{
    require(n >= 1, "path formula needs n >= 1");
    if (n <= 3)
        return n == 1 ? 1 : 2;
    if (n == 6)
        return 3;
    int k = n / 4;
    return (n % 4 <= 1) ? k + 2 : k + 3;
}

auto domchrom::chi_d_cycle_formula(int n) -> int
{
    require(n >= 3, "cycle formula needs n >= 3");
    if (n == 4)
        return 2;
    if (n == 3 || n == 5 || n == 6)
        return 3;
    return (n + 3) / 4 + 2;
}

auto domchrom::path_optimal(int n) -> ConstructiveWitness
{
    require(n >= 1, "path needs n >= 1");

    std::vector<int> degrees, labels;
    if (n == 1) {
        degrees = { 0 };
        labels = { 0 };
    }
    else if (n == 2) {
        degrees = { 1, 0 };
        labels = { 0, 1 };
    }
    else if (n == 3) {
        degrees = { 0, 2, 0 };
        labels = { 0, 1, 0 };
    }
    else if (n == 4) {
        // v2 dominates v1 and v3; v4 needs v3 unique, v1 and v4 share
        degrees = { 0, 2, 0, 1 };
        labels = { 0, 1, 2, 0 };
    }
    else if (n == 6) {
        degrees = { 1, 0, 2, 0, 2, 0 };
        labels = { 0, 1, 0, 2, 0, 2 };
    }
    else {
        int r = n % 4;
        // odd lengths are fully alternating; even lengths append one arc into the last vertex
        int core = (r % 2 == 1) ? n : n - 1;
        degrees = alternating(core);
        labels = alternating_path_labels(core);

        if (r == 3) {
            // v_{n-1} has out-degree 2 and keeps the source class; v_n becomes unique
            labels[n - 1] = fresh_label(labels);
        }
        else if (r == 2) {
            labels[core - 1] = fresh_label(labels);
            degrees.push_back(1);
            labels.push_back(sources);
        }
        else if (r == 0) {
            // extend P_{n-1} (n-1 = 4k+3) by a vertex pointing at its unique end
            labels[core - 1] = fresh_label(labels);
            degrees.push_back(1);
            labels.push_back(sources);
        }
    }

    return ConstructiveWitness{ path_with_out_degrees(degrees), canonicalize(labels), chi_d_path_formula(n) };
}

auto domchrom::cycle_optimal(int n) -> ConstructiveWitness
{
    require(n >= 3, "cycle needs n >= 3");

    std::vector<int> degrees, labels;
    if (n == 4) {
        degrees = { 0, 2, 0, 2 };
        labels = { 0, 1, 0, 1 };
    }
    else if (n == 5) {
        degrees = { 1, 0, 2, 0, 2 };
        labels = { 2, 1, 0, 2, 0 };
    }
    else if (n == 6) {
        degrees = { 0, 2, 0, 2, 0, 2 };
        labels = { 1, 0, 1, 0, 2, 0 };
    }
    else if (n % 2 == 0) {
        // alternating sinks and sources; v_n points back at v_1
        degrees = alternating(n);
        labels = alternating_path_labels(n);
        if (n % 4 == 2)
            labels[n - 2] = fresh_label(labels);
    }
    else {
        // v1 -> v2 forces v2 unique; the rest alternate, the last source pointing at v1.
        // Sinks v4, v6, ..., v_{n-1} followed by v1 form a chain in which
        // consecutive members share a source; alternate shared / unique along it.
        degrees.assign(n, 0);
        labels.assign(n, sources);
        degrees[0] = 1;
        for (int i = 2 ; i < n ; i += 2)
            degrees[i] = 2;

        int next_unique = 2;
        labels[1] = next_unique++;
        std::vector<int> chain;
        for (int i = 3 ; i < n ; i += 2)
            chain.push_back(i);
        chain.push_back(0);
        for (std::size_t j = 0 ; j < chain.size() ; ++j)
            labels[chain[j]] = (j % 2 == 0) ? shared_sinks : next_unique++;
    }

    return ConstructiveWitness{ cycle_with_out_degrees(degrees), canonicalize(labels), chi_d_cycle_formula(n) };
}

auto domchrom::star_oriented(int leaves, int in_arcs) -> Digraph
{
    require(leaves >= 1, "star needs at least one leaf");
    require(in_arcs >= 0 && in_arcs <= leaves, "star in-arc count must lie in [0, leaves]");
    std::vector<Arc> arcs;
    for (int i = 1 ; i <= leaves ; ++i)
        arcs.push_back(i <= in_arcs ? Arc{ i, 0 } : Arc{ 0, i });
    return make_digraph(leaves + 1, std::move(arcs));
}

auto domchrom::one_way_complete_bipartite(int m, int n) -> Digraph
{
    require(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1");
    std::vector<Arc> arcs;
    for (int x = 0 ; x < m ; ++x)
        for (int y = 0 ; y < n ; ++y)
            arcs.emplace_back(x, m + y);
    return make_digraph(m + n, std::move(arcs));
}

auto domchrom::tournament(int n, const ArcChooser & chooser) -> Digraph
{
    require(n >= 1, "tournament needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            arcs.push_back(chooser(u, v) ? Arc{ u, v } : Arc{ v, u });
    return make_digraph(n, std::move(arcs));
}

auto domchrom::transitive_tournament(int n) -> Digraph
{
    return tournament(n, [] (Vertex, Vertex) { return true; });
}

auto domchrom::tournament_from_index(int n, std::uint64_t index) -> Digraph
{
    require(n >= 1 && n * (n - 1) / 2 <= 64, "tournament index supports 1 <= n <= 11");
    int j = 0;
    return tournament(n, [&] (Vertex, Vertex) { return ! ((index >> j++) & 1); });
}

auto domchrom::random_tournament(int n, std::uint64_t seed) -> Digraph
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    return tournament(n, [&] (Vertex, Vertex) { return coin(rng); });
}

auto domchrom::tilde_cycle(int n) -> Digraph
{
    require(n >= 3, "tilde cycle needs n >= 3");
    auto arcs = directed_cycle(n).arcs();
    for (int i = 0 ; i < n ; ++i)
        arcs.emplace_back(i, n);
    return make_digraph(n + 1, std::move(arcs));
}

auto domchrom::fig3_digraph() -> Digraph
{
    return make_digraph(6, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 4, 0 } });
}

auto domchrom::fig4_digraph() -> Digraph
{
    return make_digraph(6, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 0 }, { 5, 2 }, { 1, 3 } });
}

auto domchrom::family_digraph(const FamilySpec & spec) -> Digraph
{
    validate(spec);
    auto & p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path:               return path_optimal(p[0]).digraph();
        case FamilyKind::cycle:              return cycle_optimal(p[0]).digraph();
        case FamilyKind::star:               return star_oriented(p[0], p.size() > 1 ? p[1] : 0);
        case FamilyKind::complete:
            return p.size() > 1 ? random_tournament(p[0], static_cast<std::uint64_t>(p[1])) : transitive_tournament(p[0]);
        case FamilyKind::complete_bipartite: return one_way_complete_bipartite(p[0], p[1]);
        case FamilyKind::tilde_cycle:        return tilde_cycle(p[0]);
        case FamilyKind::fig3:               return fig3_digraph();
        case FamilyKind::fig4:               return fig4_digraph();
    }
    throw InvalidArgument("unknown family");
}
