#include <domchrom/errors.hh>
#include <domchrom/solver.hh>

#include <algorithm>
#include <bit>

using namespace domchrom;

namespace
{
    using Mask = std::uint64_t;

    auto bit(int v) -> Mask
    {
        return Mask{ 1 } << v;
    }

    /**
     * Backtracking over restricted-growth colourings with exactly k classes.
     * Every vertex in required must end up with some class inside its
     * out-neighbourhood; with required empty this is plain k-colouring.
     */
    class Search
    {
        public:
            Search(int n, std::vector<Mask> adjacent, std::vector<Mask> out, Mask required) :
                _n(n),
                _adjacent(std::move(adjacent)),
                _out(std::move(out)),
                _required(required),
                _assignment(n, -1)
            {
            }

            auto run(int k) -> bool
            {
                _k = k;
                _used = 0;
                _class_mask.assign(k, 0);
                std::fill(_assignment.begin(), _assignment.end(), -1);
                if (k > _n || (k == 0 && _n > 0))
                    return false;
                return expand(0, 0);
            }

            auto assignment() const -> const std::vector<int> & { return _assignment; }
            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            int _n, _k = 0, _used = 0;
            std::vector<Mask> _adjacent, _out;
            Mask _required;
            std::vector<Mask> _class_mask;
            std::vector<int> _assignment;
            std::uint64_t _nodes = 0;

            auto doomed(Mask coloured) const -> bool
            {
                for (Mask r = _required ; r ; r &= r - 1) {
                    int w = std::countr_zero(r);
                    Mask out = _out[w];

                    bool has_class = false;
                    for (int c = 0 ; c < _used ; ++c)
                        if ((_class_mask[c] & ~out) == 0) {
                            has_class = true;
                            break;
                        }
                    if (has_class)
                        continue;

                    // a class not yet opened can only lie inside N+(w) if an uncoloured out-neighbour opens it
                    if (_used == _k || (out & ~coloured) == 0)
                        return true;
                }
                return false;
            }

            auto expand(int v, Mask coloured) -> bool
            {
                ++_nodes;
                if (v == _n)
                    return _used == _k;

                int remaining_after = _n - v - 1;
                int highest = std::min(_used, _k - 1);
                for (int c = 0 ; c <= highest ; ++c) {
                    int used_after = std::max(_used, c + 1);
                    if (remaining_after < _k - used_after)
                        continue;
                    if (_class_mask[c] & _adjacent[v])
                        continue;

                    int saved_used = _used;
                    _assignment[v] = c;
                    _class_mask[c] |= bit(v);
                    _used = used_after;

                    if (! doomed(coloured | bit(v)) && expand(v + 1, coloured | bit(v)))
                        return true;

                    _used = saved_used;
                    _class_mask[c] &= ~bit(v);
                    _assignment[v] = -1;
                }
                return false;
            }
    };

    auto check_width(int n) -> void
    {
        if (n > max_solver_vertices)
            throw GuardExceeded("solver handles at most " + std::to_string(max_solver_vertices) + " vertices");
    }

    auto adjacency_masks(const BaseGraph & g) -> std::vector<Mask>
    {
        std::vector<Mask> result(g.size(), 0);
        for (auto & [u, v] : g.edges()) {
            result[u] |= bit(v);
            result[v] |= bit(u);
        }
        return result;
    }

    auto required_mask(const Digraph & d, DominationMode mode) -> Mask
    {
        Mask result = 0;
        for (Vertex v = 0 ; v < d.size() ; ++v)
            if (mode == DominationMode::strict || d.out_degree(v) > 0)
                result |= bit(v);
        return result;
    }

    /// Calls f on every canonical colouring of n vertices with exactly k classes until f returns true.
    template <typename F>
    auto each_partition(int n, int k, F && f) -> bool
    {
        std::vector<int> a(n, 0);
        auto rec = [&] (auto & self, int i, int used) -> bool {
            if (i == n)
                return used == k && f(a);
            for (int c = 0 ; c <= std::min(used, k - 1) ; ++c) {
                a[i] = c;
                if (self(self, i + 1, std::max(used, c + 1)))
                    return true;
            }
            return false;
        };
        return rec(rec, 0, 0);
    }
}

auto domchrom::chi(const BaseGraph & g) -> int
{
    if (g.size() == 0)
        throw InvalidArgument("chromatic number of the empty graph is undefined");
    check_width(g.size());

    Search search(g.size(), adjacency_masks(g), std::vector<Mask>(g.size(), 0), 0);
    for (int k = 1 ; ; ++k)
        if (search.run(k))
            return k;
}

auto domchrom::chi_d(const Digraph & d, DominationMode mode) -> SolveOutcome
{
    if (d.size() == 0)
        throw InvalidArgument("dominator chromatic number of the empty digraph is undefined");
    check_width(d.size());

    std::vector<Mask> out(d.size(), 0);
    for (auto & [u, v] : d.arcs())
        out[u] |= bit(v);

    auto base = underlying(d);
    Search search(d.size(), adjacency_masks(base), std::move(out), required_mask(d, mode));

    SolveOutcome result;
    result.mode = mode;
    for (int k = chi(base) ; k <= d.size() ; ++k)
        if (search.run(k)) {
            result.value = k;
            result.witness = Coloring{ search.assignment() };
            break;
        }
    result.nodes_explored = search.nodes();
    return result;
}

auto domchrom::chi_d_oracle(const Digraph & d, DominationMode mode) -> SolveOutcome
{
    if (d.size() > max_oracle_vertices)
        throw GuardExceeded("oracle handles at most " + std::to_string(max_oracle_vertices) + " vertices");
    if (d.size() == 0)
        throw InvalidArgument("dominator chromatic number of the empty digraph is undefined");

    SolveOutcome result;
    result.mode = mode;
    for (int k = 1 ; k <= d.size() && ! result.value ; ++k)
        each_partition(d.size(), k, [&] (const std::vector<int> & a) {
            ++result.nodes_explored;
            Coloring c{ a };
            if (! verify(d, c, mode).ok)
                return false;
            result.value = k;
            result.witness = std::move(c);
            return true;
        });
    return result;
}
