// Acceptance suite: one PASS/FAIL line per criterion. Exact integer checks;
// the only tolerances are the wall-clock budgets below.

#include <domchrom/families.hh>
#include <domchrom/invariants.hh>
#include <domchrom/solver.hh>

#include "oracles.hh"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

using namespace domchrom;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        auto require(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                if (pass)
                    detail << "first failure: " << what;
                pass = false;
            }
        }
    };

    /// Every solver result and constructive witness seen anywhere passes through here.
    struct Audit
    {
        std::mutex lock;
        std::uint64_t checked = 0;
        std::vector<std::string> failures;

        auto record(bool ok, const std::string & what) -> void
        {
            std::lock_guard guard(lock);
            ++checked;
            if (! ok)
                failures.push_back(what);
        }
    } audit;

    auto describe(const Digraph & d) -> std::string
    {
        std::ostringstream s;
        s << "digraph " << d.size() << " [";
        for (auto & [u, v] : d.arcs())
            s << ' ' << u << "->" << v;
        s << " ]";
        return s.str();
    }

    auto audited(const Digraph & d, DominationMode mode = DominationMode::sink_exempt) -> SolveOutcome
    {
        auto outcome = chi_d(d, mode);
        bool ok = outcome.mode == mode;
        if (outcome.feasible())
            ok = ok && outcome.witness && verify(d, *outcome.witness, mode).ok && outcome.witness->classes() == *outcome.value
                && chi(underlying(d)) <= *outcome.value && *outcome.value <= d.size();
        else
            ok = ok && ! outcome.witness && mode == DominationMode::strict;
        audit.record(ok, describe(d));
        return outcome;
    }

    auto audited(const ConstructiveWitness & w) -> const ConstructiveWitness &
    {
        auto & d = w.digraph();
        bool ok = verify(d, w.coloring(), DominationMode::sink_exempt).ok && w.coloring().classes() == w.claimed_value()
            && chi(underlying(d)) <= w.claimed_value() && w.claimed_value() <= d.size();
        audit.record(ok, "witness for " + describe(d));
        return w;
    }

    auto value(const Digraph & d, DominationMode mode = DominationMode::sink_exempt) -> int
    {
        auto outcome = audited(d, mode);
        return outcome.value.value_or(-1);
    }

    auto all_codes(const BaseGraph & base) -> SweepOptions
    {
        SweepOptions options;
        options.code_limit = std::size_t{ 1 } << base.edge_count();
        return options;
    }

    auto orientations(const BaseGraph & base) -> std::uint64_t
    {
        return std::uint64_t{ 1 } << base.edge_count();
    }

    auto join(const auto & values) -> std::string
    {
        std::ostringstream s;
        bool first = true;
        for (auto & v : values) {
            s << (first ? "" : ",") << v;
            first = false;
        }
        return s.str();
    }

    auto criterion_1(Outcome & r) -> void
    {
        std::vector<int> minima;
        for (int n = 1 ; n <= 12 ; ++n) {
            auto report = sweep(path_base(n), DominationMode::sink_exempt);
            minima.push_back(report.min_value.value_or(-1));
            r.require(report.orientation_count() == orientations(path_base(n)), "path n=" + std::to_string(n) + " orientation count");
            r.require(report.min_value == chi_d_path_formula(n), "path n=" + std::to_string(n) + " min "
                    + std::to_string(minima.back()) + " vs formula " + std::to_string(chi_d_path_formula(n)));
        }
        r.require(minima[0] == 1 && minima[1] == 2 && minima[2] == 2, "basis values 1,2,2");
        r.require(minima[5] == 3, "P_6 exception");
        if (r.pass)
            r.detail << "path minima n=1..12: " << join(minima);
    }

    auto criterion_2(Outcome & r) -> void
    {
        std::vector<int> minima;
        for (int n = 3 ; n <= 12 ; ++n) {
            auto report = sweep(cycle_base(n), DominationMode::sink_exempt);
            minima.push_back(report.min_value.value_or(-1));
            r.require(report.orientation_count() == orientations(cycle_base(n)), "cycle n=" + std::to_string(n) + " orientation count");
            r.require(report.min_value == chi_d_cycle_formula(n), "cycle n=" + std::to_string(n) + " min "
                    + std::to_string(minima.back()) + " vs formula " + std::to_string(chi_d_cycle_formula(n)));
        }
        r.require(minima[1] == 2 && minima[2] == 3 && minima[3] == 3 && minima[5] == 4, "exceptions C_4=2, C_5=C_6=3, C_8=4");
        if (r.pass)
            r.detail << "cycle minima n=3..12: " << join(minima);
    }

    auto criterion_3(Outcome & r) -> void
    {
        std::vector<std::string> sizes;
        for (int n = 3 ; n <= 10 ; ++n) {
            r.require(value(directed_path(n)) == n, "chi_d(directed_path(" + std::to_string(n) + ")) = n");
            r.require(value(directed_cycle(n)) == n, "chi_d(directed_cycle(" + std::to_string(n) + ")) = n");

            auto base = cycle_base(n);
            auto report = sweep(base, DominationMode::sink_exempt, all_codes(base));
            std::set<std::uint64_t> argmax;
            for (auto & code : report.argmax_codes)
                argmax.insert(code.index());

            auto directed = orientation_of(base, directed_cycle(n)).index();
            std::set<std::uint64_t> symmetric;
            for (auto & c : cycle_symmetry_classes(n))
                if (std::ranges::find(c, directed) != c.end())
                    symmetric.insert(c.begin(), c.end());

            r.require(report.max_value == n, "cycle n=" + std::to_string(n) + " max = n");
            r.require(! report.argmax_overflow, "argmax list complete");
            r.require(argmax == symmetric, "cycle n=" + std::to_string(n) + " argmax set has " + std::to_string(argmax.size())
                    + " codes, directed-cycle symmetry class has " + std::to_string(symmetric.size()));
            sizes.push_back(std::to_string(argmax.size()) + "/" + std::to_string(symmetric.size()));
        }
        r.detail << (r.pass ? "" : "; ") << "argmax/class sizes n=3..10: " << join(sizes);

        // same question under the literal definition, reported only
        std::vector<std::string> strict;
        for (int n = 3 ; n <= 10 ; ++n) {
            auto report = sweep(cycle_base(n), DominationMode::strict, all_codes(cycle_base(n)));
            strict.push_back(std::to_string(report.argmax_codes.size()));
        }
        r.detail << "; strict-mode argmax sizes: " << join(strict);
    }

    auto criterion_4(Outcome & r) -> void
    {
        for (int leaves = 1 ; leaves <= 6 ; ++leaves) {
            auto base = base_graph({ FamilyKind::star, { leaves } });
            for (std::uint64_t i = 0 ; i < orientations(base) ; ++i) {
                auto d = orient(OrientationCode::from_index(base, i));
                bool agree = i == 0 || i == orientations(base) - 1;
                r.require(value(d) == (agree ? 2 : 3), "star " + std::to_string(leaves) + " code " + std::to_string(i));
            }
        }

        std::uint64_t checked = 0, bipartite = 0;
        for (int n = 1 ; n <= 5 ; ++n) {
            for (auto & arcs : oracle::all_digraphs(n, true)) {
                auto d = make_digraph(n, arcs);
                bool two = value(d) == 2;
                bool one_way = oracle::is_one_way_complete_bipartite(n, arcs);
                r.require(two == one_way, describe(d) + (two ? " has chi_d 2 but is not one-way complete bipartite"
                            : " is one-way complete bipartite but chi_d != 2"));
                ++checked;
                bipartite += one_way;
            }
        }
        r.detail << (r.pass ? "" : "; ") << "stars 1..6 leaves; " << checked << " connected digraphs n<=5, "
            << bipartite << " one-way complete bipartite";
    }

    auto criterion_5(Outcome & r) -> void
    {
        auto p4 = make_digraph(4, { { 1, 0 }, { 1, 2 }, { 3, 2 } });
        auto c4 = make_digraph(4, { { 1, 0 }, { 1, 2 }, { 3, 2 }, { 3, 0 } });
        int p = value(p4), c = value(c4);
        r.require(p == 3 && c == 2, "P_4 " + std::to_string(p) + " vs C_4 " + std::to_string(c));

        std::vector<int> deltas;
        for (int n = 6 ; n <= 10 ; ++n) {
            audited(tilde_cycle(n));
            audited(directed_cycle(n));
            deltas.push_back(discrepancy(tilde_cycle(n), directed_cycle(n), Embedding::identity(n)));
        }
        r.require(deltas == std::vector<int>{ 3, 3, 5, 5, 7 }, "tilde-cycle discrepancies " + join(deltas));
        r.detail << (r.pass ? "" : "; ") << "P_4=" << p << " C_4=" << c << "; delta n=6..10: " << join(deltas);
    }

    auto criterion_6(Outcome & r) -> void
    {
        std::uint64_t pairs = 0;
        for (int n = 1 ; n <= 9 ; ++n) {
            auto base = path_base(n);
            for (std::uint64_t i = 0 ; i < orientations(base) ; ++i) {
                auto code = OrientationCode::from_index(base, i);
                int whole = value(orient(code));
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a ; b < n ; ++b) {
                        std::vector<Arc> arcs;
                        for (int e = a ; e < b ; ++e)
                            arcs.push_back(code.bits[e] ? Arc{ e + 1 - a, e - a } : Arc{ e - a, e + 1 - a });
                        int sub = value(make_digraph(b - a + 1, arcs));
                        r.require(sub <= whole, "sub-path [" + std::to_string(a) + "," + std::to_string(b) + "] of "
                                + std::to_string(n) + "-path code " + code.to_string());
                        ++pairs;
                    }
            }
        }

        std::vector<std::string> compare;
        for (int m = 3 ; m <= 12 ; ++m) {
            int path = *sweep(path_base(m)).min_value;
            int cycle = *sweep(cycle_base(m)).min_value;
            if (m == 4)
                r.require(path > cycle, "strict failure expected at m=4");
            else
                r.require(path <= cycle, "m=" + std::to_string(m) + " path " + std::to_string(path) + " > cycle " + std::to_string(cycle));
            compare.push_back(std::to_string(path) + (path <= cycle ? "<=" : ">") + std::to_string(cycle));
        }
        r.detail << (r.pass ? "" : "; ") << pairs << " sub-path pairs; min P_m vs C_m, m=3..12: " << join(compare);
    }

    auto criterion_7(Outcome & r) -> void
    {
        // the printed tables do not cover the values where the minima have exceptions
        const std::set<int> path_exceptions{ 6 }, cycle_exceptions{ 4, 5, 6 };
        std::vector<std::string> notes;
        int definitional_mismatches = 0, compared = 0;

        for (int kind = 0 ; kind < 2 ; ++kind) {
            for (int n = 4 ; n <= 12 ; ++n) {
                auto base = kind == 0 ? path_base(n) : cycle_base(n);
                auto report = sigma_star(base);
                auto name = std::string(kind == 0 ? "P_" : "C_") + std::to_string(n);
                bool exceptional = (kind == 0 ? path_exceptions : cycle_exceptions).contains(n);
                if (! exceptional)
                    r.require(report.orientation_spread == report.printed_table_value, name + " spread "
                            + std::to_string(report.orientation_spread) + " vs printed " + std::to_string(report.printed_table_value.value_or(-1)));
                else
                    notes.push_back(name + " spread " + std::to_string(report.orientation_spread) + " printed "
                            + std::to_string(report.printed_table_value.value_or(-1)) + " (excluded)");
                ++compared;
                definitional_mismatches += report.printed_table_value != report.sigma_star_definitional;
            }
        }

        std::uint64_t tournaments = 0;
        for (int n = 1 ; n <= 5 ; ++n)
            for (std::uint64_t i = 0 ; i < (std::uint64_t{ 1 } << (n * (n - 1) / 2)) ; ++i) {
                auto t = tournament_from_index(n, i);
                audited(t);
                r.require(sigma(t).sigma_definitional == 0, "tournament n=" + std::to_string(n) + " index " + std::to_string(i));
                ++tournaments;
            }

        int bipartite = 0;
        for (int m = 1 ; m <= 7 ; ++m)
            for (int n = 1 ; m + n <= 8 ; ++n) {
                auto d = one_way_complete_bipartite(m, n);
                audited(d);
                r.require(sigma(d).sigma_definitional == 0, "one-way K_" + std::to_string(m) + "," + std::to_string(n));
                ++bipartite;
            }
        r.detail << (r.pass ? "" : "; ") << tournaments << " tournaments, " << bipartite << " one-way K_{m,n}; " << join(notes)
            << "; report: definitional sigma* differs from the printed value on " << definitional_mismatches << " of " << compared << " bases";
    }

    auto criterion_8(Outcome & r) -> void
    {
        std::uint64_t compared = 0;
        auto compare = [&] (const Digraph & d, const std::string & what) {
            for (auto mode : { DominationMode::sink_exempt, DominationMode::strict }) {
                auto fast = audited(d, mode);
                auto slow = chi_d_oracle(d, mode);
                r.require(fast.value == slow.value, what + " in " + to_string(mode) + " mode");
                ++compared;
            }
        };

        for (int n = 1 ; n <= 8 ; ++n) {
            auto base = path_base(n);
            for (std::uint64_t i = 0 ; i < orientations(base) ; ++i)
                compare(orient(OrientationCode::from_index(base, i)), "path n=" + std::to_string(n) + " code " + std::to_string(i));
        }
        for (int n = 3 ; n <= 8 ; ++n) {
            auto base = cycle_base(n);
            for (std::uint64_t i = 0 ; i < orientations(base) ; ++i)
                compare(orient(OrientationCode::from_index(base, i)), "cycle n=" + std::to_string(n) + " code " + std::to_string(i));
        }

        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> size(2, 7);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            int n = size(rng);
            auto arcs = oracle::random_connected_digraph(n, rng);
            auto d = make_digraph(n, arcs);
            compare(d, "random " + describe(d));
            r.require(chi_d(d).value == oracle::chi_d(n, arcs), "independent brute force on " + describe(d));
        }
        r.detail << (r.pass ? "" : "; ") << compared << " solver/oracle comparisons (both modes)";
    }

    auto criterion_9(Outcome & r) -> void
    {
        for (int n = 1 ; n <= 20 ; ++n)
            audited(path_optimal(n));
        for (int n = 3 ; n <= 20 ; ++n)
            audited(cycle_optimal(n));
        for (int n = 1 ; n <= 8 ; ++n)
            for (std::uint64_t i = 0 ; i < orientations(path_base(n)) ; ++i)
                audited(orient(OrientationCode::from_index(path_base(n), i)));
        for (int n = 3 ; n <= 8 ; ++n)
            for (std::uint64_t i = 0 ; i < orientations(cycle_base(n)) ; ++i)
                for (auto mode : { DominationMode::sink_exempt, DominationMode::strict })
                    audited(orient(OrientationCode::from_index(cycle_base(n), i)), mode);
        for (int n = 3 ; n <= 12 ; ++n) {
            audited(tilde_cycle(n));
            audited(directed_cycle(n));
        }
        for (int n = 1 ; n <= 7 ; ++n)
            audited(random_tournament(n, static_cast<std::uint64_t>(n)));
        for (int leaves = 1 ; leaves <= 6 ; ++leaves)
            for (int in = 0 ; in <= leaves ; ++in)
                audited(star_oriented(leaves, in));
        audited(fig3_digraph());
        audited(fig4_digraph());
        for (auto base : { path_base(10), cycle_base(10) }) {
            for (auto e : { min_over_orientations(base), max_over_orientations(base) }) {
                auto d = orient(e.code);
                audit.record(verify(d, e.witness).ok && e.witness.classes() == e.value && chi(base) <= e.value && e.value <= d.size(),
                        "orientation extreme for " + describe(d));
            }
        }

        std::lock_guard guard(audit.lock);
        r.require(audit.failures.empty(), audit.failures.empty() ? "" : audit.failures.front());
        r.detail << (r.pass ? "" : "; ") << audit.checked << " outcomes and witnesses audited, " << audit.failures.size() << " unsound";
    }

    auto criterion_10(Outcome & r) -> void
    {
        int f3 = value(fig3_digraph()), f4 = value(fig4_digraph());
        auto o3 = chi_d_oracle(fig3_digraph()).value, o4 = chi_d_oracle(fig4_digraph()).value;
        r.require(f3 < 6 && f4 < 6, "both below |V| = 6");
        r.require(f3 == 5 && f4 == 5, "solver values 5");
        r.require(o3 == 5 && o4 == 5, "oracle values 5");
        r.detail << (r.pass ? "" : "; ") << "fig3 " << f3 << ", fig4 " << f4 << " (oracle " << o3.value_or(-1) << ", " << o4.value_or(-1) << ")";
    }

    struct Criterion
    {
        int id;
        std::string title;
        double budget_seconds;
        std::function<void (Outcome &)> body;
    };
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "Acceptance criteria" };
    std::vector<int> only;
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    // run 9 last so its audit covers everything the other criteria solved
    const std::vector<Criterion> criteria{
        { 1, "path minima over orientations, n=1..12", 120, criterion_1 },
        { 2, "cycle minima over orientations, n=3..12", 300, criterion_2 },
        { 3, "directed path/cycle values and uniqueness of the maximizing cycle orientation", 300, criterion_3 },
        { 4, "stars and the chi_d = 2 characterization, n<=5", 300, criterion_4 },
        { 5, "path/cycle inequality reversal at 4 and tilde-cycle discrepancies", 120, criterion_5 },
        { 6, "sub-path monotonicity and min path vs min cycle", 300, criterion_6 },
        { 7, "orientation spread vs printed tables; sigma of tournaments and one-way K_{m,n}", 300, criterion_7 },
        { 8, "solver agrees with the unpruned oracle", 300, criterion_8 },
        { 10, "Hamiltonian examples have chi_d 5", 60, criterion_10 },
        { 9, "witness soundness of every outcome", 300, criterion_9 },
    };

    int failed = 0;
    for (auto & c : criteria) {
        if (! only.empty() && std::ranges::find(only, c.id) == only.end())
            continue;

        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(outcome);
        }
        catch (const std::exception & e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.require(seconds <= c.budget_seconds, "over time budget");

        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
                  << " [" << std::fixed << std::setprecision(2) << seconds << " s of " << std::setprecision(0) << c.budget_seconds << " s] "
                  << outcome.detail.str() << std::endl;
        failed += ! outcome.pass;
    }
    return failed ? 1 : 0;
}
