#include <domchrom/cli.hh>
#include <domchrom/errors.hh>
#include <domchrom/families.hh>
#include <domchrom/invariants.hh>
#include <domchrom/io.hh>
#include <domchrom/solver.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

using namespace domchrom;
using nlohmann::json;

namespace
{
    using Clock = std::chrono::steady_clock;

    auto elapsed_ms(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidArgument("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    /// Reports a file-level parse error with the file name in front.
    template <typename T, typename Parser>
    auto load(const std::string & path, Parser && parser) -> T
    {
        auto text = read_file(path);
        try {
            return parser(text);
        }
        catch (const ParseError & e) {
            throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
    }

    auto join(const std::vector<int> & values) -> std::string
    {
        std::string result;
        for (std::size_t i = 0 ; i < values.size() ; ++i)
            result += (i ? " " : "") + std::to_string(values[i]);
        return result;
    }

    auto mode_option(CLI::App * sub, std::string & mode) -> void
    {
        sub->add_option("--mode", mode, "domination semantics")
            ->check(CLI::IsMember({ "sink-exempt", "strict" }))
            ->capture_default_str();
    }

    /// --n or --n-min/--n-max, validated into an inclusive range.
    struct Range
    {
        std::optional<int> n, lo, hi;

        auto add(CLI::App * sub, bool allow_single) -> void
        {
            if (allow_single)
                sub->add_option("--n", n, "single size");
            sub->add_option("--n-min", lo, "smallest size");
            sub->add_option("--n-max", hi, "largest size");
        }

        auto resolve() const -> std::pair<int, int>
        {
            if (n && (lo || hi))
                throw InvalidArgument("give either --n or --n-min/--n-max, not both");
            if (n)
                return { *n, *n };
            if (! lo || ! hi)
                throw InvalidArgument("a size range needs both --n-min and --n-max");
            if (*lo > *hi)
                throw InvalidArgument("--n-min exceeds --n-max");
            return { *lo, *hi };
        }
    };

    auto outcome_json(const SolveOutcome & o) -> json
    {
        json j;
        j["feasible"] = o.feasible();
        j["value"] = o.value ? json(*o.value) : json(nullptr);
        j["witness"] = o.witness ? json(o.witness->assignment()) : json(nullptr);
        j["nodes_explored"] = o.nodes_explored;
        j["mode"] = to_string(o.mode);
        return j;
    }

    auto print_table(std::ostream & out, const CsvTable & table) -> void
    {
        std::vector<std::size_t> width(table.header.size(), 0);
        auto measure = [&] (const std::vector<std::string> & row) {
            for (std::size_t i = 0 ; i < row.size() ; ++i)
                width[i] = std::max(width[i], row[i].size());
        };
        measure(table.header);
        for (auto & row : table.rows)
            measure(row);

        auto print = [&] (const std::vector<std::string> & row) {
            for (std::size_t i = 0 ; i < row.size() ; ++i)
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
            out << '\n';
        };
        print(table.header);
        for (auto & row : table.rows)
            print(row);
    }

    enum class Format { text, csv, json };

    struct Flags
    {
        bool csv = false, json = false;

        auto add(CLI::App * sub, bool allow_csv) -> void
        {
            auto j = sub->add_flag("--json", json, "emit JSON");
            if (allow_csv)
                sub->add_flag("--csv", csv, "emit CSV")->excludes(j);
        }

        auto format() const -> Format
        {
            return json ? Format::json : csv ? Format::csv : Format::text;
        }
    };

    auto emit_rows(std::ostream & out, Format format, const RunResult & result, const CsvTable & table) -> void
    {
        switch (format) {
            case Format::json: out << emit_json(result); break;
            case Format::csv:  out << emit_csv(table); break;
            case Format::text: print_table(out, table); break;
        }
    }

    auto cmd_solve(const std::string & file, const std::string & mode_name, bool as_json, std::ostream & out) -> int
    {
        auto d = load<Digraph>(file, parse_digraph);
        auto mode = parse_mode(mode_name);
        auto start = Clock::now();
        auto outcome = chi_d(d, mode);
        auto ms = elapsed_ms(start);

        if (as_json) {
            RunResult result{ "solve", { { "file", file }, { "mode", mode_name } }, outcome_json(outcome) };
            result.outputs["elapsed_ms"] = ms;
            out << emit_json(result);
        }
        else {
            out << "value: " << (outcome.value ? std::to_string(*outcome.value) : "infeasible") << '\n';
            if (outcome.witness)
                out << "witness: " << join(outcome.witness->assignment()) << '\n';
            out << "mode: " << mode_name << '\n';
            out << "nodes: " << outcome.nodes_explored << '\n';
        }
        return exit_ok;
    }

    auto cmd_verify(const std::string & digraph_file, const std::string & coloring_file, const std::string & mode_name,
            bool as_json, std::ostream & out) -> int
    {
        auto d = load<Digraph>(digraph_file, parse_digraph);
        auto c = load<Coloring>(coloring_file, parse_coloring);
        auto mode = parse_mode(mode_name);
        auto verdict = verify(d, c, mode);

        if (as_json) {
            RunResult result{ "verify", { { "digraph", digraph_file }, { "coloring", coloring_file }, { "mode", mode_name } },
                { { "ok", verdict.ok }, { "violations", violations_to_json(verdict.violations) }, { "mode", mode_name } } };
            out << emit_json(result);
        }
        else if (verdict.ok)
            out << "ok\n";
        else {
            out << "not ok\n";
            for (auto & v : verdict.violations) {
                if (auto p = std::get_if<ProperViolation>(&v))
                    out << "properness " << p->arc.first << ' ' << p->arc.second << '\n';
                else
                    out << "domination " << std::get<DominationViolation>(v).vertex << '\n';
            }
        }
        return verdict.ok ? exit_ok : exit_verification_failed;
    }

    auto cmd_sweep(const std::string & family, const Range & range, const std::string & mode_name, Format format,
            unsigned threads, std::ostream & out) -> int
    {
        auto [lo, hi] = range.resolve();
        auto mode = parse_mode(mode_name);
        auto kind = parse_family_kind(family);
        if (kind != FamilyKind::path && kind != FamilyKind::cycle && kind != FamilyKind::star)
            throw InvalidArgument("sweep supports path, cycle and star");

        SweepOptions options;
        options.threads = threads;

        CsvTable table{ { "family", "n", "edges", "orientations", "min", "max", "formula", "match" }, {} };
        RunResult result{ "sweep", { { "family", family }, { "n_min", lo }, { "n_max", hi }, { "mode", mode_name } }, {} };
        result.outputs["mode"] = mode_name;
        result.outputs["rows"] = json::array();

        auto total_start = Clock::now();
        for (int n = lo ; n <= hi ; ++n) {
            auto base = base_graph(FamilySpec{ kind, { n } });
            auto start = Clock::now();
            auto report = sweep(base, mode, options);
            auto ms = elapsed_ms(start);

            int formula = kind == FamilyKind::path ? chi_d_path_formula(n)
                : kind == FamilyKind::cycle ? chi_d_cycle_formula(n) : 2;
            bool match = report.min_value && *report.min_value == formula;

            auto opt = [] (const std::optional<int> & v) { return v ? std::to_string(*v) : std::string("-"); };
            table.rows.push_back({ family, std::to_string(n), std::to_string(base.edge_count()),
                    std::to_string(report.orientation_count()), opt(report.min_value), opt(report.max_value),
                    std::to_string(formula), match ? "true" : "false" });

            json row;
            row["family"] = family;
            row["n"] = n;
            row["edges"] = base.edge_count();
            row["orientations"] = report.orientation_count();
            row["infeasible"] = report.infeasible;
            row["min"] = report.min_value ? json(*report.min_value) : json(nullptr);
            row["max"] = report.max_value ? json(*report.max_value) : json(nullptr);
            json dist = json::object();
            for (auto & [v, count] : report.distribution)
                dist[std::to_string(v)] = count;
            row["distribution"] = dist;
            row["argmin_codes"] = json::array();
            for (auto & c : report.argmin_codes)
                row["argmin_codes"].push_back(c.to_string());
            row["argmax_codes"] = json::array();
            for (auto & c : report.argmax_codes)
                row["argmax_codes"].push_back(c.to_string());
            row["argmin_overflow"] = report.argmin_overflow;
            row["argmax_overflow"] = report.argmax_overflow;
            row["paper_formula"] = formula;
            row["matches_formula"] = match;
            row["elapsed_ms"] = ms;
            result.outputs["rows"].push_back(row);
        }
        result.outputs["elapsed_ms"] = elapsed_ms(total_start);

        emit_rows(out, format, result, table);
        return exit_ok;
    }

    auto cmd_family(const std::string & kind_name, const std::vector<int> & params, bool emit_d, bool emit_w,
            bool as_json, std::ostream & out) -> int
    {
        FamilySpec spec{ parse_family_kind(kind_name), params };
        validate(spec);

        std::optional<ConstructiveWitness> witness;
        if (spec.kind == FamilyKind::path)
            witness = path_optimal(params[0]);
        else if (spec.kind == FamilyKind::cycle)
            witness = cycle_optimal(params[0]);
        else {
            auto d = family_digraph(spec);
            auto outcome = chi_d(d);
            witness.emplace(d, *outcome.witness, *outcome.value);
        }
        std::string source = (spec.kind == FamilyKind::path || spec.kind == FamilyKind::cycle) ? "construction" : "solver";

        if (as_json) {
            RunResult result{ "family", { { "kind", kind_name }, { "params", params } }, {} };
            result.outputs["value"] = witness->claimed_value();
            result.outputs["witness"] = witness->coloring().assignment();
            result.outputs["digraph"] = emit_digraph(witness->digraph());
            result.outputs["out_degrees"] = out_degree_sequence(witness->digraph());
            result.outputs["source"] = source;
            out << emit_json(result);
            return exit_ok;
        }

        if (emit_d)
            out << emit_digraph(witness->digraph());
        if (emit_d && emit_w)
            out << '\n';
        if (emit_w)
            out << emit_coloring(witness->coloring());
        if (! emit_d && ! emit_w) {
            out << "family: " << kind_name << (params.empty() ? "" : " " + join(params)) << '\n';
            out << "vertices: " << witness->digraph().size() << '\n';
            out << "arcs: " << witness->digraph().arc_count() << '\n';
            out << "out-degrees: " << join(out_degree_sequence(witness->digraph())) << '\n';
            out << "value: " << witness->claimed_value() << " (" << source << ")\n";
            out << "witness: " << join(witness->coloring().assignment()) << '\n';
        }
        return exit_ok;
    }

    auto cmd_formulas(const std::string & family, const Range & range, Format format, std::ostream & out) -> int
    {
        auto [lo, hi] = range.resolve();
        auto kind = parse_family_kind(family);
        if (kind != FamilyKind::path && kind != FamilyKind::cycle)
            throw InvalidArgument("formulas supports path and cycle");

        CsvTable table{ { "family", "n", "min_chi_d", "max_chi_d", "spread", "printed_sigma_star" }, {} };
        RunResult result{ "formulas", { { "family", family }, { "n_min", lo }, { "n_max", hi } }, { { "rows", json::array() } } };
        for (int n = lo ; n <= hi ; ++n) {
            int low = kind == FamilyKind::path ? chi_d_path_formula(n) : chi_d_cycle_formula(n);
            std::optional<int> printed;
            if (n >= 4)
                printed = kind == FamilyKind::path ? printed_sigma_star_path(n) : printed_sigma_star_cycle(n);

            table.rows.push_back({ family, std::to_string(n), std::to_string(low), std::to_string(n),
                    std::to_string(n - low), printed ? std::to_string(*printed) : "" });
            result.outputs["rows"].push_back({ { "n", n }, { "paper_formula", low }, { "max_chi_d", n },
                    { "spread", n - low }, { "printed_sigma_star", printed ? json(*printed) : json(nullptr) } });
        }
        emit_rows(out, format, result, table);
        return exit_ok;
    }

    auto cmd_invariants(const std::string & file, const std::string & base_file, bool star, const std::string & mode_name,
            bool as_json, std::ostream & out) -> int
    {
        auto mode = parse_mode(mode_name);
        if (file.empty() == base_file.empty())
            throw InvalidArgument("give either a digraph file or --base <file> --star");

        if (! file.empty()) {
            auto d = load<Digraph>(file, parse_digraph);
            auto report = sigma(d, mode);
            if (as_json)
                out << emit_json({ "invariants", { { "file", file }, { "mode", mode_name } },
                        { { "sigma", report.sigma_definitional }, { "chi_d", report.chi_d_value }, { "chi", report.chi_value },
                          { "mode", mode_name } } });
            else
                out << "chi_d: " << report.chi_d_value << "\nchi: " << report.chi_value << "\nsigma: " << report.sigma_definitional << '\n';
            return exit_ok;
        }

        if (! star)
            throw InvalidArgument("--base requires --star");
        auto base = load<BaseGraph>(base_file, parse_base);
        auto report = sigma_star(base, mode);
        bool agrees = report.printed_table_value && *report.printed_table_value == report.sigma_star_definitional;

        if (as_json) {
            RunResult result{ "invariants", { { "base", base_file }, { "star", true }, { "mode", mode_name } }, {} };
            result.outputs["sigma_star_definitional"] = report.sigma_star_definitional;
            result.outputs["orientation_spread"] = report.orientation_spread;
            result.outputs["min_chi_d"] = report.min_chi_d;
            result.outputs["max_chi_d"] = report.max_chi_d;
            result.outputs["chi"] = report.chi_value;
            result.outputs["printed_table_value"] = report.printed_table_value ? json(*report.printed_table_value) : json(nullptr);
            result.outputs["printed_matches_definitional"] = agrees;
            result.outputs["printed_matches_spread"] = report.printed_table_value && *report.printed_table_value == report.orientation_spread;
            result.outputs["mode"] = mode_name;
            out << emit_json(result);
        }
        else {
            out << "sigma_star_definitional: " << report.sigma_star_definitional << '\n';
            out << "orientation_spread: " << report.orientation_spread << '\n';
            out << "min_chi_d: " << report.min_chi_d << "\nmax_chi_d: " << report.max_chi_d << "\nchi: " << report.chi_value << '\n';
            if (report.printed_table_value) {
                out << "printed_table_value: " << *report.printed_table_value << '\n';
                if (! agrees)
                    out << "note: printed table value " << *report.printed_table_value
                        << " differs from the definitional value " << report.sigma_star_definitional
                        << (*report.printed_table_value == report.orientation_spread ? " and equals the orientation spread" : "") << '\n';
            }
        }
        return exit_ok;
    }

    auto cmd_mine(const std::string & family, const Range & range, const std::string & mode_name, Format format, std::ostream & out) -> int
    {
        auto [lo, hi] = range.resolve();
        auto mode = parse_mode(mode_name);
        if (parse_family_kind(family) != FamilyKind::tilde_cycle)
            throw InvalidArgument("mine-discrepancy supports the tilde-cycle family");
        if (lo < 3)
            throw InvalidArgument("tilde-cycle needs n >= 3");

        CsvTable table{ { "n", "chi_d_host", "chi_d_sub", "delta" }, {} };
        RunResult result{ "mine-discrepancy", { { "family", family }, { "n_min", lo }, { "n_max", hi }, { "mode", mode_name } },
            { { "rows", json::array() }, { "mode", mode_name } } };
        for (int n = lo ; n <= hi ; ++n) {
            auto host = tilde_cycle(n);
            auto sub = directed_cycle(n);
            auto host_value = chi_d(host, mode).value;
            auto sub_value = chi_d(sub, mode).value;
            if (! host_value || ! sub_value)
                throw Infeasible("tilde-cycle instance has no dominator coloring in " + mode_name + " mode");
            int delta = discrepancy(host, sub, Embedding::identity(n), mode);
            table.rows.push_back({ std::to_string(n), std::to_string(*host_value), std::to_string(*sub_value), std::to_string(delta) });
            result.outputs["rows"].push_back({ { "n", n }, { "chi_d_host", *host_value }, { "chi_d_sub", *sub_value }, { "delta", delta } });
        }
        emit_rows(out, format, result, table);
        return exit_ok;
    }
}

auto domchrom::run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Exact dominator colorings of digraphs", "domchrom" };
    app.require_subcommand(1);

    std::string mode = "sink-exempt";
    Flags flags;
    Range range;
    unsigned threads = 0;

    std::string digraph_file, coloring_file, base_file, family, kind;
    std::vector<int> params;
    bool emit_d = false, emit_w = false, star = false;

    auto solve = app.add_subcommand("solve", "exact dominator chromatic number of a digraph file");
    solve->add_option("digraph", digraph_file)->required();
    mode_option(solve, mode);
    flags.add(solve, false);

    auto check = app.add_subcommand("verify", "check a coloring file against a digraph file");
    check->add_option("digraph", digraph_file)->required();
    check->add_option("coloring", coloring_file)->required();
    mode_option(check, mode);
    flags.add(check, false);

    auto sw = app.add_subcommand("sweep", "solve every orientation of path, cycle or star bases");
    sw->add_option("family", family)->required()->check(CLI::IsMember({ "path", "cycle", "star" }));
    range.add(sw, true);
    mode_option(sw, mode);
    flags.add(sw, true);
    sw->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto fam = app.add_subcommand("family", "generate a family digraph and its witness coloring");
    fam->add_option("kind", kind)->required();
    fam->add_option("params", params);
    fam->add_flag("--emit-digraph", emit_d, "print the digraph file");
    fam->add_flag("--emit-witness", emit_w, "print the coloring file");
    flags.add(fam, false);

    auto form = app.add_subcommand("formulas", "closed-form minimum table for paths or cycles");
    form->add_option("family", family)->required()->check(CLI::IsMember({ "path", "cycle" }));
    range.add(form, false);
    flags.add(form, true);

    auto inv = app.add_subcommand("invariants", "sigma of a digraph, or sigma-star of a base graph");
    inv->add_option("digraph", digraph_file);
    inv->add_option("--base", base_file, "base graph file");
    inv->add_flag("--star", star, "report orientation-level quantities");
    mode_option(inv, mode);
    flags.add(inv, false);

    auto mine = app.add_subcommand("mine-discrepancy", "discrepancy table for the tilde-cycle family");
    mine->add_option("--family", family)->required();
    range.add(mine, false);
    mode_option(mine, mode);
    flags.add(mine, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve)
            return cmd_solve(digraph_file, mode, flags.json, out);
        if (*check)
            return cmd_verify(digraph_file, coloring_file, mode, flags.json, out);
        if (*sw)
            return cmd_sweep(family, range, mode, flags.format(), threads, out);
        if (*fam)
            return cmd_family(kind, params, emit_d, emit_w, flags.json, out);
        if (*form)
            return cmd_formulas(family, range, flags.format(), out);
        if (*inv)
            return cmd_invariants(digraph_file, base_file, star, mode, flags.json, out);
        if (*mine)
            return cmd_mine(family, range, mode, flags.format(), out);
    }
    catch (const GuardExceeded & e) {
        err << "error: " << e.what() << '\n';
        return exit_guard;
    }
    catch (const Infeasible & e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
