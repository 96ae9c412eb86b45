#pragma once

#include <domchrom/coloring.hh>
#include <domchrom/digraph.hh>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace domchrom
{
    /**
     * Text formats, one record per LF-terminated line, tokens separated by
     * whitespace, vertices 0-based:
     *
     *   digraph <n>        graph <n>          coloring <n> <k>
     *   <u> <v>            <u> <v>   (u < v)  <v> <c>
     *
     * Blank lines are ignored. Every parse error is a ParseError carrying the
     * 1-based line number.
     */
    auto parse_digraph(std::string_view text) -> Digraph;
    auto parse_base(std::string_view text) -> BaseGraph;

    /// Labels may be any of 0..k-1 provided all k are used; the result is canonical.
    auto parse_coloring(std::string_view text) -> Coloring;

    auto emit_digraph(const Digraph & d) -> std::string;
    auto emit_base(const BaseGraph & g) -> std::string;
    auto emit_coloring(const Coloring & c) -> std::string;

    /**
     * One CLI invocation. Serialised as a single JSON object holding
     * "command", "inputs" and every key of outputs at top level, so
     * outputs must not itself use "command" or "inputs".
     */
    struct RunResult
    {
        std::string command;
        nlohmann::json inputs = nlohmann::json::object();
        nlohmann::json outputs = nlohmann::json::object();

        friend auto operator== (const RunResult &, const RunResult &) -> bool = default;
    };

    /// Sorted keys, two-space indent, trailing newline.
    auto emit_json(const RunResult & result) -> std::string;
    auto parse_run_result(std::string_view text) -> RunResult;

    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    /// RFC 4180 quoting where needed, LF line endings.
    auto emit_csv(const CsvTable & table) -> std::string;

    auto violations_to_json(const std::vector<Violation> & violations) -> nlohmann::json;
}
