#include <domchrom/errors.hh>
#include <domchrom/io.hh>

#include <charconv>
#include <set>
#include <sstream>

using namespace domchrom;

namespace
{
    struct Line
    {
        int number;
        std::vector<std::string_view> tokens;
    };

    auto tokenise(std::string_view text) -> std::vector<Line>
    {
        std::vector<Line> result;
        int number = 0;
        while (! text.empty()) {
            ++number;
            auto end = text.find('\n');
            auto line = text.substr(0, end);
            text = (end == std::string_view::npos) ? std::string_view{} : text.substr(end + 1);

            Line parsed{ number, {} };
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                auto start = pos;
                while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                if (pos > start)
                    parsed.tokens.push_back(line.substr(start, pos - start));
            }
            if (! parsed.tokens.empty())
                result.push_back(std::move(parsed));
        }
        return result;
    }

    auto to_int(const Line & line, std::string_view token) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line.number, "non-integer token '" + std::string(token) + "'");
        return value;
    }

    /// Header line: keyword followed by `arity` nonnegative integers.
    auto header(const std::vector<Line> & lines, std::string_view keyword, std::size_t arity) -> std::vector<int>
    {
        if (lines.empty())
            throw ParseError(1, "missing '" + std::string(keyword) + "' header");
        auto & first = lines.front();
        if (first.tokens[0] != keyword || first.tokens.size() != arity + 1)
            throw ParseError(first.number, "malformed header, expected '" + std::string(keyword) + "' and "
                    + std::to_string(arity) + " integer(s)");

        std::vector<int> result;
        for (std::size_t i = 1 ; i <= arity ; ++i) {
            int v = to_int(first, first.tokens[i]);
            if (v < 0)
                throw ParseError(first.number, "negative count in header");
            result.push_back(v);
        }
        return result;
    }

    auto pairs(const std::vector<Line> & lines, std::vector<int> & line_of) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (std::size_t i = 1 ; i < lines.size() ; ++i) {
            auto & line = lines[i];
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected two integers");
            result.emplace_back(to_int(line, line.tokens[0]), to_int(line, line.tokens[1]));
            line_of.push_back(line.number);
        }
        return result;
    }
}

auto domchrom::parse_digraph(std::string_view text) -> Digraph
{
    auto lines = tokenise(text);
    int n = header(lines, "digraph", 1)[0];
    std::vector<int> line_of;
    auto arcs = pairs(lines, line_of);
    if (auto issue = find_arc_issue(n, arcs))
        throw ParseError(line_of.at(issue->index), issue->rule);
    return make_digraph(n, std::move(arcs));
}

auto domchrom::parse_base(std::string_view text) -> BaseGraph
{
    auto lines = tokenise(text);
    int n = header(lines, "graph", 1)[0];
    std::vector<int> line_of;
    auto edges = pairs(lines, line_of);
    if (auto issue = find_edge_issue(n, edges))
        throw ParseError(line_of.at(issue->index), issue->rule);
    for (std::size_t i = 0 ; i < edges.size() ; ++i)
        if (edges[i].first > edges[i].second)
            throw ParseError(line_of[i], "edge endpoints must be written with u < v");
    return BaseGraph{ n, std::move(edges) };
}

auto domchrom::parse_coloring(std::string_view text) -> Coloring
{
    auto lines = tokenise(text);
    auto h = header(lines, "coloring", 2);
    int n = h[0], k = h[1];

    std::vector<int> line_of;
    auto entries = pairs(lines, line_of);
    std::vector<int> raw(n, -1);
    std::set<int> used;
    for (std::size_t i = 0 ; i < entries.size() ; ++i) {
        auto [v, c] = entries[i];
        if (v < 0 || v >= n)
            throw ParseError(line_of[i], "vertex out of range");
        if (c < 0 || c >= k)
            throw ParseError(line_of[i], "color out of range");
        if (raw[v] != -1)
            throw ParseError(line_of[i], "vertex colored twice");
        raw[v] = c;
        used.insert(c);
    }

    int end_line = lines.empty() ? 1 : lines.back().number;
    for (int v = 0 ; v < n ; ++v)
        if (raw[v] == -1)
            throw ParseError(end_line, "vertex " + std::to_string(v) + " has no color");
    if (static_cast<int>(used.size()) != k)
        throw ParseError(lines.front().number, "header declares " + std::to_string(k) + " classes but "
                + std::to_string(used.size()) + " are used");
    return canonicalize(raw);
}

auto domchrom::emit_digraph(const Digraph & d) -> std::string
{
    std::ostringstream out;
    out << "digraph " << d.size() << '\n';
    for (auto & [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto domchrom::emit_base(const BaseGraph & g) -> std::string
{
    std::ostringstream out;
    out << "graph " << g.size() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto domchrom::emit_coloring(const Coloring & c) -> std::string
{
    std::ostringstream out;
    out << "coloring " << c.size() << ' ' << c.classes() << '\n';
    for (Vertex v = 0 ; v < c.size() ; ++v)
        out << v << ' ' << c[v] << '\n';
    return out.str();
}

auto domchrom::emit_json(const RunResult & result) -> std::string
{
    nlohmann::json j = result.outputs.is_object() ? result.outputs : nlohmann::json::object();
    j["command"] = result.command;
    j["inputs"] = result.inputs;
    return j.dump(2) + "\n";
}

auto domchrom::parse_run_result(std::string_view text) -> RunResult
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (! j.is_object() || ! j.contains("command") || ! j["command"].is_string())
        throw ParseError(1, "run result needs a string 'command'");

    RunResult result;
    result.command = j["command"].get<std::string>();
    if (j.contains("inputs"))
        result.inputs = j["inputs"];
    j.erase("command");
    j.erase("inputs");
    result.outputs = std::move(j);
    return result;
}

namespace
{
    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"')
                quoted.push_back('"');
            quoted.push_back(ch);
        }
        quoted.push_back('"');
        return quoted;
    }

    auto csv_row(const std::vector<std::string> & row) -> std::string
    {
        std::string line;
        for (std::size_t i = 0 ; i < row.size() ; ++i) {
            if (i)
                line.push_back(',');
            line += csv_field(row[i]);
        }
        line.push_back('\n');
        return line;
    }
}

auto domchrom::emit_csv(const CsvTable & table) -> std::string
{
    std::string result = csv_row(table.header);
    for (auto & row : table.rows)
        result += csv_row(row);
    return result;
}

auto domchrom::violations_to_json(const std::vector<Violation> & violations) -> nlohmann::json
{
    auto result = nlohmann::json::array();
    for (auto & v : violations) {
        if (auto p = std::get_if<ProperViolation>(&v))
            result.push_back({ { "kind", "properness" }, { "arc", { p->arc.first, p->arc.second } } });
        else
            result.push_back({ { "kind", "domination" }, { "vertex", std::get<DominationViolation>(v).vertex } });
    }
    return result;
}
