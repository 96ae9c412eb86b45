#include <domchrom/errors.hh>
#include <domchrom/families.hh>
#include <domchrom/io.hh>
#include <domchrom/solver.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace domchrom;

namespace
{
    auto parse_error_line(auto && f) -> int
    {
        try {
            f();
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    }
}

TEST(ParseDigraph, DirectedPath)
{
    EXPECT_EQ(parse_digraph("digraph 3\n0 1\n1 2\n"), directed_path(3));
}

TEST(ParseDigraph, DigonAtLineThree)
{
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph 2\n0 1\n1 0\n"); }), 3);
    try {
        parse_digraph("digraph 2\n0 1\n1 0\n");
    }
    catch (const ParseError & e) {
        EXPECT_NE(std::string(e.what()).find("digon"), std::string::npos);
    }
}

TEST(ParseDigraph, Errors)
{
    EXPECT_EQ(parse_error_line([] { parse_digraph("graph 2\n0 1\n"); }), 1);
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph x\n"); }), 1);
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph 3\n0 1\n1 z\n"); }), 3);
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph 3\n0 1 2\n"); }), 2);
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph 3\n0 3\n"); }), 2);
    EXPECT_EQ(parse_error_line([] { parse_digraph("digraph 3\n\n0 0\n"); }), 3);
    EXPECT_EQ(parse_error_line([] { parse_digraph(""); }), 1);
}

TEST(ParseBase, RequiresAscendingEdges)
{
    EXPECT_EQ(parse_base("graph 3\n0 1\n1 2\n"), path_base(3));
    EXPECT_EQ(parse_error_line([] { parse_base("graph 3\n1 0\n"); }), 2);
    EXPECT_EQ(parse_error_line([] { parse_base("graph 3\n0 1\n0 1\n"); }), 3);
}

TEST(ParseColoring, Example)
{
    EXPECT_EQ(parse_coloring("coloring 4 3\n0 0\n1 1\n2 0\n3 2\n").assignment(), (std::vector<int>{ 0, 1, 0, 2 }));
    EXPECT_EQ(parse_coloring("coloring 3 2\n2 0\n0 1\n1 1\n").assignment(), (std::vector<int>{ 0, 0, 1 }));
}

TEST(ParseColoring, Errors)
{
    EXPECT_EQ(parse_error_line([] { parse_coloring("coloring 2 2\n0 0\n"); }), 2);
    EXPECT_EQ(parse_error_line([] { parse_coloring("coloring 2 3\n0 0\n1 1\n"); }), 1);
    EXPECT_EQ(parse_error_line([] { parse_coloring("coloring 2 2\n0 0\n0 1\n"); }), 3);
    EXPECT_EQ(parse_error_line([] { parse_coloring("coloring 2 2\n0 0\n1 2\n"); }), 3);
}

TEST(RoundTrip, ParseOfEmitIsIdentity)
{
    std::mt19937_64 rng(23);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto d = make_digraph(n, oracle::random_connected_digraph(n, rng));
        auto text = emit_digraph(d);
        EXPECT_EQ(parse_digraph(text), d);
        EXPECT_EQ(emit_digraph(parse_digraph(text)), text);

        auto g = underlying(d);
        EXPECT_EQ(parse_base(emit_base(g)), g);
        EXPECT_EQ(emit_base(parse_base(emit_base(g))), emit_base(g));

        std::vector<int> raw(n);
        for (auto & r : raw)
            r = static_cast<int>(rng() % 4);
        auto c = canonicalize(raw);
        EXPECT_EQ(parse_coloring(emit_coloring(c)), c);
        EXPECT_EQ(emit_coloring(parse_coloring(emit_coloring(c))), emit_coloring(c));
    }
}

TEST(RoundTrip, NormalisesWhitespace)
{
    auto d = parse_digraph("digraph  3\r\n0\t1\n\n1   2\n");
    EXPECT_EQ(emit_digraph(d), "digraph 3\n0 1\n1 2\n");
}

TEST(EmitJson, SolveResult)
{
    auto c4 = make_digraph(4, { { 1, 0 }, { 1, 2 }, { 3, 2 }, { 3, 0 } });
    auto outcome = chi_d(c4);
    RunResult result{ "solve", { { "file", "c4.txt" } }, { { "value", *outcome.value }, { "witness", outcome.witness->assignment() } } };
    auto text = emit_json(result);
    EXPECT_NE(text.find("\"value\": 2"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(parse_run_result(text), result);
    EXPECT_LT(text.find("\"command\""), text.find("\"inputs\""));
    EXPECT_LT(text.find("\"inputs\""), text.find("\"value\""));
}

TEST(EmitJson, ViolationsNonEmpty)
{
    auto verdict = verify(directed_path(3), Coloring({ 0, 0, 1 }));
    auto j = violations_to_json(verdict.violations);
    ASSERT_FALSE(j.empty());
    EXPECT_EQ(j[0]["kind"], "properness");
    EXPECT_EQ(j[0]["arc"], nlohmann::json::array({ 0, 1 }));
    EXPECT_EQ(j.back()["kind"], "domination");
}

TEST(EmitCsv, SweepMinColumn)
{
    CsvTable table{ { "family", "n", "min" }, {} };
    for (int n = 4 ; n <= 7 ; ++n)
        table.rows.push_back({ "path", std::to_string(n), std::to_string(*sweep(path_base(n)).min_value) });
    EXPECT_EQ(emit_csv(table), "family,n,min\npath,4,3\npath,5,3\npath,6,3\npath,7,4\n");
}

TEST(EmitCsv, Quoting)
{
    CsvTable table{ { "a", "b" }, { { "x,y", "say \"hi\"" } } };
    EXPECT_EQ(emit_csv(table), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}
