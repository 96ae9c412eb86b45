#include <domchrom/errors.hh>
#include <domchrom/families.hh>
#include <domchrom/invariants.hh>

#include <gtest/gtest.h>

using namespace domchrom;

TEST(Sigma, Examples)
{
    for (int n = 1 ; n <= 5 ; ++n)
        EXPECT_EQ(sigma(random_tournament(n, 1)).sigma_definitional, 0);
    EXPECT_EQ(sigma(one_way_complete_bipartite(2, 3)).sigma_definitional, 0);

    auto p6 = sigma(directed_path(6));
    EXPECT_EQ(p6.chi_d_value, 6);
    EXPECT_EQ(p6.chi_value, 2);
    EXPECT_EQ(p6.sigma_definitional, 4);
}

TEST(Sigma, InfeasibleInStrictMode)
{
    EXPECT_THROW(sigma(directed_path(3), DominationMode::strict), Infeasible);
    EXPECT_EQ(sigma(directed_cycle(4), DominationMode::strict).sigma_definitional, 2);
}

TEST(Sigma, Nonnegative)
{
    for (std::uint64_t i = 0 ; i < 64 ; ++i)
        EXPECT_GE(sigma(tournament_from_index(4, i)).sigma_definitional, 0);
    for (int n = 3 ; n <= 9 ; ++n)
        EXPECT_GE(sigma(tilde_cycle(n)).sigma_definitional, 0);
}

TEST(SigmaStar, PathEight)
{
    auto report = sigma_star(path_base(8));
    EXPECT_EQ(report.orientation_spread, 4);
    EXPECT_EQ(report.printed_table_value, 4);
    EXPECT_EQ(report.sigma_star_definitional, 6);
    EXPECT_EQ(report.min_chi_d, 4);
    EXPECT_EQ(report.max_chi_d, 8);
    EXPECT_EQ(report.chi_value, 2);
}

TEST(SigmaStar, CycleNine)
{
    auto report = sigma_star(cycle_base(9));
    EXPECT_EQ(report.orientation_spread, 4);
    EXPECT_EQ(report.printed_table_value, 4);
}

TEST(SigmaStar, DefinitionalBoundsSpread)
{
    for (auto base : { path_base(5), cycle_base(5), cycle_base(7), base_graph({ FamilyKind::star, { 4 } }) }) {
        auto report = sigma_star(base);
        EXPECT_GE(report.sigma_star_definitional, report.orientation_spread);
        EXPECT_GE(report.orientation_spread, 0);
    }
    EXPECT_FALSE(sigma_star(base_graph({ FamilyKind::star, { 4 } })).printed_table_value);
    EXPECT_FALSE(sigma_star(path_base(3)).printed_table_value);
}

TEST(PrintedTables, Examples)
{
    EXPECT_EQ(printed_sigma_star_path(12), 7);
    EXPECT_EQ(printed_sigma_star_path(7), 3);
    EXPECT_EQ(printed_sigma_star_cycle(10), 5);
    EXPECT_THROW(printed_sigma_star_path(3), InvalidArgument);
    EXPECT_THROW(printed_sigma_star_cycle(3), InvalidArgument);
}

TEST(ShapeQueries, PathAndCycle)
{
    EXPECT_TRUE(is_path_graph(path_base(1)));
    EXPECT_TRUE(is_path_graph(path_base(6)));
    EXPECT_TRUE(is_path_graph(BaseGraph(3, { { 0, 2 }, { 1, 2 } })));
    EXPECT_FALSE(is_path_graph(cycle_base(5)));
    EXPECT_TRUE(is_cycle_graph(cycle_base(5)));
    EXPECT_FALSE(is_cycle_graph(path_base(5)));
    EXPECT_FALSE(is_cycle_graph(BaseGraph(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 }, { 4, 5 }, { 3, 5 } })));
}

TEST(IsSubdigraph, Examples)
{
    EXPECT_TRUE(is_subdigraph(tilde_cycle(6), directed_cycle(6), Embedding::identity(6)));
    EXPECT_TRUE(is_subdigraph(directed_cycle(4), directed_path(4), Embedding::identity(4)));
    EXPECT_FALSE(is_subdigraph(directed_path(4), directed_cycle(4), Embedding::identity(4)));
    EXPECT_FALSE(is_subdigraph(directed_cycle(4), reverse(directed_path(4)), Embedding::identity(4)));
    EXPECT_FALSE(is_subdigraph(directed_cycle(4), directed_path(2), Embedding{ { 0, 0 } }));
    EXPECT_FALSE(is_subdigraph(directed_cycle(4), directed_path(2), Embedding{ { 0, 7 } }));
    EXPECT_TRUE(is_subdigraph(directed_cycle(4), directed_path(2), Embedding{ { 3, 0 } }));
    EXPECT_THROW(is_subdigraph(directed_cycle(4), directed_path(2), Embedding{ { 0 } }), InvalidArgument);
}

TEST(Discrepancy, Examples)
{
    EXPECT_EQ(discrepancy(tilde_cycle(6), directed_cycle(6), Embedding::identity(6)), 3);
    EXPECT_EQ(discrepancy(directed_cycle(4), directed_path(4), Embedding::identity(4)), 0);
    EXPECT_EQ(discrepancy(tilde_cycle(8), directed_cycle(8), Embedding::identity(8)), 5);
    EXPECT_THROW(discrepancy(directed_path(4), directed_cycle(4), Embedding::identity(4)), InvalidArgument);
    EXPECT_THROW(discrepancy(directed_cycle(4), directed_path(4), Embedding::identity(4), DominationMode::strict), Infeasible);
}

TEST(Discrepancy, TildeFamily)
{
    for (int n = 6 ; n <= 10 ; ++n)
        EXPECT_EQ(discrepancy(tilde_cycle(n), directed_cycle(n), Embedding::identity(n)), n % 2 ? n - 4 : n - 3) << "n = " << n;
}
