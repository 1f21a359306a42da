#include <gtest/gtest.h>

#include <map>
#include <set>

#include "catbij/tableau.hpp"
#include "catbij/word.hpp"
#include "oracles.hpp"

using namespace catbij;

namespace {
Tableau tau1() { return Tableau({{1, 3}, {2, 4}, {5, 6}, {7}}); }
Tableau tau2() { return Tableau({{1, 3}, {2, 6}, {4, 7}, {5}}); }
Tableau column(int n)
{
    std::vector<Tableau::Row> rows;
    for (int v = 1; v <= n; ++v) rows.push_back({v});
    return Tableau(rows);
}
} // namespace

TEST(Tableaux, Validation)
{
    EXPECT_THROW(Tableau({{1, 3}, {2, 4, 5}}), InvalidInput);   // row grows upward
    EXPECT_THROW(Tableau({{2, 1}}), InvalidInput);              // row decreases
    EXPECT_THROW(Tableau({{2, 3}, {1}}), InvalidInput);         // column decreases
    EXPECT_THROW(Tableau({{1, 2}, {4}}), InvalidInput);         // missing 3
    EXPECT_THROW(Tableau({{1, 1}}), InvalidInput);
    EXPECT_THROW(Tableau({{1}, {}}), InvalidInput);
    EXPECT_NO_THROW(Tableau({{1, 2, 4}, {3, 5}, {6}}));
}

TEST(Tableaux, DescentSetAndMaj)
{
    EXPECT_EQ(descent_set(tau1()), (PositionSet{1, 3, 4, 6}));
    EXPECT_EQ(maj(tau1()), 14);
    EXPECT_EQ(descent_set(tau2()), (PositionSet{1, 3, 4, 6}));
    EXPECT_TRUE(descent_set(Tableau({{1, 2, 3, 4}})).empty());
    EXPECT_EQ(maj(Tableau({{1, 2, 3, 4}})), 0);
    EXPECT_EQ(descent_set(column(5)), (PositionSet{1, 2, 3, 4}));
    EXPECT_EQ(maj(column(4)), 6);
}

TEST(Tableaux, EnumerateTDExample)
{
    const auto td = enumerate_T_D(TwoColClass{7, 3, {1, 3, 4, 6}});
    ASSERT_EQ(td.size(), 2U);
    EXPECT_TRUE((td[0] == tau1() && td[1] == tau2()) || (td[0] == tau2() && td[1] == tau1()));

    const auto row = enumerate_T_D(TwoColClass{3, 0, {}});
    EXPECT_TRUE(row.empty()); // j = 0 means one column: descents {1,2}
    const auto col = enumerate_T_D(TwoColClass{3, 0, {1, 2}});
    ASSERT_EQ(col.size(), 1U);
    EXPECT_EQ(col[0], column(3));

    // Filter oracle over all two-column tableaux of 4 entries with j = 2.
    std::vector<std::vector<std::vector<int>>> expected;
    for (const auto& rows : oracle::two_col_tableaux(4, 2))
        if (oracle::tableau_descents(rows, 4) == std::vector<int>{1, 3}) expected.push_back(rows);
    ASSERT_EQ(expected.size(), 1U);
    const auto got = enumerate_T_D(TwoColClass{4, 2, {1, 3}});
    ASSERT_EQ(got.size(), 1U);
    EXPECT_EQ(got[0].rows(), expected[0]);
}

TEST(Tableaux, EnumerateTwoColumn)
{
    const auto one = enumerate_two_col(2, 1);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0], Tableau({{1, 2}}));
    EXPECT_EQ(enumerate_two_col(4, 2).size(), 2U);
    EXPECT_EQ(enumerate_two_col(7, 3).size(), enumerate_halfwords(7, 3).size());
    EXPECT_THROW(enumerate_two_col(4, 3), InvalidInput);
}

TEST(Tableaux, TwoColumnMatchesPlacementOracle)
{
    for (int n = 0; n <= 8; ++n)
        for (int j = 0; 2 * j <= n; ++j) {
            const auto got = enumerate_two_col(n, j);
            std::vector<std::vector<std::vector<int>>> rows;
            for (const auto& t : got) {
                rows.push_back(t.rows());
                EXPECT_EQ(t.column_length(1), j);
            }
            std::sort(rows.begin(), rows.end());
            EXPECT_EQ(rows, oracle::two_col_tableaux(n, j)) << "n=" << n << " j=" << j;
            EXPECT_EQ(got.size(), enumerate_halfwords(n, j).size());
        }
}

TEST(Tableaux, EveryTwoColumnTableauIsInExactlyOneClass)
{
    for (int n = 1; n <= 9; ++n)
        for (int j = 0; 2 * j <= n; ++j) {
            std::map<PositionSet, std::size_t> sizes;
            for (const auto& t : enumerate_two_col(n, j)) ++sizes[descent_set(t)];
            std::size_t total = 0;
            for (const auto& [d, size] : sizes) {
                EXPECT_EQ(enumerate_T_D(TwoColClass{n, j, d}).size(), size);
                total += size;
            }
            EXPECT_EQ(total, enumerate_two_col(n, j).size());
        }
}

TEST(Tableaux, SectionContinuations)
{
    // tau1: ascents {2,5}; after 2 the entry 4 continues the right column,
    // after 5 the entry 7 goes left.
    EXPECT_EQ(section_continuations(tau1()), (std::vector<int>{1, 0}));
    EXPECT_EQ(section_continuations(tau2()), (std::vector<int>{0, 1}));
    EXPECT_THROW(section_continuations(Tableau({{1, 2, 3}})), InvalidInput);
}
