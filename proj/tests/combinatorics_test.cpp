#include <rw/combinatorics.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace rw;

TEST(Binomial, SmallValues)
{
    EXPECT_EQ(binomial(9, 3), 84U);
    EXPECT_EQ(binomial(35, 7), 6724520U);
    EXPECT_EQ(binomial(4, 0), 1U);
    EXPECT_EQ(binomial(3, 4), 0U);
    EXPECT_EQ(binomial(200, 100), saturated);
}

TEST(Combinations, LexicographicOrderMatchesBitmaskEnumeration)
{
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<Subset> mine;
            Subset c = first_combination(k);
            do
                mine.push_back(c);
            while (next_combination(c, n));
            EXPECT_EQ(mine, oracle::all_subsets(n, k)) << "n=" << n << " k=" << k;
        }
}

TEST(SubsetRanker, RankAndUnrankAgreeWithEnumerationIndex)
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            SubsetRanker ranker(n, k);
            auto all = oracle::all_subsets(n, k);
            ASSERT_EQ(ranker.count(), all.size());
            for (std::size_t i = 0; i < all.size(); ++i) {
                EXPECT_EQ(ranker.rank(all[i]), i);
                EXPECT_EQ(ranker.unrank(i), all[i]);
            }
        }
}

TEST(SubsetRanker, Validity)
{
    SubsetRanker r(5, 3);
    EXPECT_TRUE(r.valid(Subset{1, 3, 5}));
    EXPECT_FALSE(r.valid(Subset{1, 3}));
    EXPECT_FALSE(r.valid(Subset{3, 1, 5}));
    EXPECT_FALSE(r.valid(Subset{1, 3, 6}));
    EXPECT_THROW(r.unrank(10), ParameterError);
    EXPECT_THROW(SubsetRanker(3, 4), ParameterError);
}

TEST(ForEachSubsetOf, MapsPositionsThroughGround)
{
    std::vector<int> ground{2, 4, 6, 8};
    std::vector<Subset> seen;
    for_each_subset_of(ground, 2, [&](const Subset & s) {
        seen.push_back(s);
        return true;
    });
    std::vector<Subset> expected{{2, 4}, {2, 6}, {2, 8}, {4, 6}, {4, 8}, {6, 8}};
    EXPECT_EQ(seen, expected);
}
