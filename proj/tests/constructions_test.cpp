#include <rw/constructions.hpp>
#include <rw/graph_core.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace rw;

TEST(CompleteBipartite, Shapes)
{
    auto k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.edge_count(), 9U);
    EXPECT_TRUE(k33.is_complete());
    EXPECT_EQ(complete_bipartite(1, 1).edge_count(), 1U);

    auto k46 = complete_bipartite(4, 6);
    EXPECT_EQ(k46.edge_count(), 24U);
    for (int l = 1; l <= 4; ++l) {
        int degree = 0;
        for (int r = 1; r <= 6; ++r)
            degree += k46.has_edge(l, r);
        EXPECT_EQ(degree, 6);
    }
    EXPECT_THROW(complete_bipartite(0, 3), ParameterError);
    EXPECT_THROW(complete_bipartite(2, -1), ParameterError);
}

TEST(SetBipartite, B42)
{
    auto g = set_bipartite(4, 2);
    EXPECT_EQ(g.left_count(), 4);
    EXPECT_EQ(g.right_count(), 6);
    EXPECT_EQ(g.edge_count(), 12U);
    std::vector<Subset> labels;
    for (int r = 1; r <= 6; ++r)
        labels.emplace_back(g.right_label(r).begin(), g.right_label(r).end());
    EXPECT_EQ(labels, (std::vector<Subset>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    for (int l = 1; l <= 4; ++l) {
        int degree = 0;
        for (int r = 1; r <= 6; ++r)
            degree += g.has_edge(l, r);
        EXPECT_EQ(degree, 3);
    }
    EXPECT_TRUE(g.is_set_graph(2));
}

TEST(SetBipartite, SingletonsGiveAPerfectMatching)
{
    auto g = set_bipartite(5, 1);
    EXPECT_EQ(g.edge_count(), 5U);
    for (int l = 1; l <= 5; ++l)
        for (int r = 1; r <= 5; ++r)
            EXPECT_EQ(g.has_edge(l, r), l == r);
}

TEST(SetBipartite, CountsAgainstEnumeration)
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            auto g = set_bipartite(n, k);
            auto all = oracle::all_subsets(n, k);
            ASSERT_EQ(static_cast<std::size_t>(g.right_count()), all.size());
            EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(k) * all.size());
            for (int l = 1; l <= n; ++l) {
                std::size_t degree = 0;
                for (int r = 1; r <= g.right_count(); ++r)
                    degree += g.has_edge(l, r);
                auto containing = static_cast<std::size_t>(std::ranges::count_if(all, [&](const auto & s) { return std::ranges::find(s, l) != s.end(); }));
                EXPECT_EQ(degree, containing);
            }
        }
    EXPECT_THROW(set_bipartite(3, 4), ParameterError);
    EXPECT_THROW(set_bipartite(3, 0), ParameterError);
}

TEST(Embed, SmallPatternFollowsTheRecipe)
{
    auto pattern = fixtures::small_pattern();
    auto e = embed_into_set_bipartite(pattern);
    EXPECT_EQ(e.a, 8);
    EXPECT_EQ(e.b, 4);
    // N(1) = {1,2,3} + 1'' = 7, no fillers; N(2) = {1,3} + 2'' = 8 + filler 1' = 4
    EXPECT_EQ(e.right_map, (std::vector<Subset>{{1, 2, 3, 7}, {1, 3, 4, 8}}));
    EXPECT_EQ(e.left_map, (std::vector<int>{1, 2, 3}));
    EXPECT_TRUE(verify_witness(set_bipartite(8, 4), e.witness));
}

TEST(Embed, HandBuiltAlternativeIsAlsoInduced)
{
    // {1,2,3,1'} and {1,3,2',1''} with 1' = 4, 2' = 5, 1'' = 7
    auto host = set_bipartite(8, 4);
    auto r1 = host.find_right(Subset{1, 2, 3, 4});
    auto r2 = host.find_right(Subset{1, 3, 5, 7});
    ASSERT_TRUE(r1 && r2);
    InducedCopyWitness w{fixtures::small_pattern(), {1, 2, 3}, {*r1, *r2}, std::nullopt};
    EXPECT_TRUE(verify_witness(host, w));
}

TEST(Embed, SingleEdge)
{
    auto e = embed_into_set_bipartite(fixtures::k11());
    EXPECT_EQ(e.a, 3);
    EXPECT_EQ(e.b, 2);
    EXPECT_EQ(e.right_map, std::vector<Subset>{(Subset{1, 3})});
}

TEST(Embed, IsolatedRightUsesFillers)
{
    auto e = embed_into_set_bipartite(BipartiteGraph(1, 1, {}));
    EXPECT_EQ(e.a, 3);
    EXPECT_EQ(e.b, 2);
    EXPECT_EQ(e.right_map, std::vector<Subset>{(Subset{2, 3})});
    EXPECT_TRUE(verify_witness(set_bipartite(3, 2), e.witness));
}

TEST(Embed, EmptySidesAreRejected)
{
    EXPECT_THROW(embed_into_set_bipartite(BipartiteGraph(0, 2, {})), ValidationError);
    EXPECT_THROW(embed_into_set_bipartite(BipartiteGraph(2, 0, {})), ValidationError);
}

TEST(Embed, RandomPatternsProperty)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int c = 1 + static_cast<int>(rng() % 5);
        const int d = 1 + static_cast<int>(rng() % 5);
        // sweep densities so degree-0 and degree-c rights both occur
        auto pattern = oracle::random_pattern(c, d, rng, (trial % 5) / 4.0);
        auto e = embed_into_set_bipartite(pattern);
        ASSERT_EQ(e.a, 2 * c + d);
        ASSERT_EQ(e.b, c + 1);
        auto host = set_bipartite(e.a, e.b);
        EXPECT_TRUE(verify_witness(host, e.witness));
        std::set<Subset> distinct(e.right_map.begin(), e.right_map.end());
        EXPECT_EQ(distinct.size(), e.right_map.size());
        for (int j = 1; j <= d; ++j) {
            const auto & image = e.right_map[static_cast<std::size_t>(j - 1)];
            EXPECT_EQ(static_cast<int>(image.size()), e.b);
            for (int i = 1; i <= c; ++i)
                EXPECT_EQ(std::ranges::binary_search(image, i), pattern.has_edge(i, j));
        }
    }
}
