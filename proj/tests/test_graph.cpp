#include "lidcol/graph.hpp"
#include "lidcol/special_graphs.hpp"
#include "testing/corpus.hpp"
#include "testing/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace lidcol;
using lidcol::testing::from_pairs;

TEST(FromEdgeList, BuildsCycle)
{
    auto g = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(g.m(), 4);
    for (Vertex v = 0; v < 4; ++v)
        EXPECT_EQ(g.degree(v), 2);
    EXPECT_TRUE(g.is_regular());
}

TEST(FromEdgeList, SingleIsolatedVertex)
{
    auto g = from_pairs(1, {});
    EXPECT_EQ(g.n(), 1);
    EXPECT_EQ(g.m(), 0);
    EXPECT_EQ(g.max_degree(), 0);
}

TEST(FromEdgeList, CollapsesDuplicates)
{
    auto g = from_pairs(3, {{0, 1}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.m(), 2);
    auto h = from_pairs(3, {{1, 0}, {0, 1}, {2, 1}});
    EXPECT_EQ(g, h);
}

TEST(FromEdgeList, RejectsBadInput)
{
    EXPECT_THROW(from_pairs(3, {{0, 3}}), InputError);
    EXPECT_THROW(from_pairs(3, {{-1, 0}}), InputError);
    EXPECT_THROW(from_pairs(3, {{1, 1}}), InputError);
    EXPECT_THROW(from_pairs(-1, {}), InputError);
}

TEST(FromEdgeList, AdjacencyIsSymmetricAndSorted)
{
    auto g = gen_random_connected(30, 5, 7);
    int sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nb = g.neighbours(v);
        EXPECT_TRUE(std::ranges::is_sorted(nb));
        for (Vertex u : nb)
            EXPECT_TRUE(g.adjacent(u, v));
        sum += g.degree(v);
    }
    EXPECT_EQ(sum, 2 * g.m());
}

TEST(ClosedNeighbourhood, Examples)
{
    EXPECT_EQ(gen_cycle(4).closed_neighbourhood(0), (std::vector<Vertex>{0, 1, 3}));
    EXPECT_EQ(from_pairs(3, {{1, 2}}).closed_neighbourhood(0), (std::vector<Vertex>{0}));
    EXPECT_EQ(gen_complete(4).closed_neighbourhood(2), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_THROW(gen_cycle(4).closed_neighbourhood(4), InputError);
}

TEST(DistanceTwoSet, Examples)
{
    EXPECT_EQ(gen_path(5).distance_two_set(0), (std::vector<Vertex>{2}));
    EXPECT_EQ(gen_cycle(6).distance_two_set(0), (std::vector<Vertex>{2, 4}));
    EXPECT_TRUE(gen_complete(4).distance_two_set(1).empty());
    EXPECT_THROW(gen_path(5).distance_two_set(-1), InputError);
}

TEST(DistanceTwoSet, MatchesBfs)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = gen_random_connected(25, 4, seed);
        for (Vertex v = 0; v < g.n(); ++v) {
            auto dist = lidcol::testing::bfs_distances(g, v);
            std::vector<Vertex> expected;
            for (Vertex u = 0; u < g.n(); ++u)
                if (dist[u] == 2)
                    expected.push_back(u);
            auto got = g.distance_two_set(v);
            EXPECT_EQ(got, expected);
            auto closed = g.closed_neighbourhood(v);
            for (Vertex u : got) {
                EXPECT_FALSE(std::ranges::binary_search(closed, u));
                EXPECT_TRUE(std::ranges::any_of(g.neighbours(v),
                                                [&](Vertex w) { return g.adjacent(w, u); }));
            }
        }
    }
}

TEST(ClosedTwins, Examples)
{
    EXPECT_TRUE(gen_complete(4).closed_twins(0, 3));
    auto c5 = gen_cycle(5);
    for (auto [u, v] : c5.edges())
        EXPECT_FALSE(c5.closed_twins(u, v));
    // 0 and 1 adjacent, both adjacent to exactly 2 and 3
    auto g = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_TRUE(g.closed_twins(0, 1));
    EXPECT_FALSE(g.closed_twins(2, 3));
    EXPECT_THROW(g.closed_twins(1, 1), InputError);
    EXPECT_THROW(g.closed_twins(1, 9), InputError);
}

TEST(Edges, LexicographicWithSmallerFirst)
{
    auto g = from_pairs(4, {{3, 0}, {2, 1}, {0, 1}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
}

TEST(InducedSubgraph, RelabelsVertices)
{
    auto g = gen_cycle(6);
    std::vector<Vertex> keep{0, 1, 2, 4};
    auto h = induced_subgraph(g, keep);
    EXPECT_EQ(h.n(), 4);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(DegeneracyOrdering, Examples)
{
    auto tree = from_pairs(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
    EXPECT_EQ(degeneracy_ordering(tree).width, 1);
    for (int n = 3; n <= 9; ++n)
        EXPECT_EQ(degeneracy_ordering(gen_cycle(n)).width, 2);
    EXPECT_EQ(degeneracy_ordering(gen_complete(5)).width, 4);
}

TEST(DegeneracyOrdering, SmallestIdBreaksTies)
{
    auto order = degeneracy_ordering(gen_path(4));
    EXPECT_EQ(order.order, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(order.kind, OrderKind::degeneracy);
}

TEST(DegeneracyOrdering, MatchesBruteForceAndWidthInvariant)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = gen_random_connected(6 + static_cast<int>(seed % 5), 2 + static_cast<int>(seed % 4),
                                      seed);
        auto order = degeneracy_ordering(g);
        EXPECT_EQ(order.width, lidcol::testing::brute_degeneracy(g)) << "seed " << seed;

        std::vector<Vertex> sorted = order.order;
        std::ranges::sort(sorted);
        std::vector<Vertex> all(g.n());
        std::iota(all.begin(), all.end(), 0);
        EXPECT_EQ(sorted, all);

        std::vector<int> position(g.n());
        for (int i = 0; i < g.n(); ++i)
            position[order.order[i]] = i;
        for (int i = 0; i < g.n(); ++i) {
            int later = 0;
            for (Vertex u : g.neighbours(order.order[i]))
                later += position[u] > i;
            EXPECT_LE(later, order.width);
        }
    }
}

TEST(ChordalPeo, Examples)
{
    EXPECT_FALSE(chordal_peo(gen_cycle(4)).has_value());
    auto k4 = chordal_peo(gen_complete(4));
    ASSERT_TRUE(k4.has_value());
    EXPECT_EQ(k4->kind, OrderKind::chordal_peo);
    EXPECT_EQ(clique_number_chordal(gen_complete(4), *k4), 4);

    auto tree = from_pairs(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
    auto peo = chordal_peo(tree);
    ASSERT_TRUE(peo.has_value());
    EXPECT_EQ(clique_number_chordal(tree, *peo), 2);
}

TEST(ChordalPeo, ReverseIsPerfectElimination)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = gen_ktree(20, 1 + static_cast<int>(seed % 3), seed);
        auto peo = chordal_peo(g);
        ASSERT_TRUE(peo.has_value());
        EXPECT_TRUE(is_perfect_elimination_sequence(g, peo->elimination_sequence()));
    }
}

TEST(ChordalPeo, AgreesWithInducedCycleSearch)
{
    int chordal = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        auto g = gen_random_connected(n, 2 + static_cast<int>(seed % 3), seed);
        const bool has_cycle = lidcol::testing::brute_has_long_induced_cycle(g);
        EXPECT_EQ(chordal_peo(g).has_value(), !has_cycle) << "seed " << seed;
        chordal += !has_cycle;
    }
    EXPECT_GT(chordal, 10);
}

TEST(CliqueNumberChordal, MatchesBruteForce)
{
    auto three_tree = gen_ktree(10, 3, 11);
    auto peo = chordal_peo(three_tree);
    ASSERT_TRUE(peo.has_value());
    EXPECT_EQ(clique_number_chordal(three_tree, *peo), 4);
    EXPECT_EQ(lidcol::testing::brute_max_clique(three_tree), 4);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = gen_ktree(12, 1 + static_cast<int>(seed % 4), seed);
        auto p = chordal_peo(g);
        ASSERT_TRUE(p.has_value());
        EXPECT_EQ(clique_number_chordal(g, *p), lidcol::testing::brute_max_clique(g));
    }
}

TEST(CliqueNumberChordal, RejectsInvalidOrder)
{
    auto g = gen_cycle(4);
    EliminationOrder fake{{0, 1, 2, 3}, 1, OrderKind::chordal_peo};
    EXPECT_THROW(clique_number_chordal(g, fake), InputError);
    auto k3 = gen_complete(3);
    EliminationOrder wrong_kind{{0, 1, 2}, 2, OrderKind::degeneracy};
    EXPECT_THROW(clique_number_chordal(k3, wrong_kind), InputError);
}

TEST(ConnectedComponents, Examples)
{
    EXPECT_EQ(connected_components(gen_cycle(4)).size(), 1u);
    auto two = connected_components(from_pairs(4, {{0, 2}, {1, 3}}));
    EXPECT_EQ(two, (std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}}));
    auto singles = connected_components(from_pairs(3, {}));
    EXPECT_EQ(singles, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
}
