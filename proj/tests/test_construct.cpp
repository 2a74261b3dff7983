#include "lidcol/construct.hpp"
#include "lidcol/special_graphs.hpp"
#include "testing/corpus.hpp"
#include "testing/oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace lidcol;
using namespace lidcol::testing;

namespace {

Graph petersen_minus_vertex()
{
    std::vector<Vertex> keep(9);
    std::iota(keep.begin(), keep.end(), 1);
    return induced_subgraph(petersen(), keep);
}

ConstructionOptions checked() { return {.on_lemma = {}, .check_preconditions = true}; }

} // namespace

TEST(LidColourDegenerate, Star)
{
    auto c = lid_colour_degenerate(star(3), 3, 1, checked());
    EXPECT_EQ(c.palette_size(), 9);
    EXPECT_TRUE(verify(star(3), c, Mode::lid).is_lid);
}

TEST(LidColourDegenerate, PetersenMinusVertex)
{
    auto g = petersen_minus_vertex();
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_EQ(degeneracy_ordering(g).width, 2);
    auto c = lid_colour_degenerate(g, 3, 2, checked());
    EXPECT_LE(c.palette_size(), 10);
    EXPECT_TRUE(verify(g, c, Mode::lid).is_lid);
}

TEST(LidColourDegenerate, RejectsBadParameters)
{
    auto g = petersen_minus_vertex();
    EXPECT_THROW(lid_colour_degenerate(g, 2, 1), InputError);   // delta < 3
    EXPECT_THROW(lid_colour_degenerate(g, 3, 1), InputError);   // d below degeneracy
    EXPECT_THROW(lid_colour_degenerate(g, 3, 3), InputError);   // d >= delta
    EXPECT_THROW(lid_colour_degenerate(petersen(), 3, 2), InputError);
    // larger overrides are allowed and only widen the palette
    auto c = lid_colour_degenerate(g, 4, 3);
    EXPECT_EQ(c.palette_size(), 2 * 9 + 3);
    EXPECT_TRUE(is_lid_colouring(g, c));
}

TEST(LidColour, Examples)
{
    auto c8 = lid_colour(gen_cycle(8));
    EXPECT_EQ(c8.colours_used(), 3);
    EXPECT_TRUE(is_lid_colouring(gen_cycle(8), c8));

    auto p = lid_colour(petersen(), checked());
    EXPECT_LE(p.palette_size(), 12);
    EXPECT_TRUE(verify(petersen(), p, Mode::lid).is_lid);

    auto k2 = lid_colour(gen_complete(2));
    EXPECT_TRUE(is_lid_colouring(gen_complete(2), k2));
    EXPECT_LE(k2.palette_size(), 2);
}

TEST(LidColour, SmallAndDegenerateShapes)
{
    EXPECT_EQ(lid_colour(gen_path(1)).palette_size(), 1);
    EXPECT_TRUE(is_lid_colouring(gen_complete(3), lid_colour(gen_complete(3))));
    for (int n = 2; n <= 30; ++n) {
        auto c = lid_colour(gen_path(n));
        EXPECT_TRUE(is_lid_colouring(gen_path(n), c)) << n;
        EXPECT_LE(c.palette_size(), 5);
    }
    for (int n = 3; n <= 30; ++n) {
        auto c = lid_colour(gen_cycle(n));
        EXPECT_TRUE(is_lid_colouring(gen_cycle(n), c)) << n;
        EXPECT_LE(c.palette_size(), 5);
    }
    auto empty = from_pairs(4, {});
    EXPECT_LE(lid_colour(empty).palette_size(), 2);
    EXPECT_TRUE(is_lid_colouring(empty, lid_colour(empty)));
}

TEST(LidColour, DisconnectedGraphs)
{
    // C_5 plus Petersen plus an edge plus an isolated vertex
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        edges.emplace_back(i, (i + 1) % 5);
    for (auto [u, v] : petersen().edges())
        edges.emplace_back(5 + u, 5 + v);
    edges.emplace_back(15, 16);
    auto g = from_pairs(18, edges);
    auto c = lid_colour(g, checked());
    EXPECT_TRUE(verify(g, c, Mode::lid).is_lid);
    EXPECT_LE(c.palette_size(), 12);
    auto s = slid_colour(g, checked());
    EXPECT_TRUE(verify(g, s, Mode::slid).is_slid);
    EXPECT_LE(s.palette_size(), 16);
}

TEST(LidColour, RegularCorpusWithinGeneralBound)
{
    for (const auto &[name, g] : regular_corpus()) {
        auto c = lid_colour(g, checked());
        const int delta = g.max_degree();
        EXPECT_TRUE(is_lid_colouring(g, c)) << name;
        EXPECT_LE(c.palette_size(), 2 * delta * delta - 3 * delta + 3) << name;
        EXPECT_EQ(applicable_bound(g, Mode::lid).kind, BoundKind::regular) << name;
    }
}

TEST(LidColour, Deterministic)
{
    auto g = gen_random_connected(40, 5, 12);
    EXPECT_EQ(lid_colour(g), lid_colour(g));
    EXPECT_EQ(slid_colour(g), slid_colour(g));
}

TEST(SlidColourDegenerate, Tree)
{
    auto tree = from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {6, 7}});
    auto c = slid_colour_degenerate(tree, 3, 1, checked());
    EXPECT_LE(c.palette_size(), 11);
    EXPECT_TRUE(verify(tree, c, Mode::slid).is_slid);
    EXPECT_THROW(slid_colour_degenerate(tree, 1, 0), InputError);
    EXPECT_THROW(slid_colour_degenerate(tree, 3, 3), InputError);
}

TEST(SlidColourDegenerate, RandomInstancesWithinFormula)
{
    auto corpus = random_corpus(50, 77);
    int degenerate = 0;
    for (const auto &[name, g] : corpus) {
        const int delta = g.max_degree();
        const int d = degeneracy_ordering(g).width;
        if (d >= delta)
            continue;
        ++degenerate;
        auto c = slid_colour_degenerate(g, delta, d);
        EXPECT_LE(c.palette_size(), (delta - 1) * (2 * delta - 1) + 2 * d - 1) << name;
        EXPECT_TRUE(is_slid_colouring(g, c)) << name;
    }
    EXPECT_GT(degenerate, 25);
}

TEST(SlidColour, Examples)
{
    auto c8 = slid_colour(gen_cycle(8));
    EXPECT_EQ(c8.colours_used(), 4);
    EXPECT_TRUE(is_slid_colouring(gen_cycle(8), c8));

    auto p = slid_colour(petersen(), checked());
    EXPECT_LE(p.palette_size(), 16);
    EXPECT_TRUE(verify(petersen(), p, Mode::slid).is_slid);

    auto k4 = slid_colour(gen_complete(4));
    EXPECT_EQ(k4.colours_used(), 4);
    EXPECT_TRUE(is_slid_colouring(gen_complete(4), k4));
}

TEST(SlidColour, MaxDegreeTwoWithinSeven)
{
    for (int n = 3; n <= 40; ++n) {
        auto c = slid_colour(gen_cycle(n));
        EXPECT_TRUE(is_slid_colouring(gen_cycle(n), c)) << n;
        EXPECT_LE(c.palette_size(), 7);
    }
    for (int n = 1; n <= 20; ++n)
        EXPECT_TRUE(is_slid_colouring(gen_path(n), slid_colour(gen_path(n))));
}

TEST(SlidColour, NonRegularConnectedBelowGeneralBound)
{
    for (const auto &[name, g] : random_corpus(40, 3)) {
        if (g.is_regular())
            continue;
        const int delta = g.max_degree();
        auto c = slid_colour(g);
        EXPECT_TRUE(is_slid_colouring(g, c)) << name;
        EXPECT_LE(c.palette_size(), 2 * delta * delta - delta - 2) << name;
    }
}

TEST(BoundM, Examples)
{
    EXPECT_EQ(bound_M(2, 3), 5);
    EXPECT_EQ(bound_M(3, 4), 10);
    EXPECT_THROW(bound_M(1, 3), InputError);
    EXPECT_THROW(bound_M(5, 3), InputError);
}

TEST(BoundM, ClosedForms)
{
    for (int omega = 2; omega <= 10; ++omega)
        for (int delta = omega - 1; delta <= 20; ++delta) {
            const int closed = 2 * (omega - 1) <= delta
                                   ? 2 * delta * omega - 2 * omega * omega + 5 * omega - 2 * delta - 3
                                   : delta * (delta + 1) / 2;
            EXPECT_EQ(bound_M(omega, delta), closed) << omega << " " << delta;
        }
}

TEST(SlidColourChordal, Examples)
{
    auto k4 = slid_colour_chordal(gen_complete(4), checked());
    EXPECT_LE(k4.palette_size(), 7);
    EXPECT_EQ(k4.colours_used(), 4);
    EXPECT_TRUE(is_slid_colouring(gen_complete(4), k4));

    int delta_six = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = gen_ktree(6 + static_cast<int>(seed % 10), 2, seed);
        if (g.max_degree() != 6)
            continue;
        ++delta_six;
        auto c = slid_colour_chordal(g, checked());
        EXPECT_LE(c.palette_size(), 19);
        EXPECT_EQ(bound_M(3, 6) + 1, 19);
        EXPECT_TRUE(verify(g, c, Mode::slid).is_slid);
    }
    EXPECT_GT(delta_six, 0);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto tree = gen_ktree(25, 1, seed);
        auto c = slid_colour_chordal(tree);
        EXPECT_LE(c.palette_size(), 2 * tree.max_degree());
        EXPECT_TRUE(is_slid_colouring(tree, c));
    }
}

TEST(SlidColourChordal, RejectsNonChordal)
{
    EXPECT_THROW(slid_colour_chordal(gen_cycle(5)), InputError);
    EXPECT_THROW(slid_colour_chordal(from_pairs(3, {})), InputError);
}

TEST(ApplicableBound, Kinds)
{
    auto c8 = applicable_bound(gen_cycle(8), Mode::lid);
    EXPECT_EQ(c8.kind, BoundKind::max_degree_two);
    EXPECT_EQ(c8.value, 5);
    EXPECT_EQ(applicable_bound(gen_cycle(8), Mode::slid).value, 7);
    EXPECT_EQ(applicable_bound(gen_complete(2), Mode::lid).kind,
              BoundKind::max_degree_at_most_one);

    auto p = applicable_bound(petersen(), Mode::slid);
    EXPECT_EQ(p.kind, BoundKind::regular);
    EXPECT_EQ(p.value, 16);

    auto s = applicable_bound(star(3), Mode::lid);
    EXPECT_EQ(s.kind, BoundKind::degenerate);
    EXPECT_EQ(s.value, 9);
    EXPECT_EQ(s.degeneracy, 1);

    auto k = applicable_bound(gen_complete(4), Mode::slid, true);
    EXPECT_EQ(k.kind, BoundKind::chordal);
    EXPECT_EQ(k.clique_number, 4);
    EXPECT_EQ(k.value, 7);
    EXPECT_THROW(applicable_bound(gen_cycle(5), Mode::slid, true), InputError);
}

TEST(Construction, ObserverSeesBoundedLists)
{
    int calls = 0;
    ConstructionOptions options;
    options.check_preconditions = true;
    options.on_lemma = [&](const LemmaInvocation &call) {
        ++calls;
        EXPECT_LE(call.list_size, call.size_bound());
    };
    for (const auto &[name, g] : random_corpus(20, 8)) {
        EXPECT_TRUE(is_lid_colouring(g, lid_colour(g, options))) << name;
        EXPECT_TRUE(is_slid_colouring(g, slid_colour(g, options))) << name;
    }
    auto tree = gen_ktree(30, 3, 4);
    EXPECT_TRUE(is_slid_colouring(tree, slid_colour_chordal(tree, options)));
    EXPECT_GT(calls, 1000);
}

TEST(LemmaInvocation, SizeBound)
{
    LemmaInvocation lid{Mode::lid, 0, 3, 5, 4, 0};
    EXPECT_EQ(lid.size_bound(), 18);
    LemmaInvocation slid{Mode::slid, 0, 3, 5, 4, 0};
    EXPECT_EQ(slid.size_bound(), 13);
}
