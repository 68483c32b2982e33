#include "simcolor/constructions.hpp"
#include "simcolor/io.hpp"

#include <gtest/gtest.h>

using namespace simcolor;

namespace {

void expect_star_union(const GraphFamily& f, std::size_t leaves)
{
    auto u = build_union(f);
    EXPECT_EQ(u.base().num_edges(), leaves);
    EXPECT_EQ(u.base().degree(0), leaves);
    EXPECT_EQ(f.num_vertices(), leaves + 1);
}

TEST(StarFamily, EightFour)
{
    auto p = StarFamilyParams::from(8, 4);
    EXPECT_EQ(p.k, 2u);
    EXPECT_EQ(p.parts(), 4u);
    EXPECT_EQ(p.members(), 6u);

    auto f = star_family(8, 4);
    EXPECT_EQ(f.size(), 6u);
    expect_star_union(f, 8);
    for (const auto& g : f.members())
        EXPECT_EQ(g.max_degree(), 4u);
    auto cg = conflict_graph(f);
    EXPECT_EQ(cg.conflicts.size(), 8u * 7 / 2);
}

TEST(StarFamily, TwoFourIsOneWholeStar)
{
    auto f = star_family(2, 4);
    EXPECT_EQ(f.size(), 1u);
    expect_star_union(f, 4);
    EXPECT_EQ(f.member(0).num_edges(), 4u);
}

TEST(StarFamily, MembersAreBlockPairs)
{
    auto f = star_family(18, 6);   // k = 3, six blocks of 3 leaves
    EXPECT_EQ(f.size(), 15u);
    EXPECT_LE(f.size(), 18u);
    expect_star_union(f, 18);
    // First member joins blocks 0 and 1: leaves 1..6.
    std::vector<Edge> expected;
    for (Vertex v = 1; v <= 6; ++v)
        expected.push_back({0, v});
    EXPECT_TRUE(std::equal(expected.begin(), expected.end(), f.member(0).edges().begin()));
    for (const auto& g : f.members())
        EXPECT_EQ(g.max_degree(), 6u);
    EXPECT_EQ(conflict_graph(f).conflicts.size(), 18u * 17 / 2);
}

TEST(StarFamily, PadsToEll)
{
    auto f = star_family(10, 4, true);
    EXPECT_EQ(f.size(), 10u);
    EXPECT_EQ(f.member(9).num_edges(), 0u);
    EXPECT_EQ(star_family(10, 4).size(), 6u);
}

TEST(StarFamily, Errors)
{
    EXPECT_THROW((void)star_family(8, 3), odd_delta);
    EXPECT_THROW((void)star_family(1, 4), too_few_graphs);
    EXPECT_THROW((void)star_family(8, 0), invalid_parameter);
}

TEST(StarThree, Shapes)
{
    auto f4 = star_three(4);
    EXPECT_EQ(f4.size(), 3u);
    expect_star_union(f4, 6);
    EXPECT_EQ(f4.delta(), 4u);

    auto f10 = star_three(10);
    expect_star_union(f10, 15);
    EXPECT_EQ(conflict_graph(f10).conflicts.size(), 15u * 14 / 2);

    auto f2 = star_three(2);
    expect_star_union(f2, 3);
    EXPECT_EQ(conflict_graph(f2).conflicts.size(), 3u);

    auto odd = star_three(5);   // floor(5/2) = 2 per block
    expect_star_union(odd, 6);
    EXPECT_LE(odd.delta(), 5u);

    EXPECT_THROW((void)star_three(1), invalid_parameter);
}

TEST(RandomFamily, ZeroDegreeGivesEmptyGraphs)
{
    auto f = random_family({9, 4, 0, 0.5, 3});
    EXPECT_EQ(f.size(), 4u);
    for (const auto& g : f.members())
        EXPECT_EQ(g.num_edges(), 0u);
}

TEST(RandomFamily, RespectsDegreeCap)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t delta = seed % 9;
        auto f = random_family({2 + seed % 40, 1 + seed % 5, delta, 0.1 * static_cast<double>(seed % 11), seed});
        for (const auto& g : f.members())
            EXPECT_LE(g.max_degree(), delta);
    }
    auto one = random_family({4, 1, 3, 0.0, 1});
    EXPECT_EQ(one.size(), 1u);
    EXPECT_LE(one.delta(), 3u);
}

TEST(RandomFamily, DeterministicUnderSeed)
{
    RandomFamilyParams p{20, 3, 5, 0.3, 7};
    EXPECT_EQ(family_to_json(random_family(p)).dump(), family_to_json(random_family(p)).dump());
    p.seed = 8;
    EXPECT_NE(family_to_json(random_family(p)).dump(), family_to_json(random_family({20, 3, 5, 0.3, 7})).dump());
}

TEST(RandomFamily, OverlapControlsSharing)
{
    auto shared = [](double overlap) {
        auto u = build_union(random_family({40, 2, 4, overlap, 5}));
        std::size_t both = 0;
        for (std::size_t i = 0; i < u.base().num_edges(); ++i)
            both += u.multiplicity(i) == 2 ? 1 : 0;
        return both;
    };
    EXPECT_LT(shared(0.0), shared(0.9));
}

TEST(RandomFamily, RejectsBadParameters)
{
    EXPECT_THROW((void)random_family({1, 2, 3, 0.5, 1}), invalid_parameter);
    EXPECT_THROW((void)random_family({5, 0, 3, 0.5, 1}), invalid_parameter);
    EXPECT_THROW((void)random_family({5, 2, 3, 1.5, 1}), invalid_parameter);
}

} // namespace
