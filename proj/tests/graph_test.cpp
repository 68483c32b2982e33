#include "simcolor/constructions.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/verifier.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace simcolor;
using simcolor::testing::graph_of;

namespace {

// a=0, b=1, c=2, d=3
constexpr Vertex a = 0, b = 1, c = 2;

TEST(SimpleGraph, CanonicalizesAndSortsEdges)
{
    auto g = graph_of(3, {{2, 1}, {1, 0}});
    ASSERT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{1, 2}));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.max_degree(), 2u);
    EXPECT_TRUE(g.contains({1, 2}));
    EXPECT_FALSE(g.contains({0, 2}));
}

TEST(SimpleGraph, RejectsLoopsDuplicatesAndRange)
{
    EXPECT_THROW(graph_of(3, {{1, 1}}), invalid_graph);
    EXPECT_THROW(graph_of(3, {{0, 1}, {1, 0}}), invalid_graph);
    EXPECT_THROW(graph_of(3, {{0, 3}}), invalid_graph);
    EXPECT_THROW((void)make_edge(4, 4), invalid_graph);
}

TEST(SimpleGraph, KeepsIsolatedVertices)
{
    auto g = graph_of(6, {{0, 1}});
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_EQ(g.degree(5), 0u);
}

TEST(GraphFamily, Validation)
{
    EXPECT_THROW(GraphFamily(3, {}), invalid_graph);
    EXPECT_THROW(GraphFamily(3, {SimpleGraph(3), SimpleGraph(4)}), invalid_graph);
    std::vector<SimpleGraph> too_many(kMaxMembers + 1, SimpleGraph(2));
    EXPECT_THROW(GraphFamily(2, too_many), invalid_graph);
    std::vector<SimpleGraph> at_limit(kMaxMembers, graph_of(2, {{0, 1}}));
    GraphFamily big(2, at_limit);
    EXPECT_EQ(build_union(big).multiplicity(0), kMaxMembers);
}

TEST(BuildUnion, DisjointMembers)
{
    GraphFamily f(3, {graph_of(3, {{a, b}}), graph_of(3, {{b, c}})});
    auto u = build_union(f);
    ASSERT_EQ(u.base().num_edges(), 2u);
    EXPECT_EQ(u.multiplicity(0), 1u);
    EXPECT_EQ(u.multiplicity(1), 1u);
    EXPECT_EQ(u.membership(0), 0b01u);
    EXPECT_EQ(u.membership(1), 0b10u);
}

TEST(BuildUnion, IdenticalMembers)
{
    GraphFamily f(2, {graph_of(2, {{a, b}}), graph_of(2, {{a, b}})});
    auto u = build_union(f);
    ASSERT_EQ(u.base().num_edges(), 1u);
    EXPECT_EQ(u.multiplicity(0), 2u);
}

TEST(BuildUnion, StarThreeHasMultiplicityTwoEverywhere)
{
    auto f = star_three(4);
    auto u = build_union(f);
    ASSERT_EQ(u.base().num_edges(), 6u);
    EXPECT_EQ(u.base().degree(0), 6u);
    for (std::size_t i = 0; i < u.base().num_edges(); ++i) {
        // Count by scanning member edge lists directly.
        std::size_t count = 0;
        for (const auto& g : f.members())
            count += g.contains(u.base().edge(i)) ? 1 : 0;
        EXPECT_EQ(count, 2u);
        EXPECT_EQ(u.multiplicity(i), 2u);
    }
}

TEST(ConflictGraph, TriangleIsComplete)
{
    auto f = simcolor::testing::single(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}));
    auto cg = conflict_graph(f);
    EXPECT_EQ(cg.size(), 3u);
    EXPECT_EQ(cg.conflicts.size(), 3u);
}

TEST(ConflictGraph, StarThreeIsK6)
{
    auto f = star_three(4);
    auto cg = conflict_graph(f);
    ASSERT_EQ(cg.size(), 6u);
    // Pair enumeration: every two star edges share some member.
    std::size_t expected = 0;
    for (std::size_t i = 0; i < cg.size(); ++i)
        for (std::size_t j = i + 1; j < cg.size(); ++j) {
            bool together = false;
            for (const auto& g : f.members())
                together = together || (g.contains(cg.nodes[i]) && g.contains(cg.nodes[j]));
            expected += together ? 1 : 0;
        }
    EXPECT_EQ(expected, 15u);
    EXPECT_EQ(cg.conflicts.size(), 15u);
}

TEST(ConflictGraph, DisjointEndpointsHaveNoConflicts)
{
    GraphFamily f(4, {graph_of(4, {{0, 1}}), graph_of(4, {{2, 3}})});
    auto cg = conflict_graph(f);
    EXPECT_EQ(cg.size(), 2u);
    EXPECT_TRUE(cg.conflicts.empty());
}

TEST(ConflictGraph, SharedVertexAcrossMembersIsNotAConflict)
{
    GraphFamily f(3, {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}})});
    EXPECT_TRUE(conflict_graph(f).conflicts.empty());
}

TEST(FamilyDelta, IsMemberMaximumNotUnionDegree)
{
    GraphFamily f(3, {graph_of(3, {{a, b}}), graph_of(3, {{a, c}})});
    EXPECT_EQ(family_delta(f), 1u);
    EXPECT_EQ(build_union(f).base().max_degree(), 2u);
    EXPECT_EQ(family_delta(star_family(8, 4)), 4u);
    EXPECT_EQ(family_delta(GraphFamily(4, {SimpleGraph(4)})), 0u);
}

TEST(UnionProperties, MultiplicityAndDegreeBounds)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t ell = 1 + seed % 6;
        auto f = random_family({12, ell, 1 + seed % 5, 0.4, seed});
        auto u = build_union(f);
        for (std::size_t i = 0; i < u.base().num_edges(); ++i) {
            EXPECT_GE(u.multiplicity(i), 1u);
            EXPECT_LE(u.multiplicity(i), ell);
        }
        for (Vertex v = 0; v < f.num_vertices(); ++v) {
            std::size_t sum = 0;
            for (const auto& g : f.members())
                sum += g.degree(v);
            EXPECT_LE(u.base().degree(v), sum);
            EXPECT_LE(sum, ell * f.delta());
        }
    }
}

TEST(ConflictGraphSoundness, VerifyAgreesWithVertexColoring)
{
    std::mt19937_64 rng(99);
    std::size_t valid_seen = 0, invalid_seen = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto f = random_family({6, 1 + seed % 3, 2, 0.5, seed});
        auto cg = conflict_graph(f);
        std::uniform_int_distribution<Color> pick(0, static_cast<Color>(2 + seed % 4));
        SimultaneousColoring c;
        for (const auto& e : cg.nodes)
            c.assign(e, pick(rng));
        const bool by_verify = verify(f, c).valid;
        EXPECT_EQ(by_verify, simcolor::testing::properly_colors(cg, c)) << "seed " << seed;
        (by_verify ? valid_seen : invalid_seen)++;
    }
    EXPECT_GT(valid_seen, 10u);
    EXPECT_GT(invalid_seen, 10u);
}

} // namespace
