#pragma once

// Core graph types for simultaneous edge coloring: simple graphs, families of
// graphs on a shared vertex set, their edge union with per-edge membership,
// and the conflict graph that turns simultaneity into vertex coloring.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simcolor {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Bit i set means member i contains the edge.
using MemberSet = std::uint64_t;

/// Upper limit on the number of graphs in a family (one bit per member).
inline constexpr std::size_t kMaxMembers = 64;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loop, out-of-range endpoint, duplicate edge or inconsistent family.
class invalid_graph : public error {
public:
    using error::error;
};

class wrong_arity : public error {
public:
    using error::error;
};

class invalid_parameter : public error {
public:
    using error::error;
};

class palette_exhausted : public error {
public:
    using error::error;
};

class unknown_edge : public error {
public:
    using error::error;
};

class instance_too_large : public error {
public:
    using error::error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;

    [[nodiscard]] bool touches(Vertex x) const noexcept { return u == x || v == x; }
    [[nodiscard]] Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
};

/// Canonical edge with u < v. Throws on loops.
[[nodiscard]] inline Edge make_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw invalid_graph("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::string to_string(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

struct Incidence {
    Vertex neighbor;
    std::size_t edge;   // index into SimpleGraph::edges()
};

/// Immutable simple loopless graph. Edges are kept in canonical sorted order;
/// per-vertex incidence lists are sorted by neighbor.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(std::size_t num_vertices)
        : num_vertices_(num_vertices), adjacency_(num_vertices)
    {
    }

    SimpleGraph(std::size_t num_vertices, std::vector<Edge> edges)
        : num_vertices_(num_vertices), edges_(std::move(edges)), adjacency_(num_vertices)
    {
        for (auto& e : edges_) {
            if (e.u == e.v)
                throw invalid_graph("loop at vertex " + std::to_string(e.u));
            if (e.u >= num_vertices_ || e.v >= num_vertices_)
                throw invalid_graph("edge " + to_string(e) + " out of range for " +
                                    std::to_string(num_vertices_) + " vertices");
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw invalid_graph("duplicate edge " + to_string(*dup));

        for (std::size_t i = 0; i < edges_.size(); ++i) {
            adjacency_[edges_[i].u].push_back({edges_[i].v, i});
            adjacency_[edges_[i].v].push_back({edges_[i].u, i});
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end(),
                      [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
            max_degree_ = std::max(max_degree_, list.size());
        }
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_.at(i); }

    [[nodiscard]] std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] std::size_t max_degree() const noexcept { return max_degree_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const Edge& e) const
    {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    [[nodiscard]] bool contains(const Edge& e) const { return index_of(e).has_value(); }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::size_t max_degree_ = 0;
};

/// Edge-subgraph of `graph` keeping the edges selected by `keep(index)`.
template <typename Pred>
[[nodiscard]] SimpleGraph filter_edges(const SimpleGraph& graph, Pred keep)
{
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < graph.num_edges(); ++i)
        if (keep(i))
            kept.push_back(graph.edge(i));
    return SimpleGraph(graph.num_vertices(), std::move(kept));
}

/// Edge union of graphs on the same vertex set.
[[nodiscard]] inline SimpleGraph edge_union(std::size_t num_vertices,
                                            std::initializer_list<const SimpleGraph*> parts)
{
    std::set<Edge> all;
    for (const auto* g : parts)
        all.insert(g->edges().begin(), g->edges().end());
    return SimpleGraph(num_vertices, std::vector<Edge>(all.begin(), all.end()));
}

/// ell >= 1 simple graphs sharing `num_vertices`. Delta is the largest member
/// degree, not the degree of the union.
class GraphFamily {
public:
    GraphFamily(std::size_t num_vertices, std::vector<SimpleGraph> members)
        : num_vertices_(num_vertices), members_(std::move(members))
    {
        if (members_.empty())
            throw invalid_graph("family needs at least one graph");
        if (members_.size() > kMaxMembers)
            throw invalid_graph("family has " + std::to_string(members_.size()) +
                                " graphs, limit is " + std::to_string(kMaxMembers));
        for (const auto& g : members_) {
            if (g.num_vertices() != num_vertices_)
                throw invalid_graph("member vertex count differs from family");
            delta_ = std::max(delta_, g.max_degree());
        }
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] std::span<const SimpleGraph> members() const noexcept { return members_; }
    [[nodiscard]] const SimpleGraph& member(std::size_t i) const { return members_.at(i); }
    [[nodiscard]] std::size_t delta() const noexcept { return delta_; }

private:
    std::size_t num_vertices_;
    std::vector<SimpleGraph> members_;
    std::size_t delta_ = 0;
};

[[nodiscard]] inline std::size_t family_delta(const GraphFamily& family) { return family.delta(); }

/// The union graph plus, for each union edge, the set of members containing it.
class UnionGraph {
public:
    UnionGraph(SimpleGraph base, std::vector<MemberSet> membership, std::size_t ell)
        : base_(std::move(base)), membership_(std::move(membership)), ell_(ell)
    {
    }

    [[nodiscard]] const SimpleGraph& base() const noexcept { return base_; }
    [[nodiscard]] std::size_t ell() const noexcept { return ell_; }
    [[nodiscard]] MemberSet membership(std::size_t edge) const { return membership_.at(edge); }
    [[nodiscard]] std::span<const MemberSet> memberships() const noexcept { return membership_; }
    [[nodiscard]] std::size_t multiplicity(std::size_t edge) const
    {
        return static_cast<std::size_t>(std::popcount(membership_.at(edge)));
    }

private:
    SimpleGraph base_;
    std::vector<MemberSet> membership_;
    std::size_t ell_;
};

[[nodiscard]] inline UnionGraph build_union(const GraphFamily& family)
{
    std::map<Edge, MemberSet> members;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& e : family.member(i).edges())
            members[e] |= MemberSet{1} << i;

    std::vector<Edge> edges;
    std::vector<MemberSet> membership;
    edges.reserve(members.size());
    membership.reserve(members.size());
    for (const auto& [e, set] : members) {
        edges.push_back(e);
        membership.push_back(set);
    }
    return UnionGraph(SimpleGraph(family.num_vertices(), std::move(edges)), std::move(membership),
                      family.size());
}

/// Partial or complete color assignment over union edges. palette_size is one
/// past the largest color the producer reserved (0 when nothing is colored).
struct SimultaneousColoring {
    std::map<Edge, Color> assignment;
    std::size_t palette_size = 0;

    [[nodiscard]] std::optional<Color> color_of(const Edge& e) const
    {
        auto it = assignment.find(e);
        if (it == assignment.end())
            return std::nullopt;
        return it->second;
    }

    void assign(const Edge& e, Color c)
    {
        assignment[e] = c;
        palette_size = std::max<std::size_t>(palette_size, std::size_t{c} + 1);
    }

    [[nodiscard]] std::size_t distinct_colors() const
    {
        std::set<Color> seen;
        for (const auto& [e, c] : assignment)
            seen.insert(c);
        return seen.size();
    }
};

/// Vertex-coloring view of a family: nodes are union edges (sorted), two nodes
/// conflict iff the edges share an endpoint and some member contains both.
struct ConflictGraph {
    std::vector<Edge> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> conflicts;   // (i, j), i < j, sorted
    std::vector<std::vector<std::size_t>> neighbors;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

[[nodiscard]] inline ConflictGraph conflict_graph(const UnionGraph& u)
{
    const auto& base = u.base();
    ConflictGraph cg;
    cg.nodes.assign(base.edges().begin(), base.edges().end());
    cg.neighbors.resize(cg.nodes.size());

    // Two distinct simple edges share at most one endpoint, so each pair is
    // discovered exactly once.
    for (Vertex v = 0; v < base.num_vertices(); ++v) {
        auto inc = base.incident(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) {
                auto i = inc[a].edge;
                auto j = inc[b].edge;
                if ((u.membership(i) & u.membership(j)) == 0)
                    continue;
                cg.conflicts.emplace_back(std::min(i, j), std::max(i, j));
            }
    }
    std::sort(cg.conflicts.begin(), cg.conflicts.end());
    for (auto [i, j] : cg.conflicts) {
        cg.neighbors[i].push_back(j);
        cg.neighbors[j].push_back(i);
    }
    for (auto& list : cg.neighbors)
        std::sort(list.begin(), list.end());
    return cg;
}

[[nodiscard]] inline ConflictGraph conflict_graph(const GraphFamily& family)
{
    return conflict_graph(build_union(family));
}

} // namespace simcolor
