#pragma once

// Simultaneous coloring of two graphs with floor(3 Delta / 2) + 4 colors.
//
// Union edges split into the common part (in both graphs) and the two private
// parts. Each private part P_i is halved by a degree factor K_i whose degree
// at v lies in [ceil(d/2) - 1, ceil(d/2)], d = deg_{P_i}(v). Then
//   L = (P_1 - K_1) u (P_2 - K_2)   has degree <= floor(Delta/2) + 1 per side,
//   R = common u K_1 u K_2           has degree <= Delta + 1.
// L_1 and L_2 are Vizing-colored on one shared palette (no member contains
// edges of both); R gets a disjoint palette of at most Delta + 2 colors.

#include "simcolor/certificate.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/sqrt_coloring.hpp"
#include "simcolor/vizing.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace simcolor {

struct PairSplit {
    SimpleGraph common;
    SimpleGraph private_1;
    SimpleGraph private_2;
};

/// Degree window for the half factor of a graph, with theta = 1/2.
struct FactorSpec {
    std::vector<std::size_t> g;   // max(0, ceil(d/2) - 1)
    std::vector<std::size_t> f;   // ceil(d/2)
    double theta = 0.5;

    [[nodiscard]] static FactorSpec half_of(const SimpleGraph& graph)
    {
        FactorSpec spec;
        spec.g.resize(graph.num_vertices());
        spec.f.resize(graph.num_vertices());
        for (Vertex v = 0; v < graph.num_vertices(); ++v) {
            const std::size_t d = graph.degree(v);
            spec.f[v] = (d + 1) / 2;
            spec.g[v] = spec.f[v] > 0 ? spec.f[v] - 1 : 0;
        }
        return spec;
    }

    [[nodiscard]] bool admits(Vertex v, std::size_t degree) const { return g[v] <= degree && degree <= f[v]; }
};

struct FactorDecomposition {
    SimpleGraph K_1, K_2;
    SimpleGraph L_1, L_2;
    SimpleGraph L;   // L_1 u L_2
    SimpleGraph R;   // common u K_1 u K_2
};

[[nodiscard]] inline PairSplit split_private_common(const GraphFamily& family)
{
    if (family.size() != 2)
        throw wrong_arity("pair coloring needs exactly two graphs, got " + std::to_string(family.size()));
    const auto u = build_union(family);
    const auto& base = u.base();
    return {filter_edges(base, [&](std::size_t i) { return u.membership(i) == 0b11; }),
            filter_edges(base, [&](std::size_t i) { return u.membership(i) == 0b01; }),
            filter_edges(base, [&](std::size_t i) { return u.membership(i) == 0b10; })};
}

namespace detail {

// Closed walk through every edge of the component containing `start`,
// returned as a sequence of edge ids. Iterative Hierholzer; each vertex takes
// its lowest-neighbor unused edge first.
inline std::vector<std::size_t> euler_circuit(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
                                              std::size_t start, std::vector<bool>& used,
                                              std::vector<std::size_t>& cursor)
{
    std::vector<std::size_t> circuit;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, static_cast<std::size_t>(-1)}};
    while (!stack.empty()) {
        auto [v, via] = stack.back();
        auto& pos = cursor[v];
        while (pos < adj[v].size() && used[adj[v][pos].second])
            ++pos;
        if (pos == adj[v].size()) {
            stack.pop_back();
            if (via != static_cast<std::size_t>(-1))
                circuit.push_back(via);
            continue;
        }
        auto [next, e] = adj[v][pos];
        used[e] = true;
        stack.emplace_back(next, e);
    }
    return circuit;
}

} // namespace detail

/// Edge subgraph K with max(0, ceil(d/2) - 1) <= deg_K(v) <= ceil(d/2), d the
/// degree in `graph`.
///
/// A dummy vertex (index n) is joined to every odd-degree vertex, making all
/// degrees even. Each component's Euler circuit is 2-colored alternately; every
/// pass through a vertex contributes one edge of each class, so only the
/// circuit's start can be unbalanced, by one edge per class, and only when the
/// circuit has odd length. The start is the dummy vertex where possible, else
/// the class with fewer edges at the start is kept. Dummy edges are dropped.
[[nodiscard]] inline SimpleGraph half_factor(const SimpleGraph& graph)
{
    const std::size_t n = graph.num_vertices();
    const std::size_t dummy = n;

    std::vector<std::pair<std::size_t, std::size_t>> ends;   // (a, b) per augmented edge
    for (const auto& e : graph.edges())
        ends.emplace_back(e.u, e.v);
    for (Vertex v = 0; v < n; ++v)
        if (graph.degree(v) % 2 == 1)
            ends.emplace_back(v, dummy);

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n + 1);
    for (std::size_t e = 0; e < ends.size(); ++e) {
        adj[ends[e].first].emplace_back(ends[e].second, e);
        adj[ends[e].second].emplace_back(ends[e].first, e);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());

    std::vector<bool> used(ends.size(), false);
    std::vector<std::size_t> cursor(n + 1, 0);
    std::vector<bool> keep(graph.num_edges(), false);

    std::vector<std::size_t> starts{dummy};
    for (std::size_t v = 0; v < n; ++v)
        starts.push_back(v);

    for (std::size_t start : starts) {
        auto circuit = detail::euler_circuit(adj, start, used, cursor);
        if (circuit.empty())
            continue;
        // Class 0 = even positions. With odd length the start sees one extra
        // class-0 edge at both ends of the walk.
        const int chosen = (circuit.size() % 2 == 1) ? 1 : 0;
        for (std::size_t pos = 0; pos < circuit.size(); ++pos)
            if (static_cast<int>(pos % 2) == chosen && circuit[pos] < graph.num_edges())
                keep[circuit[pos]] = true;
    }

    auto factor = filter_edges(graph, [&](std::size_t i) { return keep[i]; });

    const auto spec = FactorSpec::half_of(graph);
    for (Vertex v = 0; v < n; ++v)
        if (!spec.admits(v, factor.degree(v)))
            throw std::logic_error("half_factor: vertex " + std::to_string(v) + " has factor degree " +
                                   std::to_string(factor.degree(v)) + ", window [" + std::to_string(spec.g[v]) +
                                   ", " + std::to_string(spec.f[v]) + "]");
    return factor;
}

[[nodiscard]] inline SimpleGraph edge_difference(const SimpleGraph& whole, const SimpleGraph& part)
{
    return filter_edges(whole, [&](std::size_t i) { return !part.contains(whole.edge(i)); });
}

[[nodiscard]] inline FactorDecomposition decompose_pair(const PairSplit& split)
{
    const std::size_t n = split.common.num_vertices();
    FactorDecomposition d;
    d.K_1 = half_factor(split.private_1);
    d.K_2 = half_factor(split.private_2);
    d.L_1 = edge_difference(split.private_1, d.K_1);
    d.L_2 = edge_difference(split.private_2, d.K_2);
    d.L = edge_union(n, {&d.L_1, &d.L_2});
    d.R = edge_union(n, {&split.common, &d.K_1, &d.K_2});
    return d;
}

/// floor(3 delta / 2) + 4.
[[nodiscard]] constexpr std::size_t bound_pair(std::size_t delta) noexcept { return 3 * delta / 2 + 4; }

[[nodiscard]] inline ColoringResult color_pair(const GraphFamily& family)
{
    const auto split = split_private_common(family);
    const auto parts = decompose_pair(split);
    const std::size_t delta = family.delta();

    if (parts.L_1.max_degree() > delta / 2 + 1 || parts.L_2.max_degree() > delta / 2 + 1)
        throw std::logic_error("pair: leftover degree exceeds floor(Delta/2) + 1");
    if (parts.R.max_degree() > delta + 1)
        throw std::logic_error("pair: R degree exceeds Delta + 1");

    ColoringResult out;
    auto& coloring = out.coloring;

    // Same palette for both leftovers: an L_1 edge is only in G_1, an L_2 edge only in G_2.
    auto l1 = vizing_color(parts.L_1);
    auto l2 = vizing_color(parts.L_2);
    for (std::size_t i = 0; i < parts.L_1.num_edges(); ++i)
        coloring.assign(parts.L_1.edge(i), l1.colors[i]);
    for (std::size_t i = 0; i < parts.L_2.num_edges(); ++i)
        coloring.assign(parts.L_2.edge(i), l2.colors[i]);
    const auto offset = static_cast<Color>(std::max(l1.palette_size, l2.palette_size));

    auto r = vizing_color(parts.R);
    for (std::size_t i = 0; i < parts.R.num_edges(); ++i)
        coloring.assign(parts.R.edge(i), offset + r.colors[i]);
    coloring.palette_size = offset + r.palette_size;

    const std::size_t bound = bound_pair(delta);
    out.certificate = {Algorithm::pair_factor, coloring.palette_size, bound, bound, 2, delta, 0.0};
    return out;
}

} // namespace simcolor
