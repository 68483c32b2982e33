#pragma once

// Shared generators and small oracles for the test suites.

#include "simcolor/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace simcolor::testing {

/// G(n, p) with a fixed seed.
inline SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));           // outer cycle
        edges.push_back(make_edge(i, i + 5));                 // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return SimpleGraph(10, std::move(edges));
}

inline SimpleGraph graph_of(std::size_t n, std::vector<Edge> edges) { return SimpleGraph(n, std::move(edges)); }

inline GraphFamily single(SimpleGraph g)
{
    const auto n = g.num_vertices();
    return GraphFamily(n, {std::move(g)});
}

/// True iff `coloring` properly vertex-colors `cg`, with every node colored.
inline bool properly_colors(const ConflictGraph& cg, const SimultaneousColoring& coloring)
{
    for (const auto& node : cg.nodes)
        if (!coloring.color_of(node))
            return false;
    for (auto [i, j] : cg.conflicts)
        if (*coloring.color_of(cg.nodes[i]) == *coloring.color_of(cg.nodes[j]))
            return false;
    return true;
}

} // namespace simcolor::testing
