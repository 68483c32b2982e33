#pragma once

// Instance generators: the star families whose simultaneous chromatic index
// equals their edge count, and seeded random families for benchmarking.

#include "simcolor/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace simcolor {

class odd_delta : public invalid_parameter {
public:
    using invalid_parameter::invalid_parameter;
};

class too_few_graphs : public invalid_parameter {
public:
    using invalid_parameter::invalid_parameter;
};

struct StarFamilyParams {
    std::size_t ell = 0;
    std::size_t delta = 0;
    std::size_t k = 0;   // floor(sqrt(ell / 2))

    [[nodiscard]] std::size_t parts() const noexcept { return 2 * k; }
    [[nodiscard]] std::size_t leaves() const noexcept { return k * delta; }
    [[nodiscard]] std::size_t members() const noexcept { return k * (2 * k - 1); }

    [[nodiscard]] static StarFamilyParams from(std::size_t ell, std::size_t delta)
    {
        std::size_t k = 0;
        while (2 * (k + 1) * (k + 1) <= ell)
            ++k;
        return {ell, delta, k};
    }
};

namespace detail {

// Star on vertex 0 with `parts * part_size` leaves split into consecutive
// blocks; one member per pair of blocks.
inline GraphFamily paired_star(std::size_t parts, std::size_t part_size, std::size_t pad_to)
{
    const std::size_t leaves = parts * part_size;
    const std::size_t n = leaves + 1;
    auto block = [&](std::size_t i) {
        std::vector<Edge> edges;
        for (std::size_t j = 0; j < part_size; ++j)
            edges.push_back({0, static_cast<Vertex>(1 + i * part_size + j)});
        return edges;
    };

    std::vector<SimpleGraph> members;
    for (std::size_t i = 0; i < parts; ++i)
        for (std::size_t j = i + 1; j < parts; ++j) {
            auto edges = block(i);
            auto more = block(j);
            edges.insert(edges.end(), more.begin(), more.end());
            members.emplace_back(n, std::move(edges));
        }
    while (members.size() < pad_to)
        members.emplace_back(n);
    return GraphFamily(n, std::move(members));
}

} // namespace detail

/// Pairs of 2k blocks of delta/2 star edges, k = floor(sqrt(ell / 2)). Every
/// two star edges share a member, so all k * delta edges need distinct colors.
/// Emits k(2k - 1) members, or `ell` when `pad` is set (extra members empty).
[[nodiscard]] inline GraphFamily star_family(std::size_t ell, std::size_t delta, bool pad = false)
{
    if (delta % 2 == 1)
        throw odd_delta("star family needs an even delta, got " + std::to_string(delta));
    if (delta == 0)
        throw invalid_parameter("star family needs delta >= 2");
    const auto params = StarFamilyParams::from(ell, delta);
    if (params.k < 1)
        throw too_few_graphs("star family needs ell >= 2, got " + std::to_string(ell));
    if (params.members() > kMaxMembers || (pad && ell > kMaxMembers))
        throw invalid_parameter("star family would exceed " + std::to_string(kMaxMembers) + " members");
    return detail::paired_star(params.parts(), delta / 2, pad ? ell : 0);
}

/// Three blocks of floor(delta/2) star edges, members are the three block
/// pairs. Needs 3 * floor(delta/2) colors.
[[nodiscard]] inline GraphFamily star_three(std::size_t delta)
{
    if (delta < 2)
        throw invalid_parameter("star3 needs delta >= 2, got " + std::to_string(delta));
    return detail::paired_star(3, delta / 2, 0);
}

struct RandomFamilyParams {
    std::size_t n = 10;
    std::size_t ell = 2;
    std::size_t delta = 3;
    double overlap = 0.3;
    std::uint64_t seed = 0;
};

/// Seeded random family. Each member is grown by rejection sampling of vertex
/// pairs under the degree cap until it has about n * delta / 2 edges or the
/// attempt budget runs out. Every accepted edge is also copied into each other
/// member with probability `overlap`, subject to that member's cap.
[[nodiscard]] inline GraphFamily random_family(const RandomFamilyParams& p)
{
    if (p.n < 2)
        throw invalid_parameter("random family needs n >= 2");
    if (p.ell < 1 || p.ell > kMaxMembers)
        throw invalid_parameter("random family needs 1 <= ell <= " + std::to_string(kMaxMembers));
    if (!(p.overlap >= 0.0 && p.overlap <= 1.0))
        throw invalid_parameter("overlap must lie in [0, 1]");

    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::size_t> pick(0, p.n - 1);
    std::bernoulli_distribution copy(p.overlap);

    std::vector<std::set<Edge>> edges(p.ell);
    std::vector<std::vector<std::size_t>> degree(p.ell, std::vector<std::size_t>(p.n, 0));

    auto try_add = [&](std::size_t m, const Edge& e) {
        if (edges[m].contains(e) || degree[m][e.u] >= p.delta || degree[m][e.v] >= p.delta)
            return false;
        edges[m].insert(e);
        ++degree[m][e.u];
        ++degree[m][e.v];
        return true;
    };

    const std::size_t target = p.n * p.delta / 2;
    const std::size_t budget = 8 * p.n * p.delta + 16;
    for (std::size_t m = 0; m < p.ell; ++m) {
        for (std::size_t attempt = 0; attempt < budget && edges[m].size() < target; ++attempt) {
            auto a = static_cast<Vertex>(pick(rng));
            auto b = static_cast<Vertex>(pick(rng));
            if (a == b)
                continue;
            const Edge e = make_edge(a, b);
            if (!try_add(m, e))
                continue;
            for (std::size_t other = 0; other < p.ell; ++other)
                if (other != m && copy(rng))
                    try_add(other, e);
        }
    }

    std::vector<SimpleGraph> members;
    for (const auto& set : edges)
        members.emplace_back(p.n, std::vector<Edge>(set.begin(), set.end()));
    return GraphFamily(p.n, std::move(members));
}

} // namespace simcolor
