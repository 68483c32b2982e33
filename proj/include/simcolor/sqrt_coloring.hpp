#pragma once

// Simultaneous coloring of ell graphs by multiplicity split.
//
// Union edges contained in at least k members form the heavy graph, whose
// degree is at most ell * Delta / k; it is Vizing-colored. The remaining light
// edges sit in fewer than k members, so an edge in r members sees at most
// 2r(Delta - 1) constrained neighbours and a greedy pass over a separate
// palette of 2 * ceil(k - 1) * (Delta - 1) + 1 colors always succeeds.
// k = sqrt(ell / 2) minimises the sum, giving 2 sqrt(2 ell) Delta - sqrt(2 ell) + 2.

#include "simcolor/certificate.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/vizing.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace simcolor {

/// Result of any of the colorers: the coloring and the bound it certifies.
struct ColoringResult {
    SimultaneousColoring coloring;
    BoundCertificate certificate;
};

/// Half-open color interval [first, last).
struct ColorRange {
    Color first = 0;
    Color last = 0;

    [[nodiscard]] std::size_t size() const noexcept { return last > first ? last - first : 0; }
};

struct MultiplicitySplit {
    double k = 1.0;
    SimpleGraph heavy;   // multiplicity >= k
    SimpleGraph light;   // multiplicity < k
};

namespace detail {

// Guards floor/ceil of quotients that are mathematically integral but may
// come out a hair off in floating point (k = sqrt(ell / 2)).
inline constexpr double kRoundingSlack = 1e-9;

inline std::int64_t floor_slack(double x) { return static_cast<std::int64_t>(std::floor(x + kRoundingSlack)); }
inline std::int64_t ceil_slack(double x) { return static_cast<std::int64_t>(std::ceil(x - kRoundingSlack)); }

} // namespace detail

/// Multiplicity threshold minimising ell / k + 2k.
[[nodiscard]] inline double optimal_threshold(std::size_t ell)
{
    return std::sqrt(static_cast<double>(ell) / 2.0);
}

/// Largest multiplicity a light edge can have: the largest integer r < k.
[[nodiscard]] inline std::size_t max_light_multiplicity(double k)
{
    return static_cast<std::size_t>(std::max<std::int64_t>(0, detail::ceil_slack(k - 1.0)));
}

/// Palette reserved for the light part: 2 * ceil(k - 1) * (Delta - 1) + 1.
[[nodiscard]] inline std::size_t light_palette_size(double k, std::size_t delta)
{
    if (delta == 0)
        return 1;
    return 2 * max_light_multiplicity(k) * (delta - 1) + 1;
}

/// Checkable integer bound ceil(ell Delta / k) + 1 + 2 ceil(k - 1)(Delta - 1) + 1.
/// Families with Delta = 0 have no edges; the bound is 0 there.
[[nodiscard]] inline std::size_t sqrt_palette_bound(std::size_t ell, std::size_t delta, double k)
{
    if (delta == 0)
        return 0;
    auto heavy = detail::ceil_slack(static_cast<double>(ell * delta) / k) + 1;
    return static_cast<std::size_t>(heavy) + light_palette_size(k, delta);
}

/// ceil(2 sqrt(2 ell) Delta - sqrt(2 ell) + 2), clamped at 0.
[[nodiscard]] inline std::size_t sqrt_closed_form_bound(std::size_t ell, std::size_t delta)
{
    if (delta == 0)
        return 0;
    const double s = std::sqrt(2.0 * static_cast<double>(ell));
    const double value = 2.0 * s * static_cast<double>(delta) - s + 2.0;
    return static_cast<std::size_t>(std::max<std::int64_t>(0, detail::ceil_slack(value)));
}

[[nodiscard]] inline MultiplicitySplit split_by_multiplicity(const UnionGraph& u, double k)
{
    if (!(k > 0.0))
        throw invalid_parameter("multiplicity threshold must be positive");
    const auto& base = u.base();
    auto is_heavy = [&](std::size_t i) { return static_cast<double>(u.multiplicity(i)) >= k; };

    MultiplicitySplit split;
    split.k = k;
    split.heavy = filter_edges(base, is_heavy);
    split.light = filter_edges(base, [&](std::size_t i) { return !is_heavy(i); });
    return split;
}

/// Colors `edges` one at a time with the smallest color in `palette` that no
/// already-colored edge uses at either endpoint within a member shared with
/// the edge. Edges must belong to the union. Throws palette_exhausted when the
/// palette is too small.
[[nodiscard]] inline SimultaneousColoring greedy_extend(const UnionGraph& u, SimultaneousColoring partial,
                                                        std::span<const Edge> edges, ColorRange palette)
{
    const auto& base = u.base();
    std::vector<bool> forbidden(palette.size());

    for (const Edge& e : edges) {
        auto idx = base.index_of(e);
        if (!idx)
            throw unknown_edge("greedy_extend: " + to_string(e) + " is not a union edge");
        const MemberSet mine = u.membership(*idx);

        std::fill(forbidden.begin(), forbidden.end(), false);
        for (Vertex end : {e.u, e.v})
            for (const auto& inc : base.incident(end)) {
                if (inc.edge == *idx || (u.membership(inc.edge) & mine) == 0)
                    continue;
                auto c = partial.color_of(base.edge(inc.edge));
                if (c && *c >= palette.first && *c < palette.last)
                    forbidden[*c - palette.first] = true;
            }

        auto free = std::find(forbidden.begin(), forbidden.end(), false);
        if (free == forbidden.end())
            throw palette_exhausted("no free color for " + to_string(e) + " in a palette of " +
                                    std::to_string(palette.size()));
        partial.assign(e, palette.first + static_cast<Color>(free - forbidden.begin()));
    }
    partial.palette_size = std::max<std::size_t>(partial.palette_size, palette.last);
    return partial;
}

[[nodiscard]] inline SimultaneousColoring greedy_extend(const GraphFamily& family, SimultaneousColoring partial,
                                                        std::span<const Edge> edges, ColorRange palette)
{
    return greedy_extend(build_union(family), std::move(partial), edges, palette);
}

namespace detail {

inline SimultaneousColoring color_split(const UnionGraph& u, std::size_t delta, double k)
{
    auto split = split_by_multiplicity(u, k);

    const auto heavy_cap = floor_slack(static_cast<double>(u.ell() * delta) / k);
    if (static_cast<std::int64_t>(split.heavy.max_degree()) > heavy_cap)
        throw std::logic_error("heavy part degree " + std::to_string(split.heavy.max_degree()) +
                               " exceeds ell*Delta/k = " + std::to_string(heavy_cap));

    SimultaneousColoring coloring;
    auto heavy = vizing_color(split.heavy);
    for (std::size_t i = 0; i < split.heavy.num_edges(); ++i)
        coloring.assign(split.heavy.edge(i), heavy.colors[i]);
    coloring.palette_size = heavy.palette_size;

    if (split.light.num_edges() == 0)
        return coloring;

    const auto offset = static_cast<Color>(heavy.palette_size);
    const ColorRange light{offset, offset + static_cast<Color>(light_palette_size(k, delta))};
    coloring = greedy_extend(u, std::move(coloring), split.light.edges(), light);

    // Trim the reservation back to the colors actually used.
    coloring.palette_size = 0;
    for (const auto& [e, c] : coloring.assignment)
        coloring.palette_size = std::max<std::size_t>(coloring.palette_size, std::size_t{c} + 1);
    return coloring;
}

} // namespace detail

struct SqrtOptions {
    /// Also try every integer threshold 1..ell and keep the smallest palette.
    bool sweep_k = false;
};

[[nodiscard]] inline ColoringResult color_union_sqrt(const GraphFamily& family, SqrtOptions options = {})
{
    const auto u = build_union(family);
    const std::size_t ell = family.size();
    const std::size_t delta = family.delta();
    const double k = optimal_threshold(ell);

    ColoringResult best;
    best.coloring = detail::color_split(u, delta, k);
    best.certificate.k = k;

    if (options.sweep_k) {
        for (std::size_t candidate = 1; candidate <= ell; ++candidate) {
            auto trial = detail::color_split(u, delta, static_cast<double>(candidate));
            if (trial.palette_size < best.coloring.palette_size) {
                best.coloring = std::move(trial);
                best.certificate.k = static_cast<double>(candidate);
            }
        }
    }

    // The bound is always the one for sqrt(ell / 2): a sweep only ever lowers usage.
    best.certificate.algorithm = Algorithm::sqrt_split;
    best.certificate.ell = ell;
    best.certificate.delta = delta;
    best.certificate.palette_used = best.coloring.palette_size;
    best.certificate.palette_bound = sqrt_palette_bound(ell, delta, k);
    best.certificate.closed_form_bound = sqrt_closed_form_bound(ell, delta);
    return best;
}

/// One Vizing coloring of the whole union: at most ell * Delta + 1 colors.
[[nodiscard]] inline ColoringResult color_union_trivial(const GraphFamily& family)
{
    const auto u = build_union(family);
    auto edge_colors = vizing_color(u.base());

    ColoringResult out;
    for (std::size_t i = 0; i < u.base().num_edges(); ++i)
        out.coloring.assign(u.base().edge(i), edge_colors.colors[i]);
    out.coloring.palette_size = edge_colors.palette_size;

    const std::size_t bound = family.size() * family.delta() + 1;
    out.certificate = {Algorithm::trivial_union, edge_colors.palette_size, bound, bound, family.size(),
                       family.delta(), 0.0};
    return out;
}

/// Vizing coloring of a single-member family.
[[nodiscard]] inline ColoringResult color_single(const GraphFamily& family)
{
    if (family.size() != 1)
        throw wrong_arity("vizing needs exactly one graph, got " + std::to_string(family.size()));
    auto out = color_union_trivial(family);
    out.certificate.algorithm = Algorithm::vizing_single;
    return out;
}

} // namespace simcolor
