#pragma once

// Constructive proper edge coloring with at most Delta + 1 colors.
//
// Edges are inserted in canonical order. To color uv we build a maximal fan
// at u starting from v, pick c free at u and d free at the fan end, invert the
// cd-alternating path that starts at u, then rotate the shortest fan prefix
// ending at a vertex where d is free and color its last edge d
// (Misra & Gries, "A constructive proof of Vizing's theorem", 1992).

#include "simcolor/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace simcolor {

/// Proper edge coloring of one graph; colors[i] belongs to graph.edges()[i].
struct EdgeColoring {
    std::vector<Color> colors;
    std::size_t palette_size = 0;
};

namespace detail {

class VizingState {
public:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    explicit VizingState(const SimpleGraph& g)
        : graph_(g),
          palette_(g.max_degree() + 1),
          at_(g.num_vertices() * palette_, kNone),
          color_(g.num_edges(), kUncolored)
    {
    }

    void color_edge(std::size_t e)
    {
        const Edge& edge = graph_.edge(e);
        const Vertex u = edge.u;

        std::vector<Vertex> fan = build_fan(u, edge.v);
        const Color c = first_free(u);
        const Color d = first_free(fan.back());

        if (c != d)
            invert_path(u, c, d);

        // Shortest prefix of the (possibly invalidated) fan that is still a fan
        // and ends at a vertex where d is free.
        std::size_t w = kNone;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                std::size_t link = edge_between(u, fan[i]);
                if (link == kNone || color_[link] == kUncolored || !is_free(fan[i - 1], color_[link]))
                    break;
            }
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (w == kNone)
            throw std::logic_error("vizing: no rotatable fan prefix for edge " + to_string(edge));

        for (std::size_t i = 0; i < w; ++i) {
            std::size_t from = edge_between(u, fan[i]);
            std::size_t next = edge_between(u, fan[i + 1]);
            Color shifted = color_[next];
            unset(next);
            set(from, shifted);
        }
        set(edge_between(u, fan[w]), d);
    }

    [[nodiscard]] EdgeColoring result() const
    {
        EdgeColoring out;
        out.colors.reserve(color_.size());
        for (Color c : color_) {
            if (c == kUncolored)
                throw std::logic_error("vizing: uncolored edge in result");
            out.colors.push_back(c);
            out.palette_size = std::max<std::size_t>(out.palette_size, std::size_t{c} + 1);
        }
        return out;
    }

private:
    static constexpr Color kUncolored = std::numeric_limits<Color>::max();

    std::size_t& slot(Vertex v, Color c) { return at_[std::size_t{v} * palette_ + c]; }
    [[nodiscard]] std::size_t slot(Vertex v, Color c) const { return at_[std::size_t{v} * palette_ + c]; }

    [[nodiscard]] bool is_free(Vertex v, Color c) const { return slot(v, c) == kNone; }

    [[nodiscard]] Color first_free(Vertex v) const
    {
        for (Color c = 0; c < palette_; ++c)
            if (is_free(v, c))
                return c;
        throw std::logic_error("vizing: vertex " + std::to_string(v) + " has no free color");
    }

    [[nodiscard]] std::size_t edge_between(Vertex a, Vertex b) const
    {
        return graph_.index_of(make_edge(a, b)).value_or(kNone);
    }

    void set(std::size_t e, Color c)
    {
        const Edge& edge = graph_.edge(e);
        if (!is_free(edge.u, c) || !is_free(edge.v, c))
            throw std::logic_error("vizing: color " + std::to_string(c) + " not free on " + to_string(edge));
        color_[e] = c;
        slot(edge.u, c) = e;
        slot(edge.v, c) = e;
    }

    void unset(std::size_t e)
    {
        const Edge& edge = graph_.edge(e);
        Color c = color_[e];
        slot(edge.u, c) = kNone;
        slot(edge.v, c) = kNone;
        color_[e] = kUncolored;
    }

    std::vector<Vertex> build_fan(Vertex u, Vertex first)
    {
        std::vector<Vertex> fan{first};
        std::vector<bool> in_fan(graph_.num_vertices(), false);
        in_fan[first] = true;
        for (;;) {
            Vertex tip = fan.back();
            bool extended = false;
            for (Color c = 0; c < palette_ && !extended; ++c) {
                if (!is_free(tip, c))
                    continue;
                std::size_t e = slot(u, c);
                if (e == kNone)
                    continue;
                Vertex x = graph_.edge(e).other(u);
                if (in_fan[x])
                    continue;
                fan.push_back(x);
                in_fan[x] = true;
                extended = true;
            }
            if (!extended)
                return fan;
        }
    }

    // Swap c and d along the maximal path that leaves u on a d-edge.
    void invert_path(Vertex u, Color c, Color d)
    {
        std::vector<std::size_t> path;
        std::vector<bool> seen(graph_.num_edges(), false);
        Vertex x = u;
        Color want = d;
        while (slot(x, want) != kNone) {
            std::size_t e = slot(x, want);
            if (seen[e])
                throw std::logic_error("vizing: alternating path revisits an edge");
            seen[e] = true;
            path.push_back(e);
            x = graph_.edge(e).other(x);
            want = want == d ? c : d;
        }
        std::vector<Color> old;
        old.reserve(path.size());
        for (std::size_t e : path) {
            old.push_back(color_[e]);
            unset(e);
        }
        for (std::size_t i = 0; i < path.size(); ++i)
            set(path[i], old[i] == c ? d : c);
    }

    const SimpleGraph& graph_;
    std::size_t palette_;
    std::vector<std::size_t> at_;   // at_[v * palette_ + c] = edge at v with color c
    std::vector<Color> color_;
};

} // namespace detail

/// Proper edge coloring of `graph` using at most max_degree + 1 colors.
/// Deterministic: canonical edge order, lowest free colors, lowest-color fan
/// extension.
[[nodiscard]] inline EdgeColoring vizing_color(const SimpleGraph& graph)
{
    detail::VizingState state(graph);
    for (std::size_t e = 0; e < graph.num_edges(); ++e)
        state.color_edge(e);
    return state.result();
}

/// True iff no two edges sharing an endpoint carry the same color.
[[nodiscard]] inline bool is_proper(const SimpleGraph& graph, const EdgeColoring& coloring)
{
    if (coloring.colors.size() != graph.num_edges())
        return false;
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
        std::vector<Color> seen;
        for (const auto& inc : graph.incident(v))
            seen.push_back(coloring.colors[inc.edge]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return false;
    }
    return true;
}

} // namespace simcolor
