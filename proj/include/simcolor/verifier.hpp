#pragma once

// Independent check that a coloring is simultaneous: every member's restriction
// must be a proper edge coloring. Edges of different members may share a color
// at a vertex.

#include "simcolor/certificate.hpp"
#include "simcolor/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace simcolor {

struct Violation {
    std::size_t member_index = 0;
    Vertex vertex = 0;
    Color color = 0;
    std::pair<Edge, Edge> edges;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::size_t palette_used = 0;   // distinct colors present
    std::vector<Edge> uncolored;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Enumerates every same-color pair at every vertex of every member, and every
/// union edge left uncolored. Throws unknown_edge if the coloring names an
/// edge outside the union.
[[nodiscard]] inline VerifyReport verify(const GraphFamily& family, const SimultaneousColoring& coloring)
{
    VerifyReport report;

    std::set<Edge> union_edges;
    for (const auto& g : family.members())
        union_edges.insert(g.edges().begin(), g.edges().end());
    for (const auto& [e, c] : coloring.assignment)
        if (!union_edges.contains(e))
            throw unknown_edge("coloring names edge " + to_string(e) + " which is in no member");

    for (const auto& e : union_edges)
        if (!coloring.assignment.contains(e))
            report.uncolored.push_back(e);
    report.palette_used = coloring.distinct_colors();

    for (std::size_t m = 0; m < family.size(); ++m) {
        const auto& g = family.member(m);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            std::vector<std::pair<Color, Edge>> at_v;
            for (const auto& inc : g.incident(v))
                if (auto c = coloring.color_of(g.edge(inc.edge)))
                    at_v.emplace_back(*c, g.edge(inc.edge));
            std::sort(at_v.begin(), at_v.end());
            for (std::size_t a = 0; a < at_v.size(); ++a)
                for (std::size_t b = a + 1; b < at_v.size() && at_v[b].first == at_v[a].first; ++b)
                    report.violations.push_back({m, v, at_v[a].first, {at_v[a].second, at_v[b].second}});
        }
    }

    report.valid = report.violations.empty() && report.uncolored.empty();
    return report;
}

[[nodiscard]] inline bool check_certificate(const VerifyReport& report, const BoundCertificate& certificate)
{
    return report.valid && report.palette_used <= certificate.palette_bound;
}

} // namespace simcolor
