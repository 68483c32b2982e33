#pragma once

// File formats.
//
// Family:   {"num_vertices": n, "graphs": [[[u, v], ...], ...]}
// Coloring: {"algorithm": "...", "palette_size": p, "colors": [[u, v, c], ...],
//            "certificate": {...} | null, "family_digest": "sha256:..."}
//
// The family digest is SHA-256 over the canonical compact dump of the parsed
// family (sorted edges, no whitespace), so formatting differences in the
// input file do not change it.

#include "simcolor/certificate.hpp"
#include "simcolor/exact.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/sqrt_coloring.hpp"
#include "simcolor/verifier.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace simcolor {

using json = nlohmann::json;

class parse_error : public error {
public:
    using error::error;
};

namespace detail {

inline std::size_t as_count(const json& j, std::string_view what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

} // namespace detail

[[nodiscard]] inline json family_to_json(const GraphFamily& family)
{
    json graphs = json::array();
    for (const auto& g : family.members()) {
        json edges = json::array();
        for (const auto& e : g.edges())
            edges.push_back({e.u, e.v});
        graphs.push_back(std::move(edges));
    }
    return {{"num_vertices", family.num_vertices()}, {"graphs", std::move(graphs)}};
}

[[nodiscard]] inline GraphFamily family_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("num_vertices") || !j.contains("graphs"))
        throw parse_error("family needs \"num_vertices\" and \"graphs\"");
    const std::size_t n = detail::as_count(j.at("num_vertices"), "num_vertices");
    const auto& graphs = j.at("graphs");
    if (!graphs.is_array())
        throw parse_error("\"graphs\" must be an array");

    std::vector<SimpleGraph> members;
    for (const auto& g : graphs) {
        if (!g.is_array())
            throw parse_error("each graph must be an array of edges");
        std::vector<Edge> edges;
        for (const auto& pair : g) {
            if (!pair.is_array() || pair.size() != 2)
                throw parse_error("each edge must be a [u, v] pair");
            auto u = detail::as_count(pair[0], "vertex");
            auto v = detail::as_count(pair[1], "vertex");
            if (u >= n || v >= n)
                throw invalid_graph("edge [" + std::to_string(u) + "," + std::to_string(v) + "] out of range");
            edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        }
        members.emplace_back(n, std::move(edges));
    }
    return GraphFamily(n, std::move(members));
}

[[nodiscard]] inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

[[nodiscard]] inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw parse_error("cannot write " + path);
    out << text;
}

[[nodiscard]] inline GraphFamily read_family_file(const std::string& path)
{
    return family_from_json(parse_json_text(read_text_file(path)));
}

[[nodiscard]] inline std::string canonical_family_text(const GraphFamily& family)
{
    return family_to_json(family).dump();
}

[[nodiscard]] inline std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw error("sha256 failed");
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char byte[3];
        std::snprintf(byte, sizeof byte, "%02x", md[i]);
        hex += byte;
    }
    return hex;
}

[[nodiscard]] inline std::string family_digest(const GraphFamily& family)
{
    return "sha256:" + sha256_hex(canonical_family_text(family));
}

[[nodiscard]] inline json certificate_to_json(const BoundCertificate& c)
{
    json j = {{"algorithm", to_string(c.algorithm)}, {"palette_used", c.palette_used},
              {"palette_bound", c.palette_bound}, {"closed_form_bound", c.closed_form_bound},
              {"ell", c.ell}, {"delta", c.delta}};
    j["k"] = c.k > 0.0 ? json(c.k) : json(nullptr);
    return j;
}

[[nodiscard]] inline Algorithm algorithm_from_string(const std::string& name)
{
    for (auto a : {Algorithm::sqrt_split, Algorithm::pair_factor, Algorithm::trivial_union,
                   Algorithm::vizing_single, Algorithm::exact})
        if (to_string(a) == name)
            return a;
    throw parse_error("unknown algorithm \"" + name + "\"");
}

[[nodiscard]] inline BoundCertificate certificate_from_json(const json& j)
{
    try {
        BoundCertificate c;
        c.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
        c.palette_used = detail::as_count(j.at("palette_used"), "palette_used");
        c.palette_bound = detail::as_count(j.at("palette_bound"), "palette_bound");
        c.closed_form_bound = detail::as_count(j.value("closed_form_bound", json(c.palette_bound)), "closed_form_bound");
        c.ell = detail::as_count(j.at("ell"), "ell");
        c.delta = detail::as_count(j.at("delta"), "delta");
        c.k = j.contains("k") && j.at("k").is_number() ? j.at("k").get<double>() : 0.0;
        return c;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad certificate: ") + e.what());
    }
}

struct ColoringDocument {
    std::string algorithm;
    std::size_t palette_size = 0;
    std::vector<std::tuple<Vertex, Vertex, Color>> colors;   // (u, v, color), u < v, sorted
    std::optional<BoundCertificate> certificate;
    std::string family_digest;

    [[nodiscard]] static ColoringDocument from(const GraphFamily& family, const SimultaneousColoring& coloring,
                                               std::string algorithm,
                                               std::optional<BoundCertificate> certificate = std::nullopt)
    {
        ColoringDocument doc;
        doc.algorithm = std::move(algorithm);
        doc.palette_size = coloring.palette_size;
        for (const auto& [e, c] : coloring.assignment)
            doc.colors.emplace_back(e.u, e.v, c);
        doc.certificate = certificate;
        doc.family_digest = simcolor::family_digest(family);
        return doc;
    }

    [[nodiscard]] SimultaneousColoring coloring() const
    {
        SimultaneousColoring out;
        for (const auto& [u, v, c] : colors)
            out.assign(make_edge(u, v), c);
        out.palette_size = std::max(out.palette_size, palette_size);
        return out;
    }

    [[nodiscard]] json to_json() const
    {
        json triples = json::array();
        for (const auto& [u, v, c] : colors)
            triples.push_back({u, v, c});
        return {{"algorithm", algorithm},
                {"palette_size", palette_size},
                {"colors", std::move(triples)},
                {"certificate", certificate ? certificate_to_json(*certificate) : json(nullptr)},
                {"family_digest", family_digest}};
    }

    [[nodiscard]] static ColoringDocument from_json(const json& j)
    {
        if (!j.is_object() || !j.contains("colors") || !j.contains("family_digest"))
            throw parse_error("coloring needs \"colors\" and \"family_digest\"");
        ColoringDocument doc;
        try {
            doc.algorithm = j.value("algorithm", std::string{});
            doc.palette_size = detail::as_count(j.value("palette_size", json(0)), "palette_size");
            doc.family_digest = j.at("family_digest").get<std::string>();
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad coloring header: ") + e.what());
        }
        if (!j.at("colors").is_array())
            throw parse_error("\"colors\" must be an array");

        std::set<Edge> seen;
        for (const auto& t : j.at("colors")) {
            if (!t.is_array() || t.size() != 3)
                throw parse_error("each color entry must be [u, v, color]");
            auto u = static_cast<Vertex>(detail::as_count(t[0], "vertex"));
            auto v = static_cast<Vertex>(detail::as_count(t[1], "vertex"));
            auto c = static_cast<Color>(detail::as_count(t[2], "color"));
            if (u >= v)
                throw parse_error("color entry [" + std::to_string(u) + "," + std::to_string(v) +
                                  "] is not canonical (u < v)");
            if (!seen.insert({u, v}).second)
                throw parse_error("edge [" + std::to_string(u) + "," + std::to_string(v) + "] colored twice");
            doc.colors.emplace_back(u, v, c);
        }
        std::sort(doc.colors.begin(), doc.colors.end());
        if (j.contains("certificate") && !j.at("certificate").is_null())
            doc.certificate = certificate_from_json(j.at("certificate"));
        return doc;
    }
};

[[nodiscard]] inline json report_to_json(const VerifyReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"member", v.member_index},
                              {"vertex", v.vertex},
                              {"color", v.color},
                              {"edges", {{v.edges.first.u, v.edges.first.v}, {v.edges.second.u, v.edges.second.v}}}});
    json uncolored = json::array();
    for (const auto& e : r.uncolored)
        uncolored.push_back({e.u, e.v});
    return {{"valid", r.valid},
            {"palette_used", r.palette_used},
            {"violations", std::move(violations)},
            {"uncolored", std::move(uncolored)}};
}

[[nodiscard]] inline json probe_to_json(const ProbeReport& report)
{
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"trial", r.trial},
                        {"seed", r.seed},
                        {"delta", r.delta},
                        {"union_edges", r.union_edges},
                        {"chi", r.chi},
                        {"chi_minus_delta", r.excess},
                        {"status", to_string(r.status)},
                        {"flagged", r.flagged}});
    return {{"rows", std::move(rows)}, {"flagged", report.flagged()}};
}

/// Writes each flagged probe instance to `<dir>/probe_counterexample_<seed>.json`
/// and returns the paths written.
inline std::vector<std::string> persist_flagged(const ProbeReport& report, const std::string& dir)
{
    std::vector<std::string> paths;
    for (const auto& r : report.rows) {
        if (!r.flagged || !r.instance)
            continue;
        auto path = dir + "/probe_counterexample_" + std::to_string(r.seed) + ".json";
        write_text_file(path, family_to_json(*r.instance).dump(2) + "\n");
        paths.push_back(std::move(path));
    }
    return paths;
}

} // namespace simcolor
