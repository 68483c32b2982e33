#pragma once

// Exact simultaneous chromatic index of small families, by DSATUR
// branch-and-bound on the conflict graph, plus an exhaustive brute-force
// oracle that shares none of that code.

#include "simcolor/constructions.hpp"
#include "simcolor/graph.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace simcolor {

enum class ExactStatus { exact, timed_out };

inline std::string to_string(ExactStatus s) { return s == ExactStatus::exact ? "exact" : "timed_out"; }

struct ExactOptions {
    std::size_t max_conflict_nodes = 30;
    std::chrono::milliseconds time_budget{60'000};
    /// Run past max_conflict_nodes instead of throwing instance_too_large.
    bool allow_oversize = false;
};

struct ExactResult {
    std::size_t chi = 0;   // best coloring found; optimal when status is exact
    SimultaneousColoring optimal_coloring;
    std::size_t nodes_explored = 0;
    ExactStatus status = ExactStatus::exact;
    std::size_t best_upper = 0;
    std::size_t best_lower = 0;
};

namespace detail {

class DsaturSearch {
public:
    using Clock = std::chrono::steady_clock;

    DsaturSearch(const ConflictGraph& cg, Clock::time_point deadline)
        : cg_(cg), n_(cg.size()), deadline_(deadline), adjacent_(n_ * n_, false)
    {
        for (auto [i, j] : cg.conflicts) {
            adjacent_[i * n_ + j] = true;
            adjacent_[j * n_ + i] = true;
        }
    }

    /// Greedy clique grown from each start node in degree order; the largest wins.
    [[nodiscard]] std::size_t clique_lower_bound() const
    {
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cg_.neighbors[a].size() > cg_.neighbors[b].size();
        });
        std::size_t best = n_ > 0 ? 1 : 0;
        for (std::size_t seed : order) {
            std::vector<std::size_t> clique{seed};
            for (std::size_t x : order) {
                if (x == seed)
                    continue;
                if (std::all_of(clique.begin(), clique.end(), [&](std::size_t y) { return adjacent(x, y); }))
                    clique.push_back(x);
            }
            best = std::max(best, clique.size());
        }
        return best;
    }

    /// Plain DSATUR: initial upper bound and incumbent coloring.
    [[nodiscard]] std::vector<std::size_t> greedy_coloring()
    {
        reset(n_ + 1);
        std::size_t used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t v = select();
            std::size_t c = 0;
            while (blocked(v, c))
                ++c;
            paint(v, c);
            used = std::max(used, c + 1);
        }
        return color_;
    }

    /// Searches for colorings with fewer than `upper` colors, starting from
    /// the incumbent. Returns false on timeout.
    bool solve(std::vector<std::size_t> incumbent, std::size_t upper, std::size_t lower)
    {
        best_ = incumbent;
        best_count_ = upper;
        lower_ = lower;
        reset(upper);
        timed_out_ = false;
        if (best_count_ > lower_)
            branch(0, 0);
        return !timed_out_;
    }

    [[nodiscard]] const std::vector<std::size_t>& best() const noexcept { return best_; }
    [[nodiscard]] std::size_t best_count() const noexcept { return best_count_; }
    [[nodiscard]] std::size_t explored() const noexcept { return explored_; }

private:
    static constexpr std::size_t kUncolored = std::numeric_limits<std::size_t>::max();

    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const { return adjacent_[a * n_ + b]; }
    [[nodiscard]] bool blocked(std::size_t v, std::size_t c) const { return hits_[v * width_ + c] > 0; }

    void reset(std::size_t width)
    {
        width_ = width;
        color_.assign(n_, kUncolored);
        hits_.assign(n_ * width_, 0);
        saturation_.assign(n_, 0);
        uncolored_degree_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            uncolored_degree_[i] = cg_.neighbors[i].size();
    }

    // Most saturated uncolored node; ties by uncolored degree, then index.
    [[nodiscard]] std::size_t select() const
    {
        std::size_t pick = kUncolored;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != kUncolored)
                continue;
            if (pick == kUncolored || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && uncolored_degree_[v] > uncolored_degree_[pick]))
                pick = v;
        }
        return pick;
    }

    void paint(std::size_t v, std::size_t c)
    {
        color_[v] = c;
        for (std::size_t w : cg_.neighbors[v]) {
            --uncolored_degree_[w];
            if (hits_[w * width_ + c]++ == 0)
                ++saturation_[w];
        }
    }

    void unpaint(std::size_t v)
    {
        const std::size_t c = color_[v];
        for (std::size_t w : cg_.neighbors[v]) {
            ++uncolored_degree_[w];
            if (--hits_[w * width_ + c] == 0)
                --saturation_[w];
        }
        color_[v] = kUncolored;
    }

    void branch(std::size_t colored, std::size_t used)
    {
        if (timed_out_ || best_count_ <= lower_)
            return;
        if ((++explored_ & 0x3ff) == 0 && Clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }
        if (colored == n_) {
            best_ = color_;
            best_count_ = used;
            return;
        }
        const std::size_t v = select();
        // Existing colors, then at most one new color, staying below the incumbent.
        const std::size_t limit = std::min(used + 1, best_count_ - 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (blocked(v, c))
                continue;
            paint(v, c);
            branch(colored + 1, std::max(used, c + 1));
            unpaint(v);
            if (timed_out_ || best_count_ <= lower_)
                return;
        }
    }

    const ConflictGraph& cg_;
    std::size_t n_;
    Clock::time_point deadline_;
    std::vector<bool> adjacent_;

    std::size_t width_ = 0;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> hits_;   // hits_[v * width_ + c] = neighbours of v colored c
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> uncolored_degree_;

    std::vector<std::size_t> best_;
    std::size_t best_count_ = 0;
    std::size_t lower_ = 0;
    std::size_t explored_ = 0;
    bool timed_out_ = false;
};

} // namespace detail

[[nodiscard]] inline ExactResult exact_chi(const GraphFamily& family, const ExactOptions& options = {})
{
    const auto cg = conflict_graph(family);
    if (cg.size() > options.max_conflict_nodes && !options.allow_oversize)
        throw instance_too_large("instance has " + std::to_string(cg.size()) + " union edges, cap is " +
                                 std::to_string(options.max_conflict_nodes));

    ExactResult result;
    if (cg.size() == 0)
        return result;

    detail::DsaturSearch search(cg, detail::DsaturSearch::Clock::now() + options.time_budget);
    const auto lower = search.clique_lower_bound();
    auto incumbent = search.greedy_coloring();
    const auto upper = static_cast<std::size_t>(*std::max_element(incumbent.begin(), incumbent.end())) + 1;

    const bool finished = search.solve(std::move(incumbent), upper, lower);

    result.chi = search.best_count();
    result.nodes_explored = search.explored();
    result.best_upper = result.chi;
    result.best_lower = finished ? result.chi : lower;
    result.status = finished ? ExactStatus::exact : ExactStatus::timed_out;
    for (std::size_t i = 0; i < cg.size(); ++i)
        result.optimal_coloring.assign(cg.nodes[i], static_cast<Color>(search.best()[i]));
    return result;
}

/// Smallest c such that some assignment of c colors to the union edges is
/// simultaneous, found by trying all c^m assignments (first edge pinned to
/// color 0). Test oracle only; works directly from member edge lists.
[[nodiscard]] inline std::size_t brute_force_chi(const GraphFamily& family, std::size_t max_edges = 8)
{
    std::map<Edge, MemberSet> owners;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& e : family.member(i).edges())
            owners[e] |= MemberSet{1} << i;
    if (owners.size() > max_edges)
        throw instance_too_large("brute force limited to " + std::to_string(max_edges) + " edges, got " +
                                 std::to_string(owners.size()));

    std::vector<std::pair<Edge, MemberSet>> items(owners.begin(), owners.end());
    const std::size_t m = items.size();
    if (m == 0)
        return 0;

    std::vector<std::pair<std::size_t, std::size_t>> clashes;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Edge& x = items[a].first;
            const Edge& y = items[b].first;
            const bool share = x.touches(y.u) || x.touches(y.v);
            if (share && (items[a].second & items[b].second) != 0)
                clashes.emplace_back(a, b);
        }

    for (std::size_t c = 1;; ++c) {
        std::vector<std::size_t> assignment(m, 0);
        for (;;) {
            bool ok = std::none_of(clashes.begin(), clashes.end(),
                                   [&](auto p) { return assignment[p.first] == assignment[p.second]; });
            if (ok)
                return c;
            // Odometer over positions 1..m-1.
            std::size_t pos = 1;
            while (pos < m && ++assignment[pos] == c)
                assignment[pos++] = 0;
            if (pos >= m)
                break;
        }
    }
}

struct ProbeParams {
    std::size_t trials = 100;
    std::size_t n = 7;
    std::size_t delta = 3;
    double overlap = 0.5;
    std::uint64_t seed = 1;
};

struct ProbeRow {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t delta = 0;
    std::size_t union_edges = 0;
    std::size_t chi = 0;
    std::int64_t excess = 0;   // chi - delta
    ExactStatus status = ExactStatus::exact;
    bool flagged = false;      // exact chi > delta + 1
    std::optional<GraphFamily> instance;   // kept only when flagged
};

struct ProbeReport {
    std::vector<ProbeRow> rows;

    [[nodiscard]] std::size_t flagged() const
    {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const ProbeRow& r) { return r.flagged; }));
    }
};

/// Exact chi of seeded random pairs, recording how far each lands above
/// Delta. Instances needing more than Delta + 1 colors are flagged and kept.
/// Report only: nothing here is a pass/fail assertion.
[[nodiscard]] inline ProbeReport probe_pair_conjecture(const ProbeParams& p, const ExactOptions& options = {})
{
    ProbeReport report;
    for (std::size_t t = 0; t < p.trials; ++t) {
        const std::uint64_t seed = p.seed + t;
        auto family = random_family({p.n, 2, p.delta, p.overlap, seed});

        ProbeRow row;
        row.trial = t;
        row.seed = seed;
        row.delta = family.delta();
        row.union_edges = build_union(family).base().num_edges();

        ExactOptions opts = options;
        opts.allow_oversize = true;
        auto exact = exact_chi(family, opts);
        row.chi = exact.chi;
        row.excess = static_cast<std::int64_t>(exact.chi) - static_cast<std::int64_t>(row.delta);
        row.status = exact.status;
        row.flagged = exact.status == ExactStatus::exact && exact.chi > row.delta + 1;
        if (row.flagged)
            row.instance = std::move(family);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace simcolor
