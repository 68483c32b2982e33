#pragma once

// Benchmark harness: runs colorers (and the exact oracle where it reaches)
// over a suite of generated instances and emits one CSV row per
// (instance, algorithm).

#include "simcolor/algorithms.hpp"
#include "simcolor/constructions.hpp"
#include "simcolor/exact.hpp"
#include "simcolor/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace simcolor {

enum class SuiteKind { random, star, star3 };

struct BenchSuite {
    SuiteKind kind = SuiteKind::random;
    // random
    std::size_t count = 10;
    std::size_t n = 20;
    std::size_t ell = 2;
    std::size_t delta = 4;
    double overlap = 0.3;
    std::uint64_t seed = 1;
    // star: one instance per ell value, at `delta`; star3: one per delta value
    std::vector<std::size_t> ell_values;
    std::vector<std::size_t> delta_values;

    std::vector<Algorithm> algorithms{Algorithm::sqrt_split, Algorithm::pair_factor};
    bool sweep_k = false;
    std::size_t oracle_max_edges = 20;
    std::chrono::milliseconds oracle_budget{10'000};
    std::size_t jobs = 1;
};

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    std::size_t ell = 0;
    std::size_t delta = 0;
    std::size_t union_edges = 0;
    std::string algorithm;
    std::size_t palette_used = 0;
    std::size_t palette_bound = 0;
    std::optional<std::size_t> exact_chi;
    double wall_ms = 0.0;
    std::string error;   // empty when the row succeeded
};

inline constexpr const char* kBenchCsvHeader =
    "instance,n,ell,delta,union_edges,algorithm,palette_used,palette_bound,exact_chi,wall_ms,error";

struct BenchInstance {
    std::string id;
    GraphFamily family;
};

[[nodiscard]] inline std::vector<BenchInstance> build_suite(const BenchSuite& s)
{
    std::vector<BenchInstance> out;
    switch (s.kind) {
    case SuiteKind::random:
        for (std::size_t i = 0; i < s.count; ++i) {
            const std::uint64_t seed = s.seed + i;
            out.push_back({"random-s" + std::to_string(seed), random_family({s.n, s.ell, s.delta, s.overlap, seed})});
        }
        break;
    case SuiteKind::star:
        for (auto ell : s.ell_values)
            out.push_back({"star-l" + std::to_string(ell) + "-d" + std::to_string(s.delta), star_family(ell, s.delta)});
        break;
    case SuiteKind::star3:
        for (auto delta : s.delta_values)
            out.push_back({"star3-d" + std::to_string(delta), star_three(delta)});
        break;
    }
    return out;
}

[[nodiscard]] inline std::vector<BenchRow> bench_instance(const BenchInstance& inst, const BenchSuite& s)
{
    using Clock = std::chrono::steady_clock;
    const auto& family = inst.family;
    const std::size_t union_edges = build_union(family).base().num_edges();

    std::optional<std::size_t> chi;
    if (union_edges <= s.oracle_max_edges) {
        ExactOptions opts;
        opts.max_conflict_nodes = s.oracle_max_edges;
        opts.time_budget = s.oracle_budget;
        auto exact = exact_chi(family, opts);
        if (exact.status == ExactStatus::exact)
            chi = exact.chi;
    }

    std::vector<BenchRow> rows;
    for (auto algo : s.algorithms) {
        if (!applicable(algo, family))
            continue;
        BenchRow row;
        row.instance = inst.id;
        row.n = family.num_vertices();
        row.ell = family.size();
        row.delta = family.delta();
        row.union_edges = union_edges;
        row.algorithm = to_string(algo);
        row.exact_chi = chi;
        const auto start = Clock::now();
        try {
            auto result = color_family(algo, family, {s.sweep_k});
            row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            row.palette_used = result.certificate.palette_used;
            row.palette_bound = result.certificate.palette_bound;
            auto report = verify(family, result.coloring);
            if (!report.valid)
                row.error = "verify failed";
            else if (row.palette_used > row.palette_bound)
                row.error = "bound exceeded";
        } catch (const std::exception& e) {
            row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rows come back in suite order whatever the number of workers.
[[nodiscard]] inline std::vector<BenchRow> run_bench(const BenchSuite& s)
{
    const auto instances = build_suite(s);
    std::vector<std::vector<BenchRow>> per_instance(instances.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            per_instance[i] = bench_instance(instances[i], s);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(s.jobs, instances.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    std::vector<BenchRow> rows;
    for (auto& group : per_instance)
        for (auto& row : group)
            rows.push_back(std::move(row));
    return rows;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace detail

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << kBenchCsvHeader << '\n';
    for (const auto& r : rows) {
        out << detail::csv_field(r.instance) << ',' << r.n << ',' << r.ell << ',' << r.delta << ',' << r.union_edges
            << ',' << r.algorithm << ',' << r.palette_used << ',' << r.palette_bound << ',';
        if (r.exact_chi)
            out << *r.exact_chi;
        out << ',' << r.wall_ms << ',' << detail::csv_field(r.error) << '\n';
    }
}

} // namespace simcolor
