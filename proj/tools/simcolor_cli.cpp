// simcolor: generate families, color them, compute exact optima, verify
// colorings and run benchmarks.
//
// Exit codes: 0 success / valid, 1 invalid coloring or internal verification
// failure, 2 input or usage error.

#include "simcolor/simcolor.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace simcolor;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_text_file(out_path, text);
}

struct GenerateArgs {
    std::size_t ell = 2;
    std::size_t delta = 4;
    std::size_t n = 20;
    double overlap = 0.3;
    std::uint64_t seed = 0;
    bool pad = false;
    std::string out;
};

int run_generate(const std::string& kind, const GenerateArgs& a)
{
    std::optional<GraphFamily> family;
    if (kind == "star")
        family = star_family(a.ell, a.delta, a.pad);
    else if (kind == "star3")
        family = star_three(a.delta);
    else
        family = random_family({a.n, a.ell, a.delta, a.overlap, a.seed});
    emit(a.out, family_to_json(*family).dump() + "\n");
    return kOk;
}

struct ColorArgs {
    std::string algo = "sqrt";
    std::string family;
    std::string out;
    bool sweep_k = false;
};

int run_color(const ColorArgs& a)
{
    const auto algo = parse_colorer(a.algo);
    const auto family = read_family_file(a.family);
    if (!applicable(algo, family))
        throw wrong_arity("--algo " + a.algo + " cannot color a family of " + std::to_string(family.size()) +
                          " graphs");
    auto result = color_family(algo, family, {a.sweep_k});

    auto report = verify(family, result.coloring);
    if (!check_certificate(report, result.certificate)) {
        std::cerr << "internal error: " << a.algo << " produced an invalid coloring or exceeded its bound\n"
                  << report_to_json(report).dump(2) << "\n";
        return kInvalid;
    }
    auto doc = ColoringDocument::from(family, result.coloring, a.algo, result.certificate);
    emit(a.out, doc.to_json().dump(2) + "\n");
    return kOk;
}

struct ExactArgs {
    std::string family;
    std::size_t max_edges = 30;
    double timeout = 60.0;
    bool allow_timeout = false;
    std::string out;
};

int run_exact(const ExactArgs& a)
{
    const auto family = read_family_file(a.family);
    ExactOptions opts;
    opts.max_conflict_nodes = a.max_edges;
    opts.time_budget = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000.0));
    opts.allow_oversize = a.allow_timeout;
    auto result = exact_chi(family, opts);

    json summary = {{"chi", result.chi},
                    {"status", to_string(result.status)},
                    {"lower", result.best_lower},
                    {"upper", result.best_upper},
                    {"nodes_explored", result.nodes_explored}};
    std::cout << summary.dump() << "\n";
    if (!a.out.empty()) {
        auto doc = ColoringDocument::from(family, result.optimal_coloring, "exact");
        write_text_file(a.out, doc.to_json().dump(2) + "\n");
    }
    return kOk;
}

int run_verify(const std::string& family_path, const std::string& coloring_path)
{
    const auto family = read_family_file(family_path);
    const auto doc = ColoringDocument::from_json(parse_json_text(read_text_file(coloring_path)));
    if (doc.family_digest != family_digest(family)) {
        std::cerr << "coloring was computed for a different family (digest " << doc.family_digest << ", expected "
                  << family_digest(family) << ")\n";
        return kUsage;
    }
    const auto report = verify(family, doc.coloring());
    auto out = report_to_json(report);
    bool ok = report.valid;
    if (doc.certificate) {
        const bool holds = check_certificate(report, *doc.certificate);
        out["certificate_ok"] = holds;
        ok = ok && holds;
    }
    std::cout << out.dump(2) << "\n";
    return ok ? kOk : kInvalid;
}

int run_stats(const std::string& family_path)
{
    const auto family = read_family_file(family_path);
    const auto u = build_union(family);
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < u.base().num_edges(); ++i)
        ++histogram[u.multiplicity(i)];
    json hist = json::object();
    for (auto [m, count] : histogram)
        hist[std::to_string(m)] = count;
    json out = {{"n", family.num_vertices()},
                {"ell", family.size()},
                {"delta", family.delta()},
                {"union_edges", u.base().num_edges()},
                {"union_delta", u.base().max_degree()},
                {"multiplicity_histogram", std::move(hist)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
}

struct BenchArgs {
    std::string kind = "random";
    std::vector<std::string> algos{"sqrt", "pair"};
    std::string csv;
    double oracle_timeout = 10.0;
};

int run_bench_cmd(BenchSuite suite, const BenchArgs& a)
{
    if (a.kind == "random")
        suite.kind = SuiteKind::random;
    else if (a.kind == "star")
        suite.kind = SuiteKind::star;
    else
        suite.kind = SuiteKind::star3;
    suite.algorithms.clear();
    for (const auto& name : a.algos)
        suite.algorithms.push_back(parse_colorer(name));
    suite.oracle_budget = std::chrono::milliseconds(static_cast<long long>(a.oracle_timeout * 1000.0));

    auto rows = run_bench(suite);
    std::ostringstream csv;
    write_csv(csv, rows);
    emit(a.csv, csv.str());
    return kOk;
}

struct ProbeArgs {
    ProbeParams params;
    double timeout = 10.0;
    std::string out_dir;
};

int run_probe(const ProbeArgs& a)
{
    ExactOptions opts;
    opts.time_budget = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000.0));
    auto report = probe_pair_conjecture(a.params, opts);
    auto out = probe_to_json(report);
    if (!a.out_dir.empty())
        out["persisted"] = persist_flagged(report, a.out_dir);
    std::cout << out.dump(2) << "\n";
    return kOk;
}

// "--l" is accepted as an alias of "--ell".
std::vector<std::string> normalize_args(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string arg = argv[i];
        if (arg == "--l")
            arg = "--ell";
        else if (arg.rfind("--l=", 0) == 0)
            arg = "--ell=" + arg.substr(4);
        args.push_back(std::move(arg));
    }
    return args;   // CLI11 wants reverse order
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simultaneous edge coloring of graph families"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a family as JSON");
    generate->require_subcommand(1);
    GenerateArgs gen;

    auto* gen_star = generate->add_subcommand("star", "Pairs of star blocks (needs every edge distinct)");
    gen_star->add_option("--ell", gen.ell, "Number of graphs allowed")->required();
    gen_star->add_option("--delta", gen.delta, "Even maximum degree")->required();
    gen_star->add_flag("--pad", gen.pad, "Pad with empty graphs up to --ell members");
    gen_star->add_option("-o,--out", gen.out, "Output file (default stdout)");

    auto* gen_star3 = generate->add_subcommand("star3", "Three-graph star construction");
    gen_star3->add_option("--delta", gen.delta, "Maximum degree")->required();
    gen_star3->add_option("-o,--out", gen.out, "Output file (default stdout)");

    auto* gen_random = generate->add_subcommand("random", "Seeded random family");
    gen_random->add_option("--n", gen.n, "Vertices")->required();
    gen_random->add_option("--ell", gen.ell, "Number of graphs")->required();
    gen_random->add_option("--delta", gen.delta, "Degree cap per graph")->required();
    gen_random->add_option("--overlap", gen.overlap, "Probability of copying an edge into another graph")
        ->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", gen.seed, "Random seed")->required();
    gen_random->add_option("-o,--out", gen.out, "Output file (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "Color a family and write a coloring document");
    ColorArgs col;
    color->add_option("--algo", col.algo, "sqrt | pair | trivial | vizing")
        ->check(CLI::IsMember({"sqrt", "pair", "trivial", "vizing"}));
    color->add_option("family", col.family, "Family JSON file")->required();
    color->add_option("-o,--out", col.out, "Output file (default stdout)");
    color->add_flag("--sweep-k", col.sweep_k, "sqrt: also try every integer threshold");

    // exact
    auto* exact = app.add_subcommand("exact", "Exact simultaneous chromatic index");
    ExactArgs ex;
    exact->add_option("family", ex.family, "Family JSON file")->required();
    exact->add_option("--max-edges", ex.max_edges, "Largest union to attempt");
    exact->add_option("--timeout", ex.timeout, "Time budget in seconds");
    exact->add_flag("--allow-timeout", ex.allow_timeout, "Attempt oversize instances; may end timed out");
    exact->add_option("-o,--out", ex.out, "Write the optimal coloring here");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a family");
    std::string verify_family, verify_coloring;
    verify_cmd->add_option("family", verify_family, "Family JSON file")->required();
    verify_cmd->add_option("coloring", verify_coloring, "Coloring JSON file")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "Summarize a family");
    std::string stats_family;
    stats->add_option("family", stats_family, "Family JSON file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Run colorers over a generated suite, CSV out");
    BenchSuite suite;
    BenchArgs bargs;
    bench->add_option("--kind", bargs.kind, "random | star | star3")
        ->check(CLI::IsMember({"random", "star", "star3"}));
    bench->add_option("--count", suite.count, "random: number of instances");
    bench->add_option("--n", suite.n, "random: vertices");
    bench->add_option("--ell", suite.ell, "random: graphs per family");
    bench->add_option("--delta", suite.delta, "random: degree cap; star: even delta");
    bench->add_option("--overlap", suite.overlap, "random: edge copy probability")->check(CLI::Range(0.0, 1.0));
    bench->add_option("--seed", suite.seed, "random: first seed");
    bench->add_option("--ell-values", suite.ell_values, "star: ell per instance")->delimiter(',');
    bench->add_option("--delta-values", suite.delta_values, "star3: delta per instance")->delimiter(',');
    bench->add_option("--algos", bargs.algos, "Colorers to run")->delimiter(',');
    bench->add_flag("--sweep-k", suite.sweep_k, "sqrt: also try every integer threshold");
    bench->add_option("--oracle-max-edges", suite.oracle_max_edges, "Run the exact oracle up to this many edges");
    bench->add_option("--oracle-timeout", bargs.oracle_timeout, "Oracle budget per instance, seconds");
    bench->add_option("--jobs", suite.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--csv", bargs.csv, "CSV output file (default stdout)");

    // probe
    auto* probe = app.add_subcommand("probe", "Exact chi of random pairs versus Delta (report only)");
    ProbeArgs pargs;
    probe->add_option("--trials", pargs.params.trials, "Number of random pairs");
    probe->add_option("--n", pargs.params.n, "Vertices");
    probe->add_option("--delta", pargs.params.delta, "Degree cap");
    probe->add_option("--overlap", pargs.params.overlap, "Edge copy probability")->check(CLI::Range(0.0, 1.0));
    probe->add_option("--seed", pargs.params.seed, "First seed");
    probe->add_option("--timeout", pargs.timeout, "Oracle budget per instance, seconds");
    probe->add_option("--out-dir", pargs.out_dir, "Directory for flagged instances");

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_star)
            return run_generate("star", gen);
        if (*gen_star3)
            return run_generate("star3", gen);
        if (*gen_random)
            return run_generate("random", gen);
        if (*color)
            return run_color(col);
        if (*exact)
            return run_exact(ex);
        if (*verify_cmd)
            return run_verify(verify_family, verify_coloring);
        if (*stats)
            return run_stats(stats_family);
        if (*bench)
            return run_bench_cmd(suite, bargs);
        if (*probe)
            return run_probe(pargs);
    } catch (const simcolor::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
