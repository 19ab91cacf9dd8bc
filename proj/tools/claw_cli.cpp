// Command-line driver: graph generation, MIS/MM runs with probe accounting,
// beta oracles, the deterministic-MM adversary duels, and scaling sweeps.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "claw/adversary.hpp"
#include "claw/applications.hpp"
#include "claw/bench.hpp"
#include "claw/generators.hpp"
#include "claw/graph.hpp"
#include "claw/mis.hpp"
#include "claw/mm.hpp"
#include "claw/verify.hpp"

namespace {

using namespace claw;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

RunStats make_row(const std::string& family, const Graph& g, std::uint64_t beta, std::uint64_t seed,
                  const std::string& algorithm, const ProbeCounter& pc) {
    RunStats row;
    row.family = family;
    row.n = g.num_vertices();
    row.beta = beta;
    row.seed = seed;
    row.algorithm = algorithm;
    row.degree_probes = pc.degree_probes;
    row.neighbor_probes = pc.neighbor_probes;
    return row;
}

int cmd_generate(const std::string& family, std::uint64_t n, std::uint64_t seed, const std::string& out_path,
                 double a, double b) {
    GenSpec spec{family_from_name(family), n, a, b, seed};
    const Graph g = generate(spec);
    write_graph(g, std::filesystem::path(out_path));
    std::cout << "wrote " << out_path << ": n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
    return 0;
}

int cmd_beta(const std::string& input, const std::string& mode) {
    const Graph g = read_graph(std::filesystem::path(input));
    if (mode == "exact") {
        std::cout << neighborhood_independence(g) << '\n';
    } else {
        std::cout << greedy_beta_lower_bound(g) << '\n';
    }
    return 0;
}

int cmd_mis(const std::string& input, const std::string& order_kind, const std::string& stats_out) {
    const Graph g = read_graph(std::filesystem::path(input));
    ProbeCounter pc;
    MisResult result;
    if (order_kind == "identity") {
        result = greedy_mis(g, &pc);
    } else if (order_kind == "caro-wei") {
        result = caro_wei_mis(g, &pc);
    } else if (order_kind.starts_with("file:")) {
        const std::string path = order_kind.substr(5);
        std::ifstream in(path);
        if (!in) throw std::runtime_error(path + ": cannot open order file");
        std::vector<Vertex> order;
        std::uint64_t v = 0;
        while (in >> v) order.push_back(static_cast<Vertex>(v));
        result = greedy_mis(g, order, &pc);
    } else {
        throw std::runtime_error("unknown order: " + order_kind);
    }
    std::cout << "mis size=" << result.set.size() << " work=" << result.stats.work
              << " marks=" << result.stats.marks_set << " degree_probes=" << pc.degree_probes
              << " neighbor_probes=" << pc.neighbor_probes << '\n';
    if (!stats_out.empty()) {
        RunStats row = make_row(input, g, 0, 0, "mis", pc);
        row.work = result.stats.work;
        auto out = open_out(stats_out);
        write_csv(std::vector<RunStats>{row}, out);
    }
    return 0;
}

int cmd_mm(const std::string& input, const std::string& beta_arg, std::uint64_t seed, std::uint64_t trials,
           std::uint64_t cap_constant, const std::string& stats_out) {
    const Graph g = read_graph(std::filesystem::path(input));
    const bool autobeta = beta_arg == "auto";
    std::uint64_t beta = 0;
    if (!autobeta) {
        beta = std::stoull(beta_arg);
        if (beta == 0) throw std::runtime_error("--beta must be positive or 'auto'");
    }
    std::vector<RunStats> rows;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t run_seed = mix_seed(seed, t);
        Rng rng(run_seed);
        ProbeCounter pc;
        const MmResult r = autobeta ? mm_unknown_beta(g, rng, &pc, cap_constant)
                                    : randomized_greedy_mm(g, beta, rng, &pc);
        std::cout << "trial " << t << ": matched=" << r.matching.size()
                  << " unmatched=" << r.matching.unmatched_count() << " iterations=" << r.stats.iterations
                  << " completed=" << r.completed;
        if (autobeta) std::cout << " rounds=" << r.stats.guess_rounds.size();
        std::cout << '\n';
        RunStats row = make_row(input, g, beta, run_seed, autobeta ? "mm-auto" : "mm", pc);
        row.iterations = r.stats.iterations;
        row.work = r.stats.iterations + r.stats.low_degree_scans;
        row.completed = r.completed;
        rows.push_back(std::move(row));
    }
    if (!stats_out.empty()) {
        auto out = open_out(stats_out);
        write_csv(rows, out);
    }
    return 0;
}

int cmd_adversary(const std::vector<std::uint64_t>& ks, const std::string& strategy_name, const std::string& mode,
                  std::uint64_t seed, const std::string& report_path) {
    std::ostringstream report;
    report << "k,queries,refuted,witness_hash\n";
    for (const std::uint64_t k : ks) {
        const auto strategy = make_strategy(strategy_name);
        std::optional<Rng> choice;
        if (mode == "random") choice.emplace(mix_seed(seed, k));
        const Verdict v = referee(*strategy, k, choice ? &*choice : nullptr);
        std::ostringstream hash;
        if (v.witness) hash << std::hex << std::setw(16) << std::setfill('0') << graph_fingerprint(*v.witness);
        std::cout << "k=" << k << " strategy=" << strategy->name() << " queries=" << v.queries
                  << " budget=" << 2 * k * k << " refuted=" << (v.refuted ? "yes" : "no")
                  << (v.witness ? " witness=" + hash.str() : "") << '\n';
        report << k << ',' << v.queries << ',' << (v.refuted ? 1 : 0) << ','
               << (v.witness ? hash.str() : "-") << '\n';
    }
    if (!report_path.empty()) open_out(report_path) << report.str();
    return 0;
}

int cmd_bench(const std::string& family, const std::string& algo_arg, const std::vector<std::uint64_t>& ns,
              std::uint64_t trials, std::uint64_t seed, const std::string& out_path, const std::string& fit_model,
              const std::string& fit_out, double a, double b) {
    GenSpec spec{family_from_name(family), 0, a, b, 0};
    const Algo algo = algo_from_name(algo_arg);
    const auto rows = sweep(spec, ns, trials, algo, seed);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_csv(rows, out);
    }
    if (!fit_model.empty()) {
        const FitModel model = fit_model == "nb" ? FitModel::nb : FitModel::nblogn;
        const FitReport report = fit(rows, model);
        std::cout << fit_summary(report);
        if (!fit_out.empty()) {
            auto out = open_out(fit_out);
            write_fit_csv(report, out);
        }
    }
    const bool ok = mis_bounds_hold(rows);
    bool completed = true;
    for (const auto& r : rows) completed = completed && r.completed;
    std::cout << rows.size() << " runs, hard bounds " << (ok ? "held" : "VIOLATED") << ", completed "
              << (completed ? "all" : "NOT ALL") << '\n';
    return ok && completed ? 0 : 1;
}

int cmd_apps(const std::string& task, const std::string& input, std::uint64_t seed, const std::string& out_path) {
    const Graph g = read_graph(std::filesystem::path(input));
    Rng rng(seed);
    ProbeCounter pc;
    std::ostringstream body;
    if (task == "vc") {
        const auto cover = approx_vertex_cover(g, rng, &pc);
        std::cout << "vertex cover size=" << cover.size() << " probes=" << pc.total() << '\n';
        for (Vertex v : cover.members) body << v << '\n';
    } else if (task == "caro-wei") {
        const auto set = caro_wei_independent_set(g, &pc);
        std::cout << "independent set size=" << set.size() << " bound=" << caro_wei_sum_approx(g)
                  << " probes=" << pc.total() << '\n';
        for (Vertex v : set.members) body << v << '\n';
    } else if (task == "mm-line") {
        const auto m = mm_via_line_graph(g, rng, &pc);
        std::cout << "matching size=" << m.size() << " unmatched=" << m.unmatched_count() << '\n';
        for (const auto& [u, v] : m.edges) body << u << ' ' << v << '\n';
    } else {
        throw std::runtime_error("unknown task: " + task);
    }
    if (!out_path.empty()) open_out(out_path) << body.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sublinear maximal independent set / maximal matching toolkit"};
    app.require_subcommand(1);

    // generate
    std::string gen_family;
    std::uint64_t gen_n = 0, gen_seed = 0;
    std::string gen_out;
    double gen_a = 0, gen_b = 0;
    auto* gen = app.add_subcommand("generate", "generate a family instance and write it to a graph file");
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output graph file")->required();
    gen->add_option("--a", gen_a, "family knob a (degree / part size / rank / length / probability)");
    gen->add_option("--b", gen_b, "family knob b (window / radius / universe)");

    // beta
    std::string beta_input, beta_mode = "exact";
    auto* beta = app.add_subcommand("beta", "neighborhood independence number of a graph file");
    beta->add_option("--input", beta_input, "graph file")->required();
    beta->add_option("--mode", beta_mode, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));

    // mis
    std::string mis_input, mis_order = "identity", mis_stats;
    auto* mis = app.add_subcommand("mis", "greedy maximal independent set with probe accounting");
    mis->add_option("--input", mis_input, "graph file")->required();
    mis->add_option("--order", mis_order, "identity | caro-wei | file:<path>");
    mis->add_option("--stats-out", mis_stats, "CSV output");

    // mm
    std::string mm_input, mm_beta = "auto", mm_stats;
    std::uint64_t mm_seed = 0, mm_trials = 1, mm_cap = 64;
    auto* mm = app.add_subcommand("mm", "randomized greedy maximal matching");
    mm->add_option("--input", mm_input, "graph file")->required();
    mm->add_option("--beta", mm_beta, "beta value or 'auto' for the doubling wrapper");
    mm->add_option("--seed", mm_seed, "base seed");
    mm->add_option("--trials", mm_trials, "number of seeded runs");
    mm->add_option("--cap-constant", mm_cap, "per-round iteration cap constant for 'auto'");
    mm->add_option("--stats-out", mm_stats, "CSV output");

    // adversary
    std::vector<std::uint64_t> adv_ks;
    std::string adv_strategy = "greedy", adv_mode = "deterministic", adv_report;
    std::uint64_t adv_seed = 0;
    auto* adv = app.add_subcommand("adversary", "duel a deterministic MM strategy against the query adversary");
    adv->add_option("--k", adv_ks, "instance parameter k (n = 10k); repeatable")->required();
    adv->add_option("--strategy", adv_strategy, "greedy | exhaustive | plugin:<name>");
    adv->add_option("--mode", adv_mode, "deterministic | random")
        ->check(CLI::IsMember({"deterministic", "random"}));
    adv->add_option("--seed", adv_seed, "seed for random mode");
    adv->add_option("--report", adv_report, "CSV report (k, queries, refuted, witness hash)");

    // bench
    std::string bench_family, bench_algo = "mis", bench_out, bench_fit, bench_fit_out;
    std::vector<std::uint64_t> bench_ns;
    std::uint64_t bench_trials = 10, bench_seed = 0;
    double bench_a = 0, bench_b = 0;
    auto* bench = app.add_subcommand("bench", "scaling sweep over a family; exit code checks hard bounds");
    bench->add_option("--family", bench_family, "family name")->required();
    bench->add_option("--algo", bench_algo, "mis | mm | mm-auto");
    bench->add_option("--n", bench_ns, "ascending list of sizes")->required();
    bench->add_option("--trials", bench_trials, "trials per size");
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("--out", bench_out, "CSV output");
    bench->add_option("--fit", bench_fit, "nb | nblogn")->check(CLI::IsMember({"nb", "nblogn"}));
    bench->add_option("--fit-out", bench_fit_out, "fit report CSV output");
    bench->add_option("--a", bench_a, "family knob a");
    bench->add_option("--b", bench_b, "family knob b");

    // apps
    std::string apps_task, apps_input, apps_out;
    std::uint64_t apps_seed = 0;
    auto* apps = app.add_subcommand("apps", "derived algorithms: vertex cover, Caro-Wei set, MM via line graph");
    apps->add_option("--task", apps_task, "vc | caro-wei | mm-line")->required();
    apps->add_option("--input", apps_input, "graph file")->required();
    apps->add_option("--seed", apps_seed, "seed");
    apps->add_option("--out", apps_out, "write the resulting set / matching");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_family, gen_n, gen_seed, gen_out, gen_a, gen_b);
        if (beta->parsed()) return cmd_beta(beta_input, beta_mode);
        if (mis->parsed()) return cmd_mis(mis_input, mis_order, mis_stats);
        if (mm->parsed()) return cmd_mm(mm_input, mm_beta, mm_seed, mm_trials, mm_cap, mm_stats);
        if (adv->parsed()) return cmd_adversary(adv_ks, adv_strategy, adv_mode, adv_seed, adv_report);
        if (bench->parsed())
            return cmd_bench(bench_family, bench_algo, bench_ns, bench_trials, bench_seed, bench_out, bench_fit,
                             bench_fit_out, bench_a, bench_b);
        if (apps->parsed()) return cmd_apps(apps_task, apps_input, apps_seed, apps_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
