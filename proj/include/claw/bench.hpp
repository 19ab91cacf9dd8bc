#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "claw/generators.hpp"
#include "claw/graph.hpp"
#include "claw/mis.hpp"
#include "claw/mm.hpp"
#include "claw/rng.hpp"
#include "claw/verify.hpp"

namespace claw {

enum class Algo { mis, mm, mm_auto };

inline std::string_view algo_name(Algo a) {
    switch (a) {
        case Algo::mis: return "mis";
        case Algo::mm: return "mm";
        case Algo::mm_auto: return "mm-auto";
    }
    return "unknown";
}

inline Algo algo_from_name(std::string_view name) {
    if (name == "mis") return Algo::mis;
    if (name == "mm") return Algo::mm;
    if (name == "mm-auto" || name == "mm_auto") return Algo::mm_auto;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

/// One benchmark run. Counts are the contract; wall_nanos is informational
/// only and never enters a bound check.
struct RunStats {
    std::string family;
    std::uint64_t n = 0;
    std::uint64_t beta = 0;  // proven family bound, or a measured lower bound, 0 if unknown
    std::uint64_t seed = 0;
    std::string algorithm;
    std::uint64_t degree_probes = 0;
    std::uint64_t neighbor_probes = 0;
    std::uint64_t iterations = 0;  // MM while-loop passes, 0 for MIS
    std::uint64_t work = 0;        // MIS: n + marks; MM: iterations + low-branch scans
    std::uint64_t wall_nanos = 0;
    bool completed = true;
};

inline constexpr std::string_view kRunStatsHeader =
    "family,n,beta,seed,algorithm,degree_probes,neighbor_probes,iterations,work,wall_nanos,completed";

inline void write_csv(std::span<const RunStats> rows, std::ostream& out) {
    out << kRunStatsHeader << '\n';
    for (const auto& r : rows) {
        out << r.family << ',' << r.n << ',' << r.beta << ',' << r.seed << ',' << r.algorithm << ','
            << r.degree_probes << ',' << r.neighbor_probes << ',' << r.iterations << ',' << r.work << ','
            << r.wall_nanos << ',' << (r.completed ? 1 : 0) << '\n';
    }
}

namespace detail {

// Beta value recorded with each row: the proven family bound when there is
// one, otherwise a measured greedy lower bound on instances small enough to
// afford it.
inline std::uint64_t bench_beta(const GenSpec& spec, const Graph& g) {
    const std::uint64_t bound = known_beta_bound(spec);
    if (bound > 0) return bound;
    if (g.num_vertices() <= 4096) return greedy_beta_lower_bound(g);
    return 0;
}

}  // namespace detail

/// Deterministic (n, trial) sweep: one row per run, derived seeds, rows in
/// (n, trial) order. Deterministic families are generated once per n and
/// shared across trials.
inline std::vector<RunStats> sweep(const GenSpec& tmpl, std::span<const std::uint64_t> n_values,
                                   std::uint64_t trials, Algo algo, std::uint64_t seed0) {
    if (n_values.empty()) throw std::invalid_argument("sweep: n_values must be nonempty");
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1]) throw std::invalid_argument("sweep: n_values must be ascending");

    const bool seed_sensitive = !(tmpl.family == Family::clique || tmpl.family == Family::clique_minus_pm);

    std::vector<RunStats> rows;
    rows.reserve(n_values.size() * trials);
    for (const std::uint64_t n : n_values) {
        GenSpec spec = tmpl;
        spec.n = n;
        Graph shared;
        if (!seed_sensitive) {
            spec.seed = 0;
            shared = generate(spec);
        }
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const std::uint64_t seed = mix_seed(seed0, n, trial);
            Graph instance;
            const Graph* g = &shared;
            if (seed_sensitive) {
                spec.seed = mix_seed(seed, 1);
                instance = generate(spec);
                g = &instance;
            }

            RunStats row;
            row.family = std::string(family_name(spec.family));
            row.n = n;
            row.seed = seed;
            row.algorithm = std::string(algo_name(algo));
            row.beta = detail::bench_beta(spec, *g);

            ProbeCounter pc;
            Rng rng(mix_seed(seed, 2));
            const auto t0 = std::chrono::steady_clock::now();
            switch (algo) {
                case Algo::mis: {
                    std::vector<Vertex> order(g->num_vertices());
                    std::iota(order.begin(), order.end(), Vertex{0});
                    shuffle_range(order.begin(), order.end(), rng);
                    const MisResult r = greedy_mis(*g, order, &pc);
                    row.work = r.stats.work;
                    break;
                }
                case Algo::mm: {
                    // the recorded beta may be a measured lower bound, so
                    // guard the run with a generous cap; completed records
                    // whether it was ever hit
                    const std::uint64_t beta = std::max<std::uint64_t>(1, row.beta);
                    const std::uint64_t cap = mm_iteration_cap(g->num_vertices(), beta, 256);
                    const MmResult r = randomized_greedy_mm(*g, beta, rng, &pc, cap);
                    row.iterations = r.stats.iterations;
                    row.work = r.stats.iterations + r.stats.low_degree_scans;
                    row.completed = r.completed;
                    break;
                }
                case Algo::mm_auto: {
                    const MmResult r = mm_unknown_beta(*g, rng, &pc);
                    row.iterations = r.stats.iterations;
                    row.work = r.stats.iterations + r.stats.low_degree_scans;
                    row.completed = r.completed;
                    break;
                }
            }
            const auto t1 = std::chrono::steady_clock::now();
            row.wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            row.degree_probes = pc.degree_probes;
            row.neighbor_probes = pc.neighbor_probes;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

/// Hard per-run check behind the bench exit code: MIS work within
/// n + n*beta on every row that carries a proven beta bound.
inline bool mis_bounds_hold(std::span<const RunStats> rows) {
    for (const auto& r : rows) {
        if (r.algorithm != "mis" || r.beta == 0) continue;
        if (r.work > r.n + r.n * r.beta) return false;
    }
    return true;
}

enum class FitModel { nb, nblogn };

inline std::string_view fit_model_name(FitModel m) { return m == FitModel::nb ? "c*n*beta" : "c*n*beta*ln(n)"; }

struct FitReport {
    FitModel model = FitModel::nb;
    double fitted_c = 0;
    double r_squared = 0;
    std::vector<std::pair<std::uint64_t, double>> residuals;  // per-n mean residual
};

namespace detail {

// the regressed count: marking work for MIS (total work minus the n-vertex
// scan), while-loop passes for MM
inline double fit_count(const RunStats& r) {
    if (r.algorithm == "mis") return static_cast<double>(r.work - std::min(r.work, r.n));
    return static_cast<double>(r.iterations);
}

}  // namespace detail

/// Least-squares fit of counts against c*n*beta or c*n*beta*ln(n).
inline FitReport fit(std::span<const RunStats> rows, FitModel model) {
    if (rows.empty()) throw std::invalid_argument("fit: no rows");
    double sxy = 0, sxx = 0, sy = 0;
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        if (r.beta == 0) throw std::invalid_argument("fit: rows must carry a beta value");
        double x = static_cast<double>(r.n) * static_cast<double>(r.beta);
        if (model == FitModel::nblogn) x *= std::log(static_cast<double>(r.n < 2 ? 2 : r.n));
        const double y = detail::fit_count(r);
        xs.push_back(x);
        ys.push_back(y);
        sxy += x * y;
        sxx += x * x;
        sy += y;
    }
    FitReport report;
    report.model = model;
    report.fitted_c = sxx > 0 ? sxy / sxx : 0;
    const double mean = sy / static_cast<double>(rows.size());
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ss_res += (ys[i] - report.fitted_c * xs[i]) * (ys[i] - report.fitted_c * xs[i]);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    report.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);

    // per-n mean residual, rows are already grouped by n
    for (std::size_t i = 0; i < rows.size();) {
        const std::uint64_t n = rows[i].n;
        double acc = 0;
        std::size_t count = 0;
        for (; i < rows.size() && rows[i].n == n; ++i, ++count) acc += ys[i] - report.fitted_c * xs[i];
        report.residuals.emplace_back(n, acc / static_cast<double>(count));
    }
    return report;
}

inline std::string fit_summary(const FitReport& report) {
    std::ostringstream out;
    out << "model " << fit_model_name(report.model) << ": c = " << report.fitted_c
        << ", r^2 = " << report.r_squared << '\n';
    for (const auto& [n, res] : report.residuals) out << "  n=" << n << " mean residual " << res << '\n';
    return out.str();
}

inline void write_fit_csv(const FitReport& report, std::ostream& out) {
    out << "model,fitted_c,r_squared\n"
        << fit_model_name(report.model) << ',' << report.fitted_c << ',' << report.r_squared << '\n';
    out << "n,mean_residual\n";
    for (const auto& [n, res] : report.residuals) out << n << ',' << res << '\n';
}

/// Least-squares slope of ln(y) against ln(x).
inline double loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("loglog_slope: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (x <= 0 || y <= 0) throw std::invalid_argument("loglog_slope: points must be positive");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace claw
