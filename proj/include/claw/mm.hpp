#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "claw/fraction.hpp"
#include "claw/graph.hpp"
#include "claw/rng.hpp"
#include "claw/sample_set.hpp"

namespace claw {

struct Matching {
    static constexpr Vertex kUnmatched = static_cast<Vertex>(-1);

    std::vector<Edge> edges;
    std::vector<Vertex> mate;

    static Matching empty(Vertex n) {
        Matching m;
        m.mate.assign(n, kUnmatched);
        return m;
    }

    Vertex universe() const { return static_cast<Vertex>(mate.size()); }
    std::size_t size() const { return edges.size(); }
    bool matched(Vertex v) const { return mate.at(v) != kUnmatched; }

    std::uint64_t unmatched_count() const {
        std::uint64_t c = 0;
        for (Vertex p : mate) c += (p == kUnmatched);
        return c;
    }

    void add(Vertex u, Vertex v) {
        if (u == v || matched(u) || matched(v))
            throw std::logic_error("Matching::add: endpoints must be distinct and unmatched");
        mate[u] = v;
        mate[v] = u;
        edges.emplace_back(u, v);
    }
};

struct GuessRound {
    std::uint64_t beta = 0;
    std::uint64_t iterations = 0;
};

struct MmStats {
    std::uint64_t iterations = 0;        // while-loop passes
    std::uint64_t low_degree_scans = 0;  // neighbor probes spent below the threshold
    std::uint64_t successes = 0;         // iterations that removed at least one vertex
    std::vector<GuessRound> guess_rounds;
};

struct MmResult {
    Matching matching;
    MmStats stats;
    bool completed = true;
};

/// The sampling threshold 4*n*beta/|U| as an exact rational.
inline Fraction tau(std::uint64_t n, std::uint64_t beta, std::uint64_t u_size) {
    if (u_size == 0) throw std::invalid_argument("tau: U must be nonempty");
    return Fraction::of(static_cast<unsigned __int128>(4) * n * beta, u_size);
}

/// deg < tau(U), decided in exact integer arithmetic: deg*|U| < 4*n*beta.
inline bool degree_below_tau(std::uint64_t deg, std::uint64_t n, std::uint64_t beta, std::uint64_t u_size) {
    return static_cast<unsigned __int128>(deg) * u_size < static_cast<unsigned __int128>(4) * n * beta;
}

/// Modified randomized greedy maximal matching. Each pass samples an
/// unmatched vertex u uniformly; below the threshold it scans all of N(u)
/// for unmatched partners, matching u to a uniform one (or dropping u when
/// none remain); at or above it, it draws one uniform neighbor and matches
/// only if that neighbor is also unmatched. Stored neighbor order is never
/// exploited. With no iteration_cap the loop runs until U is empty and the
/// result is a maximal matching; with a cap the run may stop early
/// (completed = false).
///
/// Uncapped termination needs beta within a factor 4 of the graph's
/// neighborhood independence: with a far smaller beta the survivors can all
/// sit above the threshold with every neighbor already matched, and no pass
/// makes progress. Callers guessing beta should pass a cap or use
/// mm_unknown_beta.
inline MmResult randomized_greedy_mm(const Graph& g, std::uint64_t beta, Rng& rng,
                                     ProbeCounter* pc = nullptr,
                                     std::optional<std::uint64_t> iteration_cap = std::nullopt) {
    if (beta == 0) throw std::invalid_argument("randomized_greedy_mm: beta must be at least 1");
    const Vertex n = g.num_vertices();

    ProbeCounter local;
    ProbeCounter& probes = pc ? *pc : local;

    MmResult out;
    out.matching = Matching::empty(n);
    SampleSet u_set(n);
    std::vector<Vertex> candidates;

    while (!u_set.empty()) {
        if (iteration_cap && out.stats.iterations >= *iteration_cap) {
            out.completed = false;
            return out;
        }
        ++out.stats.iterations;

        const Vertex u = u_set.sample(rng);
        const Vertex d = g.degree(u, probes);
        if (degree_below_tau(d, n, beta, u_set.size())) {
            candidates.clear();
            for (Vertex i = 0; i < d; ++i) {
                const Vertex w = g.neighbor(u, i, probes);
                if (u_set.contains(w)) candidates.push_back(w);
            }
            out.stats.low_degree_scans += d;
            if (candidates.empty()) {
                u_set.remove(u);
            } else {
                const Vertex v = candidates[uniform_below(rng, candidates.size())];
                out.matching.add(u, v);
                u_set.remove(u);
                u_set.remove(v);
            }
            ++out.stats.successes;
        } else {
            const Vertex v = g.neighbor(u, static_cast<Vertex>(uniform_below(rng, d)), probes);
            if (u_set.contains(v)) {
                out.matching.add(u, v);
                u_set.remove(u);
                u_set.remove(v);
                ++out.stats.successes;
            }
        }
    }
    out.completed = true;
    return out;
}

/// Per-round iteration budget for the doubling wrapper:
/// ceil(cap_constant * n * ln(n) * beta), natural log.
inline std::uint64_t mm_iteration_cap(std::uint64_t n, std::uint64_t beta, std::uint64_t cap_constant) {
    const double ln_n = std::log(static_cast<double>(n < 2 ? 2 : n));
    return static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(cap_constant) * static_cast<double>(n) * ln_n * static_cast<double>(beta)));
}

/// Runs randomized_greedy_mm with beta guessed in powers of two, from
/// scratch each round. Every round but the last is capped at
/// cap_constant*n*ln(n)*guess iterations; the final guess, the smallest
/// power of two at least n, runs uncapped, so the output is always maximal.
/// Returned stats: iterations and low_degree_scans are totals across
/// rounds, successes belongs to the completing round, and guess_rounds
/// records every round.
inline MmResult mm_unknown_beta(const Graph& g, Rng& rng, ProbeCounter* pc = nullptr,
                                std::uint64_t cap_constant = 64) {
    const Vertex n = g.num_vertices();
    MmResult out;
    out.matching = Matching::empty(n);
    if (n == 0) return out;

    std::uint64_t final_guess = 2;
    while (final_guess < n) final_guess *= 2;

    std::uint64_t total_iterations = 0;
    std::uint64_t total_low = 0;
    std::vector<GuessRound> rounds;
    for (std::uint64_t guess = 2;; guess *= 2) {
        std::optional<std::uint64_t> cap;
        if (guess < final_guess) cap = mm_iteration_cap(n, guess, cap_constant);
        MmResult round = randomized_greedy_mm(g, guess, rng, pc, cap);
        total_iterations += round.stats.iterations;
        total_low += round.stats.low_degree_scans;
        rounds.push_back({guess, round.stats.iterations});
        if (round.completed) {
            out = std::move(round);
            break;
        }
    }
    out.stats.iterations = total_iterations;
    out.stats.low_degree_scans = total_low;
    out.stats.guess_rounds = std::move(rounds);
    return out;
}

}  // namespace claw
