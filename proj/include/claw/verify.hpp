#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "claw/fraction.hpp"
#include "claw/graph.hpp"
#include "claw/mis.hpp"
#include "claw/mm.hpp"
#include "claw/rng.hpp"

namespace claw {

/// Ceiling for the exact bitmask searches below.
inline constexpr Vertex kMaxExactSearch = 32;

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices()) return false;
    for (Vertex v : s.members)
        for (Vertex u : g.neighbors(v))
            if (s.contains(u)) return false;
    return true;
}

inline bool is_maximal_independent_set(const Graph& g, const VertexSet& s) {
    if (!is_independent_set(g, s)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (s.contains(v)) continue;
        bool covered = false;
        for (Vertex u : g.neighbors(v)) {
            if (s.contains(u)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

inline bool is_matching(const Graph& g, const Matching& m) {
    if (m.universe() != g.num_vertices()) return false;
    std::uint64_t matched = 0;
    for (Vertex v = 0; v < m.universe(); ++v) {
        const Vertex p = m.mate[v];
        if (p == Matching::kUnmatched) continue;
        ++matched;
        if (p >= m.universe() || p == v || m.mate[p] != v) return false;
    }
    if (matched != 2 * m.edges.size()) return false;
    for (const auto& [u, v] : m.edges) {
        if (m.mate[u] != v || m.mate[v] != u) return false;
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

inline bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (m.matched(v)) continue;
        for (Vertex u : g.neighbors(v))
            if (!m.matched(u)) return false;
    }
    return true;
}

namespace detail {

inline std::uint32_t clique_cover_bound(const std::vector<std::uint64_t>& adj, std::uint64_t cand) {
    std::uint32_t cliques = 0;
    std::uint64_t rem = cand;
    while (rem != 0) {
        ++cliques;
        const int v = std::countr_zero(rem);
        rem &= ~(std::uint64_t{1} << v);
        std::uint64_t grow = rem & adj[v];
        while (grow != 0) {
            const int u = std::countr_zero(grow);
            rem &= ~(std::uint64_t{1} << u);
            grow &= adj[u];
        }
    }
    return cliques;
}

/// Exact max independent set over an adjacency-mask graph of at most 64
/// vertices. Branches on the densest remaining vertex; prunes with a greedy
/// clique cover (an independent set takes at most one vertex per clique).
inline void mis_branch_bound(const std::vector<std::uint64_t>& adj, std::uint64_t cand,
                             std::uint32_t size, std::uint32_t& best) {
    if (cand == 0) {
        if (size > best) best = size;
        return;
    }
    if (size + clique_cover_bound(adj, cand) <= best) return;

    int pick = -1;
    int pick_deg = -1;
    for (std::uint64_t rem = cand; rem != 0; rem &= rem - 1) {
        const int v = std::countr_zero(rem);
        const int dv = std::popcount(adj[v] & cand);
        if (dv > pick_deg) {
            pick = v;
            pick_deg = dv;
        }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    mis_branch_bound(adj, cand & ~(adj[pick] | bit), size + 1, best);
    // a vertex isolated within cand always belongs to some optimum
    if (pick_deg > 0) mis_branch_bound(adj, cand & ~bit, size, best);
}

inline std::uint32_t max_independent_set_masks(const std::vector<std::uint64_t>& adj) {
    const std::uint64_t universe =
        adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
    std::uint32_t best = 0;
    mis_branch_bound(adj, universe, 0, best);
    return best;
}

}  // namespace detail

/// Exact alpha(g) by branch and bound; capped at kMaxExactSearch vertices.
inline std::uint32_t max_independent_set_size(const Graph& g) {
    const Vertex n = g.num_vertices();
    if (n > kMaxExactSearch)
        throw std::runtime_error("max_independent_set_size: exact search is capped at " +
                                 std::to_string(kMaxExactSearch) + " vertices");
    if (n == 0) return 0;
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
    return detail::max_independent_set_masks(adj);
}

/// Exact neighborhood independence number beta(g): the largest independent
/// set inside any single vertex's neighborhood. 0 for edgeless graphs.
/// Needs max degree at most kMaxExactSearch; larger instances should use
/// greedy_beta_lower_bound.
inline std::uint32_t neighborhood_independence(const Graph& g) {
    const Vertex n = g.num_vertices();
    Vertex max_deg = 0;
    for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (max_deg > kMaxExactSearch)
        throw std::runtime_error(
            "neighborhood_independence: exact search needs max degree <= " +
            std::to_string(kMaxExactSearch) + "; use greedy_beta_lower_bound for larger instances");

    std::uint32_t beta = 0;
    std::vector<std::uint64_t> adj;
    std::vector<Vertex> local;
    for (Vertex v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const std::size_t d = nb.size();
        if (d <= beta) continue;  // cannot improve
        local.assign(nb.begin(), nb.end());
        adj.assign(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (g.has_edge(local[i], local[j])) {
                    adj[i] |= std::uint64_t{1} << j;
                    adj[j] |= std::uint64_t{1} << i;
                }
        beta = std::max(beta, detail::max_independent_set_masks(adj));
    }
    return beta;
}

/// Scalable lower estimate: greedy MIS inside each neighborhood. When the
/// greedy finds only one vertex but the neighborhood is not a clique, a
/// non-adjacent pair still witnesses independence 2, so the estimate is
/// exact on families with beta at most 2.
inline std::uint32_t greedy_beta_lower_bound(const Graph& g) {
    std::uint32_t best = 0;
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto nb = g.neighbors(v);
        chosen.clear();
        for (Vertex u : nb) {
            bool independent = true;
            for (Vertex w : chosen) {
                if (g.has_edge(u, w)) {
                    independent = false;
                    break;
                }
            }
            if (independent) chosen.push_back(u);
        }
        std::uint32_t found = chosen.size();
        if (found == 1 && best < 2) {
            for (std::size_t i = 0; i < nb.size() && found == 1; ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!g.has_edge(nb[i], nb[j])) {
                        found = 2;
                        break;
                    }
        }
        best = std::max(best, found);
    }
    return best;
}

/// Fraction of members of u that are delta-good: internal degree at least
/// delta times external degree, or total degree below 1/delta. Exact
/// integer comparisons throughout.
inline Fraction delta_good_fraction(const Graph& g, const VertexSet& u, const Fraction& delta) {
    if (u.size() == 0) throw std::invalid_argument("delta_good_fraction: U must be nonempty");
    using u128 = unsigned __int128;
    std::uint64_t good = 0;
    for (Vertex x : u.members) {
        std::uint64_t internal = 0;
        for (Vertex w : g.neighbors(x)) internal += u.contains(w);
        const std::uint64_t deg = g.degree(x);
        const std::uint64_t external = deg - internal;
        const bool ratio_ok = static_cast<u128>(internal) * delta.den() >= static_cast<u128>(delta.num()) * external;
        const bool small_degree = static_cast<u128>(deg) * delta.num() < delta.den();
        if (ratio_ok || small_degree) ++good;
    }
    return Fraction(good, u.size());
}

/// Members of b that precede all their b-neighbors in a uniform random
/// permutation of b; always independent within b.
inline VertexSet random_permutation_independent_set(const Graph& g, const VertexSet& b, Rng& rng) {
    std::vector<Vertex> perm(b.members);
    shuffle_range(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> rank(g.num_vertices(), 0);
    for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

    VertexSet out = VertexSet::empty(g.num_vertices());
    for (Vertex v : b.members) {
        bool first = true;
        for (Vertex w : g.neighbors(v)) {
            if (b.contains(w) && rank[w] < rank[v]) {
                first = false;
                break;
            }
        }
        if (first) out.add(v);
    }
    return out;
}

/// All endpoints of a matching; a vertex cover when the matching is maximal,
/// of size at most twice the optimum.
inline VertexSet vertex_cover_from_mm(const Matching& m) {
    VertexSet s = VertexSet::empty(m.universe());
    for (const auto& [u, v] : m.edges) {
        s.add(u);
        s.add(v);
    }
    return s;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex u : g.neighbors(v))
            if (u > v && !s.contains(u) && !s.contains(v)) return false;
    return true;
}

/// Exact minimum vertex cover size, n - alpha(g); same capacity cap as the
/// alpha oracle.
inline std::uint32_t min_vertex_cover_size(const Graph& g) {
    return g.num_vertices() - max_independent_set_size(g);
}

/// Exact sum over v of 1/(deg(v)+1).
inline Fraction caro_wei_sum(const Graph& g) {
    Fraction sum;
    for (Vertex v = 0; v < g.num_vertices(); ++v) sum += Fraction(1, g.degree(v) + std::uint64_t{1});
    return sum;
}

inline double caro_wei_sum_approx(const Graph& g) {
    double sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) sum += 1.0 / (static_cast<double>(g.degree(v)) + 1.0);
    return sum;
}

}  // namespace claw
