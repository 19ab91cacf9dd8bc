#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "claw/graph.hpp"
#include "claw/rng.hpp"

namespace claw {

enum class Family {
    line_graph,
    hyper_line_graph,
    clique,
    clique_minus_pm,
    unit_interval,
    unit_disk,
    er_random,
    regular_bipartite,
    hard_union,
};

/// Parameter block for generate(). n is the vertex count of the produced
/// graph; a and b are family knobs (see generate for the mapping).
struct GenSpec {
    Family family = Family::er_random;
    std::uint64_t n = 0;
    double a = 0.0;
    double b = 0.0;
    std::uint64_t seed = 0;
};

/// Line graph: one vertex per edge of g (in canonical edge-list order),
/// adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    if (g.num_edges() == 0) throw std::invalid_argument("line_graph: base graph has no edges");
    if (g.num_edges() > 0xffffffffULL) throw std::invalid_argument("line_graph: too many base edges");
    const auto edges = g.edge_list();
    std::vector<std::vector<Vertex>> incident(g.num_vertices());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].first].push_back(static_cast<Vertex>(i));
        incident[edges[i].second].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> le;
    for (const auto& list : incident)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) le.emplace_back(list[i], list[j]);
    return Graph::from_edge_list(le, static_cast<Vertex>(edges.size()));
}

/// Intersection graph of hyperedges of size at most r: one vertex per
/// hyperedge, adjacent iff they share a vertex.
inline Graph hyper_line_graph(std::span<const std::vector<Vertex>> hyperedges, std::size_t r) {
    std::vector<std::vector<Vertex>> sorted;
    sorted.reserve(hyperedges.size());
    for (const auto& h : hyperedges) {
        std::vector<Vertex> s(h.begin(), h.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() > r) throw std::invalid_argument("hyper_line_graph: hyperedge exceeds rank r");
        sorted.push_back(std::move(s));
    }
    auto intersects = [](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) return true;
            if (x[i] < y[j])
                ++i;
            else
                ++j;
        }
        return false;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (intersects(sorted[i], sorted[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edge_list(edges, static_cast<Vertex>(hyperedges.size()));
}

inline Graph clique(Vertex n) {
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + (n - 1);
    std::vector<Vertex> neighbors;
    neighbors.reserve(offsets.back());
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
            if (u != v) neighbors.push_back(u);
    return Graph::from_csr(n, std::move(offsets), std::move(neighbors));
}

/// K_n minus the perfect matching {(2i, 2i+1)}: every degree is n-2 and the
/// neighborhood independence is 2 (for n >= 4).
inline Graph clique_minus_pm(Vertex n) {
    if (n % 2 != 0) throw std::invalid_argument("clique_minus_pm: n must be even");
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + (n >= 2 ? n - 2 : 0);
    std::vector<Vertex> neighbors;
    neighbors.reserve(offsets.back());
    for (Vertex v = 0; v < n; ++v) {
        const Vertex partner = v ^ 1u;
        for (Vertex u = 0; u < n; ++u)
            if (u != v && u != partner) neighbors.push_back(u);
    }
    return Graph::from_csr(n, std::move(offsets), std::move(neighbors));
}

/// n points uniform on [0, length], adjacent iff within window of each
/// other. beta is at most 2 for any window.
inline Graph unit_interval(Vertex n, double length, double window, std::uint64_t seed) {
    if (window <= 0) throw std::invalid_argument("unit_interval: window must be positive");
    if (length < 0) throw std::invalid_argument("unit_interval: length must be nonnegative");
    Rng rng(seed);
    std::vector<double> x(n);
    for (auto& xi : x) xi = length * uniform_unit(rng);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });
    std::vector<Edge> edges;
    std::size_t lo = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
        while (x[order[j]] - x[order[lo]] > window) ++lo;
        for (std::size_t i = lo; i < j; ++i) edges.emplace_back(order[i], order[j]);
    }
    return Graph::from_edge_list(edges, n);
}

/// n points uniform on [0, side]^2, adjacent iff within Euclidean distance
/// radius. beta is at most 5.
inline Graph unit_disk(Vertex n, double side, double radius, std::uint64_t seed) {
    if (radius <= 0) throw std::invalid_argument("unit_disk: radius must be positive");
    if (side < 0) throw std::invalid_argument("unit_disk: side must be nonnegative");
    Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (Vertex v = 0; v < n; ++v) {
        x[v] = side * uniform_unit(rng);
        y[v] = side * uniform_unit(rng);
    }
    const double r2 = radius * radius;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const double dx = x[u] - x[v];
            const double dy = y[u] - y[v];
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(edges, n);
}

/// G(n, p). Unbounded-beta control family for scaling comparisons.
inline Graph er_random(Vertex n, double p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("er_random: p must be in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edge_list(edges, n);
}

/// Uniform random graph with exactly m distinct edges.
inline Graph random_graph_with_edges(Vertex n, std::uint64_t m, Rng& rng) {
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_m) throw std::invalid_argument("random_graph_with_edges: more edges than pairs");
    std::vector<Edge> edges;
    edges.reserve(m);
    if (max_m <= 4 * m || max_m <= 256) {
        // dense regime: shuffle the full pair list and take a prefix
        std::vector<Edge> all;
        all.reserve(max_m);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
        shuffle_range(all.begin(), all.end(), rng);
        edges.assign(all.begin(), all.begin() + m);
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(2 * m);
        while (edges.size() < m) {
            Vertex u = static_cast<Vertex>(uniform_below(rng, n));
            Vertex v = static_cast<Vertex>(uniform_below(rng, n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            const std::uint64_t key = static_cast<std::uint64_t>(u) * n + v;
            if (seen.insert(key).second) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(edges, n);
}

/// Bipartite d-regular graph on 2*n_side vertices (left side 0..n_side-1):
/// the union of d random perfect matchings, repaired by random swaps when a
/// matching collides with an already placed edge. beta equals d.
inline Graph regular_bipartite(Vertex n_side, Vertex d, std::uint64_t seed) {
    if (d > n_side) throw std::invalid_argument("regular_bipartite: d must be at most the side size");
    const Vertex n = 2 * n_side;
    std::vector<Edge> edges;
    if (n_side == 0 || d == 0) return Graph::from_edge_list(edges, n);
    if (d == n_side) {
        for (Vertex i = 0; i < n_side; ++i)
            for (Vertex j = 0; j < n_side; ++j) edges.emplace_back(i, n_side + j);
        return Graph::from_edge_list(edges, n);
    }
    Rng rng(seed);
    std::vector<bool> used(static_cast<std::size_t>(n_side) * n_side, false);
    std::vector<Vertex> perm(n_side);
    for (Vertex j = 0; j < d; ++j) {
        std::iota(perm.begin(), perm.end(), Vertex{0});
        shuffle_range(perm.begin(), perm.end(), rng);
        std::uint64_t rounds = 0;
        for (;;) {
            bool clean = true;
            for (Vertex i = 0; i < n_side; ++i) {
                if (used[static_cast<std::size_t>(i) * n_side + perm[i]]) {
                    clean = false;
                    const Vertex r = static_cast<Vertex>(uniform_below(rng, n_side));
                    std::swap(perm[i], perm[r]);
                }
            }
            if (clean) break;
            if (++rounds > 200000) throw std::runtime_error("regular_bipartite: could not place a disjoint matching");
        }
        for (Vertex i = 0; i < n_side; ++i) {
            used[static_cast<std::size_t>(i) * n_side + perm[i]] = true;
            edges.emplace_back(i, n_side + perm[i]);
        }
    }
    return Graph::from_edge_list(edges, n);
}

/// Disjoint union of t cliques of part_size vertices, each with an
/// independently shuffled perfect matching removed. beta of the union is 2
/// for part_size >= 4.
inline Graph hard_union(std::uint64_t t, Vertex part_size, std::uint64_t seed) {
    if (part_size % 2 != 0) throw std::invalid_argument("hard_union: part size must be even");
    const std::uint64_t n64 = t * part_size;
    if (n64 > 0xffffffffULL) throw std::invalid_argument("hard_union: too many vertices");
    const Vertex n = static_cast<Vertex>(n64);
    Rng rng(seed);

    std::vector<Vertex> partner(n);
    std::vector<Vertex> local(part_size);
    for (std::uint64_t part = 0; part < t; ++part) {
        const Vertex base = static_cast<Vertex>(part * part_size);
        std::iota(local.begin(), local.end(), base);
        shuffle_range(local.begin(), local.end(), rng);
        for (Vertex i = 0; i < part_size; i += 2) {
            partner[local[i]] = local[i + 1];
            partner[local[i + 1]] = local[i];
        }
    }

    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    const Vertex part_degree = part_size >= 2 ? part_size - 2 : 0;
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + part_degree;
    std::vector<Vertex> neighbors;
    neighbors.reserve(offsets.back());
    for (Vertex v = 0; v < n; ++v) {
        const Vertex base = v - (v % part_size);
        for (Vertex u = base; u < base + part_size; ++u)
            if (u != v && u != partner[v]) neighbors.push_back(u);
    }
    return Graph::from_csr(n, std::move(offsets), std::move(neighbors));
}

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::line_graph: return "line_graph";
        case Family::hyper_line_graph: return "hyper_line_graph";
        case Family::clique: return "clique";
        case Family::clique_minus_pm: return "clique_minus_pm";
        case Family::unit_interval: return "unit_interval";
        case Family::unit_disk: return "unit_disk";
        case Family::er_random: return "er_random";
        case Family::regular_bipartite: return "regular_bipartite";
        case Family::hard_union: return "hard_union";
    }
    return "unknown";
}

inline Family family_from_name(std::string_view name) {
    for (Family f : {Family::line_graph, Family::hyper_line_graph, Family::clique, Family::clique_minus_pm,
                     Family::unit_interval, Family::unit_disk, Family::er_random, Family::regular_bipartite,
                     Family::hard_union}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

/// Family dispatch. Knob mapping:
///   line_graph        a = base-size factor (default 1.6); the base is a
///                     uniform random graph with exactly n edges
///   hyper_line_graph  a = rank r (default 3), b = universe size (default n)
///   unit_interval     a = length (default n), b = window (default 2)
///   unit_disk         a = side (default sqrt(n)), b = radius (default 1)
///   er_random         a = edge probability (default 0.1)
///   regular_bipartite a = degree d (default 8); n must be even
///   hard_union        a = part size (default 8); n must be a multiple
inline Graph generate(const GenSpec& spec) {
    const std::uint64_t n64 = spec.n;
    if (n64 > 0xffffffffULL) throw std::invalid_argument("generate: n out of range");
    const Vertex n = static_cast<Vertex>(n64);
    switch (spec.family) {
        case Family::line_graph: {
            if (n == 0) return Graph::from_edge_list({}, 0);
            const double factor = spec.a > 0 ? spec.a : 1.6;
            std::uint64_t nb = std::max<std::uint64_t>(3, static_cast<std::uint64_t>(
                                                              std::ceil(factor * std::sqrt(2.0 * static_cast<double>(n)))));
            while (nb * (nb - 1) / 2 < n) ++nb;
            Rng rng(mix_seed(spec.seed, 0xba5e));
            return line_graph(random_graph_with_edges(static_cast<Vertex>(nb), n, rng));
        }
        case Family::hyper_line_graph: {
            const std::size_t r = spec.a > 0 ? static_cast<std::size_t>(spec.a) : 3;
            const std::uint64_t universe = spec.b > 0 ? static_cast<std::uint64_t>(spec.b)
                                                      : std::max<std::uint64_t>(r, n);
            Rng rng(mix_seed(spec.seed, 0x4e5e));
            std::vector<std::vector<Vertex>> hyperedges(n);
            for (auto& h : hyperedges) {
                while (h.size() < r) {
                    const Vertex cand = static_cast<Vertex>(uniform_below(rng, universe));
                    if (std::find(h.begin(), h.end(), cand) == h.end()) h.push_back(cand);
                }
            }
            return hyper_line_graph(hyperedges, r);
        }
        case Family::clique: return clique(n);
        case Family::clique_minus_pm: return clique_minus_pm(n);
        case Family::unit_interval: {
            const double length = spec.a > 0 ? spec.a : static_cast<double>(n);
            const double window = spec.b > 0 ? spec.b : 2.0;
            return unit_interval(n, length, window, spec.seed);
        }
        case Family::unit_disk: {
            const double side = spec.a > 0 ? spec.a : std::sqrt(static_cast<double>(n));
            const double radius = spec.b > 0 ? spec.b : 1.0;
            return unit_disk(n, side, radius, spec.seed);
        }
        case Family::er_random: {
            const double p = spec.a > 0 ? spec.a : 0.1;
            return er_random(n, p, spec.seed);
        }
        case Family::regular_bipartite: {
            if (n % 2 != 0) throw std::invalid_argument("generate: regular_bipartite needs even n");
            const Vertex d = spec.a > 0 ? static_cast<Vertex>(spec.a) : 8;
            return regular_bipartite(n / 2, d, spec.seed);
        }
        case Family::hard_union: {
            const Vertex part = spec.a > 0 ? static_cast<Vertex>(spec.a) : 8;
            if (part == 0 || n % part != 0) throw std::invalid_argument("generate: n must be a multiple of the part size");
            return hard_union(n / part, part, spec.seed);
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

/// Proven beta ceiling for a family, 0 when none is known (er_random).
inline std::uint64_t known_beta_bound(const GenSpec& spec) {
    switch (spec.family) {
        case Family::line_graph: return 2;
        case Family::hyper_line_graph: return spec.a > 0 ? static_cast<std::uint64_t>(spec.a) : 3;
        case Family::clique: return 1;
        case Family::clique_minus_pm: return 2;
        case Family::unit_interval: return 2;
        case Family::unit_disk: return 5;
        case Family::er_random: return 0;
        case Family::regular_bipartite: return spec.a > 0 ? static_cast<std::uint64_t>(spec.a) : 8;
        case Family::hard_union: return 2;
    }
    return 0;
}

}  // namespace claw
