#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "claw/graph.hpp"

namespace claw {

/// Vertex subset carrying both a member list and a per-vertex indicator.
struct VertexSet {
    std::vector<Vertex> members;
    std::vector<char> indicator;

    static VertexSet empty(Vertex n) {
        VertexSet s;
        s.indicator.assign(n, 0);
        return s;
    }

    static VertexSet of(Vertex n, std::span<const Vertex> vs) {
        VertexSet s = empty(n);
        for (Vertex v : vs) s.add(v);
        return s;
    }

    Vertex universe() const { return static_cast<Vertex>(indicator.size()); }
    std::size_t size() const { return members.size(); }
    bool contains(Vertex v) const { return indicator.at(v) != 0; }

    void add(Vertex v) {
        if (indicator.at(v)) return;
        indicator[v] = 1;
        members.push_back(v);
    }
};

struct MisStats {
    std::uint64_t marks_set = 0;         // one per neighbor marked by a member
    std::uint64_t vertices_scanned = 0;  // the scan loop touches all n
    std::uint64_t work = 0;              // vertices_scanned + marks_set
};

struct MisResult {
    VertexSet set;
    MisStats stats;
};

/// Greedy MIS over an explicit scan order: a vertex joins unless an earlier
/// member marked it, and each member marks all its neighbors. Marked
/// vertices are skipped without touching their adjacency arrays, so the
/// neighbor probes of a counted run total exactly the degree sum of the
/// output set.
inline MisResult greedy_mis(const Graph& g, std::span<const Vertex> order, ProbeCounter* pc = nullptr) {
    const Vertex n = g.num_vertices();
    if (order.size() != n) throw std::invalid_argument("greedy_mis: order must be a permutation of the vertices");
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("greedy_mis: order must be a permutation of the vertices");
        seen[v] = 1;
    }

    ProbeCounter local;
    ProbeCounter& probes = pc ? *pc : local;

    MisResult out;
    out.set = VertexSet::empty(n);
    std::vector<char> marked(n, 0);
    for (Vertex v : order) {
        ++out.stats.vertices_scanned;
        if (marked[v]) continue;
        out.set.add(v);
        const Vertex d = g.degree(v, probes);
        for (Vertex i = 0; i < d; ++i) {
            marked[g.neighbor(v, i, probes)] = 1;
            ++out.stats.marks_set;
        }
    }
    out.stats.work = out.stats.vertices_scanned + out.stats.marks_set;
    return out;
}

/// Identity scan order.
inline MisResult greedy_mis(const Graph& g, ProbeCounter* pc = nullptr) {
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    return greedy_mis(g, order, pc);
}

/// Nondecreasing-degree order, ties by vertex id. Counting sort keeps the
/// whole ordering pass linear.
inline std::vector<Vertex> degree_ascending_order(const Graph& g, ProbeCounter* pc = nullptr) {
    const Vertex n = g.num_vertices();
    ProbeCounter local;
    ProbeCounter& probes = pc ? *pc : local;

    std::vector<Vertex> deg(n);
    std::vector<std::uint64_t> start(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v, probes);
        ++start[deg[v] + 1];
    }
    for (std::size_t d = 1; d < start.size(); ++d) start[d] += start[d - 1];
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[start[deg[v]]++] = v;
    return order;
}

/// Greedy MIS in nondecreasing degree order; the output size meets the
/// Caro-Wei bound, sum over v of 1/(deg(v)+1).
inline MisResult caro_wei_mis(const Graph& g, ProbeCounter* pc = nullptr) {
    return greedy_mis(g, degree_ascending_order(g, pc), pc);
}

/// Guaranteed ceiling on greedy MIS work for any beta at least the graph's
/// neighborhood independence: n scanned vertices plus at most n*beta marks.
inline std::uint64_t mis_work_bound(const Graph& g, std::uint64_t beta) {
    return g.num_vertices() + std::uint64_t{g.num_vertices()} * beta;
}

}  // namespace claw
