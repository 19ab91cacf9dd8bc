#pragma once

#include <numeric>
#include <vector>

#include "claw/generators.hpp"
#include "claw/graph.hpp"
#include "claw/mis.hpp"
#include "claw/mm.hpp"
#include "claw/rng.hpp"
#include "claw/verify.hpp"

namespace claw {

/// Endpoints of a maximal matching found without knowing beta; a valid
/// vertex cover of at most twice the optimum size.
inline VertexSet approx_vertex_cover(const Graph& g, Rng& rng, ProbeCounter* pc = nullptr) {
    return vertex_cover_from_mm(mm_unknown_beta(g, rng, pc).matching);
}

/// Greedy MIS in nondecreasing degree order; at least sum 1/(deg(v)+1)
/// vertices.
inline VertexSet caro_wei_independent_set(const Graph& g, ProbeCounter* pc = nullptr) {
    return caro_wei_mis(g, pc).set;
}

/// Maximal matching of g obtained as a greedy MIS of its line graph, mapped
/// back to edges. Materializes L(g); a demonstration of the access-model
/// equivalence, not a fast path.
inline Matching mm_via_line_graph(const Graph& g, Rng& rng, ProbeCounter* pc = nullptr) {
    Matching m = Matching::empty(g.num_vertices());
    if (g.num_edges() == 0) return m;
    const Graph lg = line_graph(g);
    const auto edges = g.edge_list();  // line-graph vertex i is edges[i]
    std::vector<Vertex> order(lg.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    shuffle_range(order.begin(), order.end(), rng);
    const MisResult mis = greedy_mis(lg, order, pc);
    for (Vertex i : mis.set.members) m.add(edges[i].first, edges[i].second);
    return m;
}

}  // namespace claw
