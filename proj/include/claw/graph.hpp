#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace claw {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Per-run tally of O(1) adjacency-array accesses. These counts, not wall
/// time, are the currency every benchmark and acceptance check is stated in.
/// Counting is opt-in: algorithms take a counter handle and can run
/// uncounted on hot paths.
struct ProbeCounter {
    std::uint64_t degree_probes = 0;
    std::uint64_t neighbor_probes = 0;

    std::uint64_t total() const { return degree_probes + neighbor_probes; }
    void reset() { *this = ProbeCounter{}; }
};

/// Immutable simple undirected graph in adjacency-array (CSR) form: degree
/// and i-th-neighbor access are O(1). Neighbor order within a slice is
/// whatever construction supplied; from_edge_list and the file reader
/// produce ascending slices so runs and round trips are reproducible.
/// Algorithms must not rely on slice order.
class Graph {
public:
    Graph() = default;

    /// Canonical construction: duplicate edges collapse, slices come out in
    /// ascending vertex-id order. Self-loops and out-of-range endpoints are
    /// input errors.
    static Graph from_edge_list(std::span<const Edge> edges, Vertex n) {
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) throw std::invalid_argument("from_edge_list: endpoint out of range");
            if (u == v) throw std::invalid_argument("from_edge_list: self-loop");
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());

        Graph g;
        g.n_ = n;
        g.m_ = es.size();
        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [u, v] : es) {
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
        g.neighbors_.resize(2 * g.m_);
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : es) {
            g.neighbors_[cursor[u]++] = v;
            g.neighbors_[cursor[v]++] = u;
        }
        g.sorted_slices_ = true;
        return g;
    }

    /// Adopts prebuilt CSR arrays, preserving the given neighbor order.
    /// Shape, ranges and self-loops are checked here; distinctness and
    /// symmetry of untrusted input go through validate_structure().
    static Graph from_csr(Vertex n, std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors) {
        if (offsets.size() != static_cast<std::size_t>(n) + 1 || offsets.front() != 0)
            throw std::invalid_argument("from_csr: offsets must have n+1 entries starting at 0");
        for (Vertex v = 0; v < n; ++v)
            if (offsets[v + 1] < offsets[v]) throw std::invalid_argument("from_csr: offsets must be nondecreasing");
        if (offsets.back() != neighbors.size())
            throw std::invalid_argument("from_csr: offsets[n] must equal the neighbor array length");
        if (neighbors.size() % 2 != 0) throw std::invalid_argument("from_csr: neighbor array length must be even");
        Graph g;
        g.n_ = n;
        g.m_ = neighbors.size() / 2;
        g.offsets_ = std::move(offsets);
        g.neighbors_ = std::move(neighbors);
        g.sorted_slices_ = true;
        for (Vertex v = 0; v < n; ++v) {
            for (std::uint64_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
                const Vertex u = g.neighbors_[i];
                if (u >= n) throw std::invalid_argument("from_csr: neighbor id out of range");
                if (u == v) throw std::invalid_argument("from_csr: self-loop");
                if (i > g.offsets_[v] && g.neighbors_[i - 1] >= u) g.sorted_slices_ = false;
            }
        }
        return g;
    }

    Vertex num_vertices() const { return n_; }
    std::uint64_t num_edges() const { return m_; }

    Vertex degree(Vertex v) const {
        check_vertex(v);
        return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
    }
    Vertex degree(Vertex v, ProbeCounter& pc) const {
        ++pc.degree_probes;
        return degree(v);
    }

    Vertex neighbor(Vertex v, Vertex i) const {
        check_vertex(v);
        if (offsets_[v] + i >= offsets_[v + 1])
            throw std::invalid_argument("Graph::neighbor: index must be below the degree");
        return neighbors_[offsets_[v] + i];
    }
    Vertex neighbor(Vertex v, Vertex i, ProbeCounter& pc) const {
        ++pc.neighbor_probes;
        return neighbor(v, i);
    }

    /// Whole-slice view for oracles and validators; not probe-counted.
    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        if (degree(v) < degree(u)) std::swap(u, v);
        const auto slice = neighbors(u);
        if (sorted_slices_) return std::binary_search(slice.begin(), slice.end(), v);
        return std::find(slice.begin(), slice.end(), v) != slice.end();
    }

    /// Edges as (u, v) pairs with u < v, ascending lexicographic.
    std::vector<Edge> edge_list() const {
        std::vector<Edge> es;
        es.reserve(m_);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex u : neighbors(v))
                if (u > v) es.emplace_back(v, u);
        if (!sorted_slices_) std::sort(es.begin(), es.end());
        return es;
    }

    /// Full structural audit (distinct neighbors, set-symmetry). O(m log m);
    /// for tests and CSR input of unproven provenance.
    void validate_structure() const {
        std::vector<std::pair<Vertex, Vertex>> directed;
        directed.reserve(2 * m_);
        std::vector<Vertex> slice;
        for (Vertex v = 0; v < n_; ++v) {
            const auto nb = neighbors(v);
            slice.assign(nb.begin(), nb.end());
            std::sort(slice.begin(), slice.end());
            if (std::adjacent_find(slice.begin(), slice.end()) != slice.end())
                throw std::runtime_error("Graph: duplicate neighbor in a slice");
            for (Vertex u : slice) directed.emplace_back(v, u);
        }
        std::sort(directed.begin(), directed.end());
        for (const auto& [v, u] : directed)
            if (!std::binary_search(directed.begin(), directed.end(), std::pair<Vertex, Vertex>{u, v}))
                throw std::runtime_error("Graph: asymmetric adjacency");
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
    }

    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<Vertex> neighbors_;
    bool sorted_slices_ = true;
};

/// FNV-1a over n and the canonical edge list; stable witness identifier.
inline std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](std::uint64_t x) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (x >> (8 * byte)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    feed(g.num_vertices());
    for (const auto& [u, v] : g.edge_list()) {
        feed(u);
        feed(v);
    }
    return h;
}

// ---- text format: "n m" header, then m lines "u v", '#' comments --------

inline Graph read_graph(std::istream& in, const std::string& source = "<input>") {
    std::string line;
    std::size_t line_no = 0;
    auto next_content = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + msg);
    };

    std::string content;
    if (!next_content(content)) fail("missing header line 'n m'");
    std::uint64_t n = 0, m = 0;
    {
        std::istringstream ss(content);
        std::string extra;
        if (!(ss >> n >> m)) fail("malformed header, expected 'n m'");
        if (ss >> extra) fail("trailing tokens after header");
    }
    if (n > std::uint64_t{0xffffffff}) fail("vertex count out of range");

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!next_content(content))
            fail("header declares " + std::to_string(m) + " edges but the file ends after " + std::to_string(i));
        std::istringstream ss(content);
        std::uint64_t u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v)) fail("malformed edge line, expected 'u v'");
        if (ss >> extra) fail("trailing tokens after edge");
        if (u >= n || v >= n) fail("edge endpoint out of range");
        if (u == v) fail("self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_content(content)) fail("more edge lines than the header declares");
    return Graph::from_edge_list(edges, static_cast<Vertex>(n));
}

inline Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
    return read_graph(in, path.string());
}

inline void write_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

inline void write_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    write_graph(g, out);
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace claw
