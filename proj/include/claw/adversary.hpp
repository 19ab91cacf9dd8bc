#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "claw/graph.hpp"
#include "claw/mm.hpp"
#include "claw/rng.hpp"

namespace claw {

/// Adaptive adjacency-array oracle over the n-vertex graphs (n = 10k)
/// obtained by deleting a perfect matching from K_n. Dummy vertices are
/// 0..2k-1 with the fixed non-edge mates (2i, 2i+1); core vertices start
/// free and are paired into the hidden non-edge matching only once their
/// query counter passes 2k. All degrees equal n-2, so degree queries are
/// free and uncounted. "Arbitrary" choices default to lowest-id; passing a
/// generator randomizes them for stress runs.
class AdversaryState {
public:
    static constexpr Vertex kNone = static_cast<Vertex>(-1);

    explicit AdversaryState(std::uint64_t k, Rng* choice_rng = nullptr) : k_(k), rng_(choice_rng) {
        if (k == 0) throw std::invalid_argument("AdversaryState: k must be at least 1");
        if (k > 0x19999999ULL) throw std::invalid_argument("AdversaryState: k out of range");
        n_ = static_cast<Vertex>(10 * k);
        dummy_end_ = static_cast<Vertex>(2 * k);
        partner_.assign(n_, kNone);
        for (Vertex d = 0; d < dummy_end_; ++d) partner_[d] = d ^ 1u;
        revealed_bits_.assign(n_, std::vector<bool>(n_, false));
        revealed_.assign(n_, {});
    }

    std::uint64_t k() const { return k_; }
    Vertex n() const { return n_; }
    Vertex degree() const { return n_ - 2; }
    Vertex dummy_count() const { return dummy_end_; }
    std::uint64_t query_budget() const { return 2 * k_ * k_; }

    bool is_dummy(Vertex v) const { return v < dummy_end_; }
    bool in_c_free(Vertex v) const { return v >= dummy_end_ && partner_[v] == kNone; }
    bool in_c_used(Vertex v) const { return v >= dummy_end_ && partner_[v] != kNone; }
    std::uint64_t c_used_size() const { return c_used_count_; }

    std::optional<Vertex> committed_partner(Vertex v) const {
        check_vertex(v);
        if (partner_[v] == kNone) return std::nullopt;
        return partner_[v];
    }

    bool committed_non_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return partner_[u] != kNone && partner_[u] == v;
    }

    std::uint64_t query_count(Vertex v) const {
        check_vertex(v);
        return revealed_[v].size();
    }

    std::uint64_t total_queries() const { return transcript_.size(); }
    std::span<const Edge> transcript() const { return transcript_; }
    std::span<const Edge> committed_core_pairs() const { return core_pairs_; }

    std::vector<Vertex> free_core_vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = dummy_end_; v < n_; ++v)
            if (partner_[v] == kNone) out.push_back(v);
        return out;
    }

    /// One adjacency probe: the next never-revealed neighbor of u.
    Vertex answer_query(Vertex u) {
        check_vertex(u);
        if (query_count(u) >= degree())
            throw std::invalid_argument("answer_query: vertex already queried to its full degree");
        Vertex ans;
        if (is_dummy(u)) {
            ans = pick(u, 0, n_);
        } else if (in_c_free(u) && query_count(u) < 2 * k_) {
            ans = pick(u, 0, dummy_end_);
        } else {
            if (in_c_free(u)) pair_with_free_partner(u);
            ans = answer_used(u);
        }
        revealed_bits_[u][ans] = true;
        revealed_[u].push_back(ans);
        transcript_.emplace_back(u, ans);
        return ans;
    }

    /// Referee hook: force (u, v) into the hidden non-edge matching. Both
    /// endpoints must still be free.
    void commit_pair(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v || !in_c_free(u) || !in_c_free(v))
            throw std::logic_error("commit_pair: endpoints must be distinct free core vertices");
        partner_[u] = v;
        partner_[v] = u;
        core_pairs_.emplace_back(u, v);
        c_used_count_ += 2;
    }

    /// A concrete family member consistent with every answer so far: the
    /// remaining free vertices are paired in ascending order and each
    /// adjacency slice lists the revealed answers first, in query order,
    /// followed by the rest ascending.
    Graph finalize_consistent_graph() const {
        std::vector<Vertex> partner = partner_;
        std::vector<Vertex> free;
        for (Vertex v = dummy_end_; v < n_; ++v)
            if (partner[v] == kNone) free.push_back(v);
        for (std::size_t i = 0; i + 1 < free.size(); i += 2) {
            partner[free[i]] = free[i + 1];
            partner[free[i + 1]] = free[i];
        }

        std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n_) + 1, 0);
        for (Vertex v = 0; v < n_; ++v) offsets[v + 1] = offsets[v] + degree();
        std::vector<Vertex> neighbors;
        neighbors.reserve(offsets.back());
        for (Vertex v = 0; v < n_; ++v) {
            neighbors.insert(neighbors.end(), revealed_[v].begin(), revealed_[v].end());
            for (Vertex u = 0; u < n_; ++u)
                if (u != v && u != partner[v] && !revealed_bits_[v][u]) neighbors.push_back(u);
        }
        return Graph::from_csr(n_, std::move(offsets), std::move(neighbors));
    }

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw std::invalid_argument("adversary: vertex id out of range");
    }

    bool valid_answer(Vertex u, Vertex c) const {
        return c != u && c != partner_[u] && !revealed_bits_[u][c];
    }

    std::optional<Vertex> try_pick(Vertex u, Vertex lo, Vertex hi) const {
        if (rng_ == nullptr) {
            for (Vertex c = lo; c < hi; ++c)
                if (valid_answer(u, c)) return c;
            return std::nullopt;
        }
        std::vector<Vertex> candidates;
        for (Vertex c = lo; c < hi; ++c)
            if (valid_answer(u, c)) candidates.push_back(c);
        if (candidates.empty()) return std::nullopt;
        return candidates[uniform_below(*rng_, candidates.size())];
    }

    Vertex pick(Vertex u, Vertex lo, Vertex hi) const {
        if (auto c = try_pick(u, lo, hi)) return *c;
        throw std::logic_error("adversary: no consistent answer available");
    }

    // Used-core answers prefer core vertices; once those run out the
    // remaining unrevealed dummies (neighbors of every core vertex) serve.
    Vertex answer_used(Vertex u) {
        if (auto c = try_pick(u, dummy_end_, n_)) return *c;
        return pick(u, 0, dummy_end_);
    }

    void pair_with_free_partner(Vertex w) {
        std::optional<Vertex> chosen;
        if (rng_ == nullptr) {
            for (Vertex c = dummy_end_; c < n_; ++c)
                if (c != w && partner_[c] == kNone) {
                    chosen = c;
                    break;
                }
        } else {
            std::vector<Vertex> candidates;
            for (Vertex c = dummy_end_; c < n_; ++c)
                if (c != w && partner_[c] == kNone) candidates.push_back(c);
            if (!candidates.empty()) chosen = candidates[uniform_below(*rng_, candidates.size())];
        }
        // the free set always has even size, so a partner exists
        if (!chosen) throw std::logic_error("adversary: free core exhausted while pairing");
        partner_[w] = *chosen;
        partner_[*chosen] = w;
        core_pairs_.emplace_back(w, *chosen);
        c_used_count_ += 2;
    }

    std::uint64_t k_;
    Vertex n_ = 0;
    Vertex dummy_end_ = 0;
    Rng* rng_ = nullptr;
    std::vector<Vertex> partner_;
    std::vector<std::vector<bool>> revealed_bits_;
    std::vector<std::vector<Vertex>> revealed_;
    std::vector<Edge> transcript_;
    std::vector<Edge> core_pairs_;
    std::uint64_t c_used_count_ = 0;
};

/// A deterministic maximal-matching strategy driven purely through the
/// query oracle.
class MmStrategy {
public:
    virtual ~MmStrategy() = default;
    virtual std::string_view name() const = 0;
    virtual Matching run(AdversaryState& oracle) = 0;
};

/// Textbook greedy: scan vertices in id order; probe each unmatched vertex
/// until an unmatched neighbor turns up or its adjacency array runs out.
class GreedyScanStrategy final : public MmStrategy {
public:
    std::string_view name() const override { return "greedy"; }

    Matching run(AdversaryState& oracle) override {
        const Vertex n = oracle.n();
        Matching m = Matching::empty(n);
        for (Vertex v = 0; v < n; ++v) {
            if (m.matched(v)) continue;
            while (oracle.query_count(v) < oracle.degree()) {
                const Vertex w = oracle.answer_query(v);
                if (!m.matched(w)) {
                    m.add(v, w);
                    break;
                }
            }
        }
        return m;
    }
};

/// Reads every adjacency array in full, then matches greedily over the now
/// fully known graph. Correct but quadratic in queries.
class ExhaustiveStrategy final : public MmStrategy {
public:
    std::string_view name() const override { return "exhaustive"; }

    Matching run(AdversaryState& oracle) override {
        const Vertex n = oracle.n();
        std::vector<std::vector<Vertex>> adj(n);
        for (Vertex v = 0; v < n; ++v)
            while (oracle.query_count(v) < oracle.degree()) adj[v].push_back(oracle.answer_query(v));
        Matching m = Matching::empty(n);
        for (Vertex v = 0; v < n; ++v) {
            if (m.matched(v)) continue;
            for (Vertex w : adj[v]) {
                if (!m.matched(w)) {
                    m.add(v, w);
                    break;
                }
            }
        }
        return m;
    }
};

using StrategyFactory = std::function<std::unique_ptr<MmStrategy>()>;

inline std::map<std::string, StrategyFactory, std::less<>>& strategy_registry() {
    static std::map<std::string, StrategyFactory, std::less<>> registry = {
        {"greedy", [] { return std::make_unique<GreedyScanStrategy>(); }},
        {"exhaustive", [] { return std::make_unique<ExhaustiveStrategy>(); }},
    };
    return registry;
}

inline void register_strategy(const std::string& name, StrategyFactory factory) {
    strategy_registry()[name] = std::move(factory);
}

/// "greedy", "exhaustive", or "plugin:<registered-name>".
inline std::unique_ptr<MmStrategy> make_strategy(std::string_view spec) {
    std::string_view key = spec;
    if (key.starts_with("plugin:")) key.remove_prefix(7);
    auto& registry = strategy_registry();
    const auto it = registry.find(key);
    if (it == registry.end()) throw std::invalid_argument("unknown strategy: " + std::string(spec));
    return it->second();
}

struct Verdict {
    std::uint64_t queries = 0;
    bool refuted = false;
    std::optional<Graph> witness;
};

/// One duel. A strategy that stays within the 2k^2 budget gets its output
/// attacked: an output edge on a committed non-edge is infeasible outright;
/// an output edge inside the free core is committed as a non-edge; failing
/// those, the referee looks for an unmatched pair some completion joins.
/// Beyond the budget the verdict just records the query count.
inline Verdict referee(MmStrategy& strategy, std::uint64_t k, Rng* choice_rng = nullptr) {
    AdversaryState adv(k, choice_rng);
    Matching m = strategy.run(adv);
    if (m.universe() != adv.n()) throw std::invalid_argument("referee: strategy output has the wrong vertex count");

    Verdict verdict;
    verdict.queries = adv.total_queries();
    if (verdict.queries > adv.query_budget()) return verdict;

    for (const auto& [u, v] : m.edges) {
        if (adv.committed_non_edge(u, v)) {
            verdict.refuted = true;
            verdict.witness = adv.finalize_consistent_graph();
            return verdict;
        }
    }
    for (const auto& [u, v] : m.edges) {
        if (adv.in_c_free(u) && adv.in_c_free(v)) {
            adv.commit_pair(u, v);
            verdict.refuted = true;
            verdict.witness = adv.finalize_consistent_graph();
            return verdict;
        }
    }

    std::vector<Vertex> unmatched;
    for (Vertex v = 0; v < adv.n(); ++v)
        if (!m.matched(v)) unmatched.push_back(v);
    for (std::size_t i = 0; i < unmatched.size(); ++i) {
        for (std::size_t j = i + 1; j < unmatched.size(); ++j) {
            const Vertex a = unmatched[i];
            const Vertex b = unmatched[j];
            if (adv.committed_non_edge(a, b)) continue;
            if (adv.in_c_free(a) && adv.in_c_free(b)) {
                std::vector<Vertex> others;
                for (Vertex f : adv.free_core_vertices())
                    if (f != a && f != b) others.push_back(f);
                if (others.size() < 2) continue;  // (a, b) is the forced final non-edge
                adv.commit_pair(a, others[0]);
                adv.commit_pair(b, others[1]);
            }
            verdict.refuted = true;
            verdict.witness = adv.finalize_consistent_graph();
            return verdict;
        }
    }
    return verdict;
}

}  // namespace claw
