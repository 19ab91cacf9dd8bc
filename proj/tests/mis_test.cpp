#include "claw/mis.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "claw/fraction.hpp"
#include "claw/generators.hpp"
#include "claw/verify.hpp"
#include "test_util.hpp"

using namespace claw;

namespace {

std::vector<Vertex> identity_order(Vertex n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return order;
}

std::uint64_t degree_sum(const Graph& g, const VertexSet& s) {
    std::uint64_t sum = 0;
    for (Vertex v : s.members) sum += g.degree(v);
    return sum;
}

}  // namespace

TEST(GreedyMis, PathAndCliqueAndEdgeless) {
    const Graph p3 = clawtest::path(3);
    const auto r = greedy_mis(p3);
    EXPECT_EQ(r.set.members, (std::vector<Vertex>{0, 2}));

    for (Vertex n : {2u, 5u, 9u}) {
        const auto k = greedy_mis(clique(n));
        EXPECT_EQ(k.set.members, (std::vector<Vertex>{0}));
    }

    const auto e = greedy_mis(clawtest::edgeless(6));
    EXPECT_EQ(e.set.size(), 6u);
    EXPECT_EQ(e.stats.marks_set, 0u);
    EXPECT_EQ(e.stats.work, 6u);
}

TEST(GreedyMis, CycleFiveIdentityOrder) {
    const auto r = greedy_mis(clawtest::cycle(5));
    EXPECT_EQ(r.set.members, (std::vector<Vertex>{0, 2}));
}

TEST(GreedyMis, OrderValidation) {
    const Graph p3 = clawtest::path(3);
    std::vector<Vertex> repeat{0, 0, 1};
    EXPECT_THROW(greedy_mis(p3, repeat), std::invalid_argument);
    std::vector<Vertex> oob{0, 1, 3};
    EXPECT_THROW(greedy_mis(p3, oob), std::invalid_argument);
    std::vector<Vertex> wrong_len{0, 1};
    EXPECT_THROW(greedy_mis(p3, wrong_len), std::invalid_argument);
}

TEST(GreedyMis, StatsTieOutToProbes) {
    for (const Graph& g : clawtest::random_corpus(40, 1, 24, 5)) {
        ProbeCounter pc;
        const auto r = greedy_mis(g, &pc);
        EXPECT_EQ(pc.neighbor_probes, degree_sum(g, r.set));
        EXPECT_EQ(pc.neighbor_probes, r.stats.marks_set);
        EXPECT_EQ(pc.degree_probes, r.set.size());
        EXPECT_EQ(r.stats.vertices_scanned, g.num_vertices());
        EXPECT_EQ(r.stats.work, r.stats.vertices_scanned + r.stats.marks_set);
    }
}

TEST(GreedyMis, OutputIsMaximalIndependent) {
    Rng rng(31);
    for (const Graph& g : clawtest::random_corpus(60, 1, 20, 13)) {
        auto order = identity_order(g.num_vertices());
        shuffle_range(order.begin(), order.end(), rng);
        const auto r = greedy_mis(g, order);
        EXPECT_TRUE(is_maximal_independent_set(g, r.set));
    }
}

TEST(GreedyMis, MarksWithinBetaBound) {
    for (const Graph& g : clawtest::random_corpus(50, 1, 14, 17)) {
        const std::uint64_t beta = neighborhood_independence(g);
        const auto r = greedy_mis(g);
        EXPECT_LE(r.stats.marks_set, g.num_vertices() * beta);
        EXPECT_LE(r.stats.work, mis_work_bound(g, std::max<std::uint64_t>(beta, 1)));
    }
}

TEST(CaroWeiMis, StarLeavesFirst) {
    const auto r = caro_wei_mis(clawtest::star(4));
    EXPECT_EQ(r.set.size(), 4u);
    EXPECT_FALSE(r.set.contains(0));  // center loses to the leaves
}

TEST(CaroWeiMis, CycleFiveMeetsBound) {
    const Graph c5 = clawtest::cycle(5);
    const auto r = caro_wei_mis(c5);
    EXPECT_GE(r.set.size(), 2u);  // ceil(5/3)
    EXPECT_EQ(caro_wei_sum(c5), Fraction(5, 3));
}

TEST(CaroWeiMis, EdgelessBoundTight) {
    const Graph g = clawtest::edgeless(4);
    const auto r = caro_wei_mis(g);
    EXPECT_EQ(r.set.size(), 4u);
    EXPECT_EQ(caro_wei_sum(g), Fraction(4));
}

TEST(CaroWeiMis, MeetsBoundOnRandomGraphs) {
    for (const Graph& g : clawtest::random_corpus(1000, 1, 32, 23)) {
        const auto r = caro_wei_mis(g);
        EXPECT_GE(Fraction(r.set.size()), caro_wei_sum(g));
        EXPECT_TRUE(is_maximal_independent_set(g, r.set));
    }
}

TEST(CaroWeiMis, DegreeOrderIsSortedAndStable) {
    const Graph g = clawtest::star(3);  // degrees 3,1,1,1
    EXPECT_EQ(degree_ascending_order(g), (std::vector<Vertex>{1, 2, 3, 0}));
}

TEST(MisWorkBound, Examples) {
    EXPECT_EQ(mis_work_bound(clawtest::edgeless(100), 2), 300u);
    EXPECT_EQ(mis_work_bound(clawtest::edgeless(10), 0), 10u);
    EXPECT_EQ(mis_work_bound(clawtest::edgeless(5), 1), 10u);
}

// Any greedy MIS is a beta-approximation of the maximum independent set.
TEST(GreedyMis, BetaApproximation) {
    Rng rng(41);
    for (const Graph& g : clawtest::random_corpus(60, 2, 14, 43)) {
        const std::uint64_t beta = neighborhood_independence(g);
        if (beta == 0) continue;
        const std::uint64_t alpha = max_independent_set_size(g);
        auto order = identity_order(g.num_vertices());
        for (int rep = 0; rep < 3; ++rep) {
            shuffle_range(order.begin(), order.end(), rng);
            const auto r = greedy_mis(g, order);
            EXPECT_GE(r.set.size() * beta, alpha);
        }
    }
}
