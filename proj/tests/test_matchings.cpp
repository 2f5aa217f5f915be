#include "hyperext/extremal.hpp"
#include "hyperext/io.hpp"
#include "hyperext/matchings.hpp"
#include "hyperext/random.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hyperext;
using testutil::hg;
using testutil::vs;

namespace {

Hypergraph disjoint_edges(int n, int r, int k) {
    std::vector<VertexSet> edges;
    for (int i = 0; i < k; ++i) edges.push_back(VertexSet::range(i * r, (i + 1) * r));
    return Hypergraph(n, r, edges);
}

std::vector<oracle::EdgeSet> colors_of(const ColoredFamily& fam) {
    std::vector<oracle::EdgeSet> out;
    for (const Hypergraph& h : fam.members()) out.push_back(oracle::edge_set(h));
    return out;
}

}  // namespace

TEST(MatchingNumber, Examples) {
    EXPECT_EQ(matching_number(Hypergraph::empty(5, 2)).size, 0);
    for (int k = 1; k <= 4; ++k) {
        const MatchingResult m = matching_number(disjoint_edges(12, 3, k));
        EXPECT_EQ(m.size, k);
    }
    const Hypergraph f = build_extremal_family(10, 2, 3, 1);
    const MatchingResult m = matching_number(f);
    EXPECT_EQ(m.size, 2);
    EXPECT_TRUE(is_matching_of(f, m.witness));
}

TEST(MatchingNumber, AtMost) {
    EXPECT_TRUE(has_matching_at_most(Hypergraph::complete(3 * 2 + 3 - 1, 3), 2));
    EXPECT_FALSE(has_matching_at_most(disjoint_edges(9, 3, 3), 2));
    EXPECT_TRUE(has_matching_at_most(build_extremal_family(9, 2, 3, 2), 2));
    EXPECT_TRUE(has_matching_at_most(Hypergraph::empty(4, 2), 0));
    EXPECT_FALSE(has_matching_at_most(hg(4, 2, {{1, 2}}), 0));
}

TEST(MatchingNumber, MatchesSubsetOracle) {
    Rng rng(101);
    int checked = 0;
    while (checked < 1500) {
        const int n = rng.between(2, 10);
        const int r = rng.between(1, std::min(n, 4));
        const std::size_t m = static_cast<std::size_t>(rng.between(0, 12));
        const Hypergraph h = random_hypergraph_with_size(rng, n, r, m);
        const MatchingResult res = matching_number(h);
        ASSERT_EQ(res.size, oracle::matching_number_subsets(h)) << serialize_hypergraph(h);
        EXPECT_TRUE(is_matching_of(h, res.witness));
        EXPECT_EQ(static_cast<int>(res.witness.size()), res.size);
        ++checked;
    }
}

TEST(MatchingNumber, MatchesRecursiveOracleOnDenseGraphs) {
    Rng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.between(4, 12);
        const int r = rng.between(2, 3);
        const Hypergraph h = random_hypergraph(rng, n, r, rng.unit() * 0.4);
        EXPECT_EQ(matching_number(h).size, oracle::matching_number_recursive(h));
    }
}

TEST(MatchingNumber, DeletingAVertexLowersByAtMostOne) {
    Rng rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.between(3, 10);
        const int r = rng.between(2, 3);
        const Hypergraph h = random_hypergraph(rng, n, r, rng.unit());
        const int nu = matching_number(h).size;
        for (int v = 0; v < n; ++v) {
            const int without = matching_number(delete_vertex(h, v)).size;
            EXPECT_TRUE(without == nu || without == nu - 1);
        }
    }
}

TEST(MatchingNumber, BudgetIsAHardError) {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    EXPECT_THROW(matching_number(Hypergraph::complete(12, 3), tiny), BudgetExceeded);
}

TEST(FindMatchingOfSize, StopsAtTarget) {
    const Hypergraph k = Hypergraph::complete(12, 3);
    const auto m = find_matching_of_size(k.edges(), 3, 2);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->size(), 2u);
    EXPECT_TRUE(is_matching_of(k, *m));
    EXPECT_FALSE(find_matching_of_size(k.edges(), 3, 5).has_value());
}

TEST(RainbowMatching, Examples) {
    const ColoredFamily good({hg(4, 2, {{1, 2}}), hg(4, 2, {{3, 4}})});
    const auto m = find_rainbow_matching(good);
    ASSERT_TRUE(m.has_value());
    ASSERT_EQ(m->picks.size(), 2u);
    EXPECT_EQ(m->picks[0].color, 0);
    EXPECT_EQ(m->picks[0].edge, vs({1, 2}));
    EXPECT_EQ(m->picks[1].edge, vs({3, 4}));
    EXPECT_TRUE(is_rainbow_matching_of(good, *m));

    const ColoredFamily same({hg(4, 2, {{1, 2}}), hg(4, 2, {{1, 2}})});
    EXPECT_FALSE(find_rainbow_matching(same).has_value());

    const ColoredFamily single({hg(5, 3, {{2, 3, 5}})});
    EXPECT_TRUE(find_rainbow_matching(single).has_value());
    EXPECT_FALSE(find_rainbow_matching(ColoredFamily({Hypergraph::empty(5, 3)})).has_value());
}

TEST(RainbowMatching, MatchesProductOracle) {
    Rng rng(109);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.between(4, 8);
        const int r = rng.between(2, 3);
        const int k = rng.between(1, 3);
        std::vector<Hypergraph> members;
        for (int c = 0; c < k; ++c) members.push_back(random_hypergraph(rng, n, r, rng.unit() * 0.5));
        const ColoredFamily fam(members);
        const auto m = find_rainbow_matching(fam);
        EXPECT_EQ(m.has_value(), oracle::has_rainbow_matching(colors_of(fam)));
        if (m) {
            EXPECT_TRUE(is_rainbow_matching_of(fam, *m));
        }
    }
}

TEST(RainbowMatching, LargeColorsAlwaysMatch) {
    Rng rng(113);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = rng.between(2, 3);
        const int k = rng.between(1, 3);
        const int n = rng.between(r * k, 10);
        const BigInt floor_size = BigInt(k - 1) * binomial(n - 1, r - 1);
        const std::size_t total = static_cast<std::size_t>(binomial(n, r));
        const std::size_t min_size = static_cast<std::size_t>(floor_size) + 1;
        if (min_size > total) continue;
        std::vector<Hypergraph> members;
        for (int c = 0; c < k; ++c)
            members.push_back(random_hypergraph_with_size(
                rng, n, r, min_size + static_cast<std::size_t>(rng.below(total - min_size + 1))));
        const ColoredFamily fam(members);
        const auto m = find_rainbow_matching(fam);
        ASSERT_TRUE(m.has_value());
        EXPECT_TRUE(is_rainbow_matching_of(fam, *m));
    }
}

TEST(HighDegreeGreedy, Examples) {
    const Hypergraph k9 = Hypergraph::complete(9, 3);
    const std::vector<int> three{0, 1, 2};
    const auto m = greedy_matching_from_high_degree_vertices(k9, three);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->size(), 3u);
    EXPECT_TRUE(is_matching_of(k9, *m));
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(m->edges[static_cast<std::size_t>(i)].contains(i));

    const Hypergraph isolated = hg(9, 3, {{1, 4, 5}, {1, 6, 7}});
    const std::vector<int> two{0, 1};
    EXPECT_FALSE(greedy_matching_from_high_degree_vertices(isolated, two).has_value());
    const std::vector<int> repeated{0, 0};
    EXPECT_THROW(greedy_matching_from_high_degree_vertices(k9, repeated), std::invalid_argument);
}

// Both vertices exceed the degree bound, yet the first admissible edge through
// vertex 1 ({1,3,4}) meets every edge through vertex 2 that avoids vertex 1.
TEST(HighDegreeGreedy, PurePassCanStallAboveTheBound) {
    std::vector<VertexSet> edges;
    for_each_subset(VertexSet::range(2, 10), 2, [&](VertexSet p) { edges.push_back(p.with(0)); });
    for (int x = 2; x < 10; ++x) edges.push_back(vs({1, 2}).with(x));
    for (int x = 3; x < 10; ++x) edges.push_back(vs({2, 3}).with(x));
    edges.push_back(vs({2, 4, 5}));
    edges.push_back(vs({2, 4, 6}));
    const Hypergraph h(10, 3, edges);
    const BigInt bound = high_degree_threshold(10, 2, 3);
    ASSERT_EQ(bound, 16);
    ASSERT_GT(BigInt(degree(h, 0)), bound);
    ASSERT_EQ(degree(h, 1), 17u);

    const std::vector<int> order{0, 1};
    EXPECT_FALSE(greedy_matching_from_high_degree_vertices(h, order, false).has_value());
    const auto m = greedy_matching_from_high_degree_vertices(h, order);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->size(), 2u);
    EXPECT_TRUE(is_matching_of(h, *m));
}

TEST(HighDegreeGreedy, SucceedsWheneverDegreesExceedTheBound) {
    Rng rng(127);
    int exercised = 0;
    for (int trial = 0; trial < 3000 && exercised < 400; ++trial) {
        const int r = rng.between(2, 3);
        const int k = rng.between(1, 3);
        const int n = rng.between(r * k, 10);
        const Hypergraph h = random_hypergraph(rng, n, r, 0.4 + 0.6 * rng.unit());
        const BigInt bound = high_degree_threshold(n, k, r);
        std::vector<int> high;
        for (int v = 0; v < n; ++v)
            if (BigInt(degree(h, v)) > bound) high.push_back(v);
        if (static_cast<int>(high.size()) < k) continue;
        for (std::size_t i = high.size(); i > 1; --i) std::swap(high[i - 1], high[rng.below(i)]);
        high.resize(static_cast<std::size_t>(k));
        const auto m = greedy_matching_from_high_degree_vertices(h, high);
        ASSERT_TRUE(m.has_value()) << serialize_hypergraph(h);
        EXPECT_TRUE(is_matching_of(h, *m));
        ++exercised;
    }
    EXPECT_GE(exercised, 400);
}

TEST(TupleGreedy, Examples) {
    const Hypergraph f = build_extremal_family(12, 2, 3, 2);
    const std::vector<VertexSet> tuples{vs({1, 2}), vs({3, 4})};
    const auto m = greedy_matching_from_disjoint_tuples(f, tuples);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->size(), 2u);
    EXPECT_TRUE(is_matching_of(f, *m));
    EXPECT_EQ(m->edges[0], vs({1, 2, 5}));
    EXPECT_EQ(m->edges[1], vs({3, 4, 6}));

    const Hypergraph one = hg(6, 3, {{2, 5, 6}});
    const std::vector<VertexSet> single{vs({2})};
    const auto m1 = greedy_matching_from_disjoint_tuples(one, single);
    ASSERT_TRUE(m1.has_value());
    EXPECT_EQ(m1->edges, std::vector<VertexSet>{vs({2, 5, 6})});

    const std::vector<VertexSet> lonely{vs({1}), vs({3})};
    EXPECT_FALSE(greedy_matching_from_disjoint_tuples(one, lonely).has_value());

    const std::vector<VertexSet> overlapping{vs({1, 2}), vs({2, 3})};
    EXPECT_THROW(greedy_matching_from_disjoint_tuples(f, overlapping), std::invalid_argument);
    const std::vector<VertexSet> too_big{vs({1, 2, 3})};
    EXPECT_THROW(greedy_matching_from_disjoint_tuples(f, too_big), std::invalid_argument);
}

TEST(TupleGreedy, SucceedsWheneverTupleDegreesExceedTheBound) {
    Rng rng(131);
    int exercised = 0;
    for (int trial = 0; trial < 20000 && exercised < 300; ++trial) {
        const int r = rng.between(2, 4);
        const int a = rng.between(1, r - 1);
        const int k = rng.between(1, std::min(3, 10 / r));
        const int n = rng.between(r * k, 10);
        const Hypergraph h = random_hypergraph(rng, n, r, 0.7 + 0.3 * rng.unit());
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        std::vector<VertexSet> tuples;
        for (int i = 0; i < k; ++i) {
            VertexSet t;
            for (int j = 0; j < a; ++j) t = t.with(perm[static_cast<std::size_t>(i * a + j)]);
            tuples.push_back(t);
        }
        const BigInt bound = tuple_degree_threshold(n, k, r, a);
        bool hypothesis = true;
        for (VertexSet t : tuples) hypothesis = hypothesis && BigInt(degree(h, t)) > bound;
        if (!hypothesis) continue;
        const auto m = greedy_matching_from_disjoint_tuples(h, tuples);
        ASSERT_TRUE(m.has_value()) << serialize_hypergraph(h);
        EXPECT_TRUE(is_matching_of(h, *m));
        for (std::size_t i = 0; i < tuples.size(); ++i) EXPECT_TRUE(m->edges[i].contains(tuples[i]));
        ++exercised;
    }
    EXPECT_GE(exercised, 300);
}
