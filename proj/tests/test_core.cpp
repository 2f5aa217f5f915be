#include "hyperext/bigint.hpp"
#include "hyperext/extremal.hpp"
#include "hyperext/hypergraph.hpp"
#include "hyperext/io.hpp"
#include "hyperext/random.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hyperext;
using testutil::hg;
using testutil::vs;

TEST(VertexSet, BasicQueries) {
    const VertexSet s = vs({1, 3, 5});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.min(), 0);
    EXPECT_EQ(s.max(), 4);
    EXPECT_EQ(s.to_string(), "{1,3,5}");
    EXPECT_TRUE(s.contains(vs({1, 5})));
    EXPECT_FALSE(s.intersects(vs({2, 4})));
    EXPECT_EQ(VertexSet::first(64).size(), 64);
    EXPECT_EQ(VertexSet::first(0).size(), 0);
}

TEST(VertexSet, SubsetsComeOutInColexOrder) {
    std::vector<VertexSet> seen;
    for_each_subset(VertexSet::first(5), 3, [&](VertexSet e) { seen.push_back(e); });
    ASSERT_EQ(seen.size(), 10u);
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_EQ(seen.front(), vs({1, 2, 3}));
    EXPECT_EQ(seen[1], vs({1, 2, 4}));
    EXPECT_EQ(seen.back(), vs({3, 4, 5}));
}

TEST(VertexSet, SubsetsOfSparseGround) {
    std::vector<VertexSet> seen;
    for_each_subset(vs({2, 4, 7}), 2, [&](VertexSet e) { seen.push_back(e); });
    EXPECT_EQ(seen, (std::vector<VertexSet>{vs({2, 4}), vs({2, 7}), vs({4, 7})}));
}

TEST(Binomial, ExactValues) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(to_decimal(binomial(100, 50)), "100891344545564193334812497256");
    EXPECT_EQ(small_binomial(64, 32), 1832624140942590534ULL);
    EXPECT_EQ(parse_decimal("123456789012345678901234567890"), BigInt("123456789012345678901234567890"));
}

TEST(Binomial, PascalRule) {
    for (int x = 1; x <= 40; ++x)
        for (int y = 1; y <= x; ++y) EXPECT_EQ(binomial(x, y), binomial(x - 1, y) + binomial(x - 1, y - 1));
}

TEST(Hypergraph, CanonicalizesAndValidates) {
    const Hypergraph h(4, 2, {vs({3, 4}), vs({1, 2}), vs({3, 4})});
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h.edges()[0], vs({1, 2}));
    EXPECT_TRUE(h.contains(vs({3, 4})));
    EXPECT_THROW(Hypergraph(4, 2, {vs({1, 2, 3})}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, 2, {vs({1, 4})}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, 4, {}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(65, 2, {}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, 0, {}), std::invalid_argument);
}

TEST(Hypergraph, CompleteGraphSize) {
    EXPECT_EQ(Hypergraph::complete(7, 3).size(), 35u);
    EXPECT_EQ(Hypergraph::complete(7, 3, 4).size(), 4u);
}

TEST(InducedSubhypergraph, Examples) {
    const Hypergraph k5 = Hypergraph::complete(5, 3);
    EXPECT_EQ(induced_subhypergraph(k5, k5.vertices()), k5);
    const Hypergraph h = hg(4, 3, {{1, 2, 3}, {2, 3, 4}});
    EXPECT_EQ(induced_subhypergraph(h, vs({1, 2, 3})), hg(4, 3, {{1, 2, 3}}));
    const Hypergraph star = build_extremal_family(8, 1, 3, 1);
    EXPECT_TRUE(induced_subhypergraph(star, vs({2, 3, 4, 5, 6, 7, 8})).empty());
}

TEST(DeleteVertices, Examples) {
    const Hypergraph h = hg(5, 3, {{1, 2, 3}});
    EXPECT_EQ(delete_vertices(h, VertexSet{}), h);
    EXPECT_TRUE(delete_vertices(h, vs({3})).empty());
    EXPECT_TRUE(delete_vertex(build_extremal_family(5, 1, 2, 1), 0).empty());
    EXPECT_EQ(delete_vertices(h, vs({3})).n(), 5);
}

TEST(Neighborhood, Examples) {
    const auto n1 = neighborhood(Hypergraph::complete(4, 2), vs({1}));
    EXPECT_EQ(n1, (std::vector<VertexSet>{vs({2}), vs({3}), vs({4})}));
    EXPECT_EQ(degree(Hypergraph::complete(4, 2), 0), 3u);
    EXPECT_EQ(neighborhood(hg(3, 3, {{1, 2, 3}}), vs({1, 2})), std::vector<VertexSet>{vs({3})});
    const Hypergraph f = build_extremal_family(6, 1, 3, 1);
    const auto n6 = neighborhood(f, vs({1}));
    EXPECT_EQ(n6.size(), 10u);
    for (VertexSet t : n6) EXPECT_FALSE(t.contains(0));
    EXPECT_THROW(neighborhood(f, vs({1, 2, 3})), std::invalid_argument);
}

TEST(HypergraphProperties, InducedAndDeletedPartitionTheEdges) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.between(3, 9);
        const int r = rng.between(1, std::min(n, 4));
        const Hypergraph h = random_hypergraph(rng, n, r, rng.unit());
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.5)) s = s.with(v);
        const VertexSet comp = h.vertices() - s;
        std::size_t meeting = 0;
        for (VertexSet e : h.edges()) meeting += e.intersects(comp) ? 1 : 0;
        EXPECT_EQ(induced_subhypergraph(h, s).size() + meeting, h.size());
        EXPECT_EQ(delete_vertices(h, s), induced_subhypergraph(h, comp));
        if (r >= 2) {
            for_each_subset(h.vertices(), r - 1, [&](VertexSet t) {
                std::size_t containing = 0;
                for (VertexSet e : h.edges()) containing += e.contains(t) ? 1 : 0;
                EXPECT_EQ(degree(h, t), containing);
                EXPECT_EQ(neighborhood(h, t).size(), containing);
            });
        }
    }
}

TEST(ColoredFamily, Validation) {
    EXPECT_THROW(ColoredFamily({}), std::invalid_argument);
    EXPECT_THROW(ColoredFamily({Hypergraph::empty(4, 2), Hypergraph::empty(5, 2)}), std::invalid_argument);
    EXPECT_THROW(ColoredFamily({Hypergraph::empty(4, 2), Hypergraph::empty(4, 3)}), std::invalid_argument);
    const ColoredFamily fam({Hypergraph::empty(4, 2), Hypergraph::complete(4, 2)});
    EXPECT_EQ(fam.k(), 2);
    EXPECT_EQ(fam[1].size(), 6u);
}

TEST(HgFormat, ParsesTheSimpleExample) {
    const ParseResult res = parse_hypergraph(std::string("3 2\n1 2\n1 3\n"));
    EXPECT_EQ(res.graph, hg(3, 2, {{1, 2}, {1, 3}}));
    EXPECT_TRUE(res.warnings.empty());
}

TEST(HgFormat, CommentsBlankLinesAndOrdering) {
    const ParseResult res = parse_hypergraph(std::string("# header next\n\n4 2\n3 4\n# edge\n  1 2  \n2 1\n"));
    EXPECT_EQ(serialize_hypergraph(res.graph), "4 2\n1 2\n3 4\n");
    ASSERT_EQ(res.warnings.size(), 1u);
}

TEST(HgFormat, RejectsMalformedInput) {
    try {
        parse_hypergraph(std::string("4 3\n1 2 2\n"));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_NE(std::string(e.what()).find("repeated"), std::string::npos);
    }
    EXPECT_THROW(parse_hypergraph(std::string("4 2\n1 5\n")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("4 2\n0 1\n")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("4 2\n1 2 3\n")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("4\n")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("4 2\n1 x\n")), ParseError);
    EXPECT_THROW(parse_hypergraph(std::string("2 3\n")), ParseError);
}

TEST(HgFormat, DuplicatesCanBeFatal) {
    ParseOptions strict;
    strict.duplicate_edges_are_errors = true;
    EXPECT_THROW(parse_hypergraph(std::string("3 2\n1 2\n2 1\n"), strict), ParseError);
}

TEST(HgFormat, RoundTripIsAFixpoint) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.between(1, 10);
        const int r = rng.between(1, std::min(n, 4));
        const Hypergraph h = random_hypergraph(rng, n, r, rng.unit());
        const std::string text = serialize_hypergraph(h);
        const Hypergraph back = parse_hypergraph(text).graph;
        EXPECT_EQ(back, h);
        EXPECT_EQ(serialize_hypergraph(back), text);
        EXPECT_EQ(oracle::edge_set(back), oracle::edge_set(h));
    }
}

TEST(Rng, SeedDeterminesTheStream) {
    Rng a(42), b(42), c(43);
    std::vector<std::uint64_t> xa, xb, xc;
    for (int i = 0; i < 16; ++i) {
        xa.push_back(a.below(1000));
        xb.push_back(b.below(1000));
        xc.push_back(c.below(1000));
    }
    EXPECT_EQ(xa, xb);
    EXPECT_NE(xa, xc);
}
