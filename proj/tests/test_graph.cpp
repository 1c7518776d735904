#include <gtest/gtest.h>

#include <random>

#include "asr/canonical.hpp"
#include "asr/connectivity.hpp"
#include "asr/copies.hpp"
#include "asr/graph.hpp"
#include "asr/graph_io.hpp"
#include "oracles.hpp"

using namespace asr;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// graph6 decoding written directly from the format description: a bit
// string of the upper triangle, column by column, six bits per byte.
Graph decode_by_bits(const std::string& s) {
    int n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
    std::vector<Edge> es;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits[k]) es.push_back({i, j});
    return Graph(n, es);
}

}  // namespace

TEST(Graph, RejectsLoopsAndParallelEdges) {
    EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(Graph, EdgeIdsFollowSortedOrder) {
    Graph g(4, {{2, 3}, {1, 0}, {0, 3}});
    ASSERT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{0, 3}));
    EXPECT_EQ(g.edge_id(3, 2), 2);
    EXPECT_EQ(g.edge_id(1, 2), -1);
}

TEST(Copies, KnownCounts) {
    EXPECT_EQ(enumerate_copies(complete_graph(4), complete_graph(3)).size(), 4u);
    EXPECT_EQ(enumerate_copies(cycle_graph(4), complete_graph(3)).size(), 0u);
    EXPECT_EQ(enumerate_copies(complete_graph(4), cycle_graph(4)).size(), 3u);
    EXPECT_EQ(enumerate_copies(complete_graph(5), complete_graph(5)).size(), 1u);
}

TEST(Copies, MatchNaiveInjectionOracle) {
    std::mt19937_64 rng(7);
    std::vector<Graph> patterns{complete_graph(3), cycle_graph(4), path_graph(3), complete_graph(4),
                                cycle_graph(5), complete_bipartite(2, 3), bowtie()};
    for (int trial = 0; trial < 60; ++trial) {
        Graph host = oracle::random_graph(rng, 4 + trial % 5, 0.55);
        for (const auto& pat : patterns) {
            auto naive = oracle::naive_copies(host, pat);
            auto got = enumerate_copies(host, pat);
            ASSERT_EQ(got.size(), naive.size()) << describe(host);
            for (const auto& c : got.copies) {
                std::vector<Edge> es;
                for (int id : c.edges) es.push_back(host.edge(id));
                EXPECT_TRUE(naive.count(es));
                EXPECT_TRUE(oracle::naive_isomorphic(to_graph(host, c), pat));
            }
        }
    }
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_two_connected(complete_graph(4)));
    EXPECT_FALSE(is_two_connected(path_graph(3)));
    EXPECT_FALSE(is_two_connected(bowtie()));
    EXPECT_FALSE(is_two_connected(complete_graph(2)));
    EXPECT_TRUE(is_two_connected(complete_graph(3)));

    auto b = block_decomposition(bowtie());
    ASSERT_EQ(b.size(), 2u);
    for (const auto& blk : b) EXPECT_TRUE(are_isomorphic(blk.graph, complete_graph(3)));
    EXPECT_EQ(block_decomposition(complete_graph(4)).size(), 1u);
    auto single = block_decomposition(complete_graph(2));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].graph, complete_graph(2));
}

TEST(Connectivity, AgreesWithVertexDeletionOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 3 + trial % 7, 0.45);
        EXPECT_EQ(is_two_connected(g), oracle::naive_two_connected(g)) << describe(g);
        auto blocks = block_decomposition(g);
        std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
        for (const auto& blk : blocks) {
            for (int id : blk.sub.edges) ++seen[id];
            EXPECT_TRUE(blk.graph.edge_count() == 1 || is_two_connected(blk.graph));
        }
        for (int c : seen) EXPECT_EQ(c, 1);
    }
}

TEST(Canonical, Examples) {
    Graph c4a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    EXPECT_EQ(canonical_form(c4a).graph, canonical_form(c4b).graph);
    Graph pa(3, {{0, 1}, {1, 2}});
    Graph pb(3, {{2, 0}, {0, 1}});
    EXPECT_EQ(canonical_form(pa).graph, canonical_form(pb).graph);
    EXPECT_EQ(canonical_form(complete_graph(3)).graph, complete_graph(3));
}

TEST(Canonical, CongruenceUnderRandomPermutations) {
    std::mt19937_64 rng(3);
    std::vector<Graph> tests{complete_bipartite(3, 3), cycle_graph(6), complete_graph(5), bowtie(),
                             Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}})};
    for (int i = 0; i < 20; ++i) tests.push_back(oracle::random_graph(rng, 5 + i % 12, 0.4));
    for (const auto& g : tests) {
        auto base = canonical_form(g);
        EXPECT_EQ(relabel(g, base.labeling), base.graph);
        for (int k = 0; k < 50; ++k) {
            Graph h = oracle::random_permute(rng, g);
            EXPECT_EQ(canonical_form(h).graph, base.graph) << describe(g);
        }
    }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
    auto six = oracle::all_graphs_up_to_iso(5);
    std::set<std::string> keys;
    for (const auto& g : six) keys.insert(canonical_key(g));
    EXPECT_EQ(keys.size(), six.size());
    EXPECT_EQ(six.size(), 34u);
}

TEST(Canonical, AgreesWithPermutationOracle) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph a = oracle::random_graph(rng, 6, 0.5);
        Graph b = oracle::random_graph(rng, 6, 0.5);
        EXPECT_EQ(are_isomorphic(a, b), oracle::naive_isomorphic(a, b));
    }
}

TEST(Union, Examples) {
    Graph a(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph b(5, {{2, 3}, {3, 4}, {2, 4}});
    Graph u = graph_union(a, b);
    EXPECT_EQ(u.vertex_count(), 5);
    EXPECT_EQ(u.edge_count(), 6);
    EXPECT_EQ(graph_union(a, a), a);
    EXPECT_EQ(graph_union(Graph(2, {{0, 1}}), Graph(3, {{1, 2}})), path_graph(3));
}

TEST(Graph6, Examples) {
    Graph k4 = parse_graph6("C~");
    EXPECT_EQ(k4, complete_graph(4));
    EXPECT_EQ(decode_by_bits("C~"), k4);
    EXPECT_EQ(emit_graph6(complete_graph(2)), "A_");
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C~~"), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 13), 0.5);
        std::string s = emit_graph6(g);
        EXPECT_EQ(parse_graph6(s), g);
        EXPECT_EQ(decode_by_bits(s), g);
    }
    Graph big = oracle::random_graph(rng, 70, 0.1);
    EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(EdgeList, ParseAndEmit) {
    Graph g = parse_edge_list("# triangle\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(g, complete_graph(3));
    EXPECT_EQ(parse_edge_list(emit_edge_list(Graph(5, {{0, 4}}))), Graph(5, {{0, 4}}));
    EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
    EXPECT_EQ(load_graph("C~"), complete_graph(4));
    EXPECT_EQ(load_graph("0 1\n1 2"), path_graph(3));
}
