#include <nonrep/generators.hpp>
#include <nonrep/graph.hpp>

#include <gtest/gtest.h>

using namespace nonrep;

TEST(Graph, CanonicalEdgeOrder)
{
    Graph g(4, {{2, 1}, {3, 0}, {0, 1}});
    std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}};
    EXPECT_EQ(g.edges(), expected);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(Graph, RejectsBadInput)
{
    EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
    EXPECT_THROW(Graph(3, {{1, 1}}), InvalidInput);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(Graph(-1, {}), InvalidInput);
    EXPECT_THROW(Graph(2, {}, {2}), InvalidInput);
}

TEST(Graph, LoopsAreSteps)
{
    Graph g(3, {{0, 1}, {1, 2}}, {1});
    EXPECT_TRUE(g.has_loop(1));
    EXPECT_TRUE(g.can_step(1, 1));
    EXPECT_FALSE(g.can_step(0, 0));
    EXPECT_EQ(g.degree(1), 3);
    std::vector<Vertex> steps(g.steps(1).begin(), g.steps(1).end());
    EXPECT_EQ(steps, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(g.neighbours(1).size(), 2u);
    EXPECT_EQ(g.loops(), std::vector<Vertex>{1});
}

TEST(Graph, ConnectivityAndTrees)
{
    EXPECT_TRUE(gen_path(5).is_tree());
    EXPECT_FALSE(gen_cycle(5).is_tree());
    Graph split(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(split.is_connected());
    EXPECT_EQ(split.components(), (std::vector<int>{0, 0, 1, 1}));
    EXPECT_TRUE(Graph(1, {}).is_tree());
    EXPECT_EQ(gen_path(4).distances_from(0), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(split.distances_from(0)[3], -1);
}

TEST(Graph, InducedSubgraph)
{
    auto [h, ids] = gen_cycle(5).induced({4, 0, 1});
    EXPECT_EQ(ids, (std::vector<Vertex>{0, 1, 4}));
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
    EXPECT_TRUE(gen_path(5).is_subgraph_of(gen_cycle(5)));
    EXPECT_FALSE(gen_cycle(5).is_subgraph_of(gen_path(5)));
}

TEST(Colouring, Counts)
{
    Colouring c({1, 3, 3, 5});
    EXPECT_EQ(c.colour_count(), 3);
    EXPECT_EQ(c.max_colour(), 5);
    EXPECT_THROW(Colouring({0, 1}), InvalidInput);
    EXPECT_THROW(c.check_covers(gen_path(3)), InvalidInput);
    EXPECT_NO_THROW(c.check_covers(gen_path(4)));
}

TEST(Generators, Families)
{
    EXPECT_EQ(gen_path(1).size(), 0u);
    EXPECT_EQ(gen_cycle(6).size(), 6u);
    EXPECT_THROW(gen_cycle(2), InvalidInput);
    EXPECT_EQ(gen_complete(6).size(), 15u);
    auto star = gen_star(5);
    EXPECT_EQ(star.order(), 5);
    EXPECT_EQ(star.degree(0), 4);
    EXPECT_EQ(gen_looped_path(4).loops().size(), 4u);
    auto petersen = gen_petersen();
    EXPECT_EQ(petersen.order(), 10);
    EXPECT_EQ(petersen.size(), 15u);
    for (Vertex v = 0; v < 10; ++v)
        EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Generators, SeededFamiliesAreReproducible)
{
    EXPECT_EQ(gen_random_tree(30, 7), gen_random_tree(30, 7));
    EXPECT_TRUE(gen_random_tree(30, 7).is_tree());
    EXPECT_EQ(gen_random_graph(12, 0.4, 3), gen_random_graph(12, 0.4, 3));
    EXPECT_EQ(gen_random_graph(6, 1.0, 1).size(), 15u);
    EXPECT_EQ(gen_random_graph(6, 0.0, 1).size(), 0u);
    auto a = gen_random_partial_ktree(16, 3, 5, 11);
    auto b = gen_random_partial_ktree(16, 3, 5, 11);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_LE(a.graph.max_degree(), 5);
    EXPECT_LE(a.decomposition.width(), 3);
}

TEST(Generators, SubdivisionOfK6)
{
    auto k6 = gen_complete(6);
    auto s = build_subdivision(k6);
    // Edge {i, j} gets j - i - 1 division vertices: 20 in total.
    EXPECT_EQ(s.graph.order(), 26);
    EXPECT_EQ(s.graph.size(), 35u);
    for (Vertex v = 0; v < 6; ++v) {
        EXPECT_EQ(s.levelling.levels[v], v);
        EXPECT_TRUE(s.origin[v].is_original());
    }
    EXPECT_FALSE(s.origin[6].is_original());
    EXPECT_EQ(s.origin[6].edge, (Edge{0, 2}));
    EXPECT_EQ(s.origin[6].step, 1);
    EXPECT_EQ(s.levelling.levels[6], 1);
    auto separated = build_subdivision(k6, SubdivisionRule::Separated);
    EXPECT_EQ(separated.graph.order(), 61);
    EXPECT_EQ(separated.levelling.levels[5], 10);
    for (auto [u, v] : separated.graph.edges()) {
        EXPECT_EQ(std::abs(separated.levelling.levels[u] - separated.levelling.levels[v]), 1);
        EXPECT_FALSE(u < 6 && v < 6);
    }
    EXPECT_THROW(build_subdivision(Graph(3, {{0, 1}})), InvalidInput);
    EXPECT_THROW(build_subdivision(gen_looped_path(3)), InvalidInput);
}

TEST(Generators, Extremal)
{
    auto e = gen_extremal(3, 10);
    EXPECT_EQ(e.graph.size(), 17u);
    EXPECT_EQ(e.colouring.colour_count(), 3);
    EXPECT_THROW(gen_extremal(4, 2), InvalidInput);
    EXPECT_THROW(gen_extremal(1, 5), InvalidInput);
}

TEST(Generators, LexProduct)
{
    auto lp = gen_lex_product(4, 2);
    EXPECT_EQ(lp.graph.order(), 8);
    // Each level is K_2 (4 edges), consecutive levels fully joined (3 * 4 edges).
    EXPECT_EQ(lp.graph.size(), 16u);
    EXPECT_EQ(lp.levelling.levels[5], 2);
}
