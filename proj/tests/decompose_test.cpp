#include <nonrep/decompose.hpp>
#include <nonrep/generators.hpp>
#include <nonrep/verify.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nonrep;

TEST(TreeDecomposition, Examples)
{
    auto tree = gen_random_tree(15, 2);
    auto td = tree_decomposition(tree);
    EXPECT_EQ(td.width(), 1);
    EXPECT_TRUE(validate_tree_decomposition(tree, td));

    auto k4 = tree_decomposition(gen_complete(4));
    EXPECT_EQ(k4.width(), 3);
    EXPECT_TRUE(validate_tree_decomposition(gen_complete(4), k4));

    auto cycle = tree_decomposition(gen_cycle(7));
    EXPECT_EQ(cycle.width(), 2);

    Graph split(5, {{0, 1}, {3, 4}});
    EXPECT_TRUE(validate_tree_decomposition(split, tree_decomposition(split)));
    EXPECT_EQ(TreeDecomposition{}.width(), -1);
}

TEST(TreeDecomposition, PartialKTrees)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto pk = gen_random_partial_ktree(18, 2, 5, seed);
        EXPECT_TRUE(validate_tree_decomposition(pk.graph, pk.decomposition));
        auto td = tree_decomposition(pk.graph);
        EXPECT_TRUE(validate_tree_decomposition(pk.graph, td));
        EXPECT_LE(td.width(), 2) << seed;
    }
}

TEST(TreePartition, Examples)
{
    auto path = tree_partition(gen_path(8));
    EXPECT_EQ(path.max_bag_size(), 1);
    EXPECT_EQ(path.bags.size(), 8u);
    EXPECT_TRUE(validate_tree_partition(gen_path(8), path));

    auto c6 = gen_cycle(6);
    auto tp = tree_partition(c6);
    EXPECT_EQ(tp.max_bag_size(), 2);
    EXPECT_TRUE(validate_tree_partition(c6, tp));
    EXPECT_EQ(tp.bags.front(), std::vector<Vertex>{0});
    EXPECT_EQ(tp.depths, (std::vector<int>{0, 1, 2, 3}));
}

TEST(TreePartition, RandomGraphsAreValid)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen_random_graph(4 + trial % 20, 0.15 + 0.05 * (trial % 5), rng());
        auto tp = tree_partition(g);
        ASSERT_TRUE(validate_tree_partition(g, tp)) << trial;
        auto shadow = shadow_levelling(g, tp);
        ASSERT_TRUE(validate_shadow_complete(shadow.completed, shadow.levelling)) << trial;
        ASSERT_LE(shadow.in_bag_index.max_colour(), tp.max_bag_size());
    }
}

TEST(ShadowLevelling, Examples)
{
    auto tree = gen_random_tree(12, 5);
    TreePartition singletons;
    for (Vertex v = 0; v < 12; ++v)
        singletons.bags.push_back({v});
    singletons.host_edges = tree.edges();
    auto shadow = shadow_levelling(tree, singletons);
    EXPECT_EQ(shadow.completed, tree);
    EXPECT_EQ(shadow.levelling.levels, tree.distances_from(0));

    auto c5 = gen_cycle(5);
    TreePartition whole{{{0, 1, 2, 3, 4}}, {}, {}};
    auto big = shadow_levelling(c5, whole);
    EXPECT_EQ(big.completed, gen_complete(5));
    EXPECT_EQ(big.levelling.max_level(), 0);
    EXPECT_EQ(big.in_bag_index.colour_count(), 5);

    auto c6 = gen_cycle(6);
    auto six = shadow_levelling(c6, tree_partition(c6));
    EXPECT_TRUE(validate_shadow_complete(six.completed, six.levelling));

    TreePartition broken{{{0, 1}, {2, 3, 4}}, {}, {}};
    EXPECT_THROW((void) shadow_levelling(c5, broken), InvalidInput);
}

TEST(TreewidthColouring, TreeInput)
{
    auto tree = gen_random_tree(20, 6);
    auto result = treewidth_colouring(tree, RepetitionMode::Path);
    EXPECT_EQ(result.max_bag, 1);
    EXPECT_LE(result.colouring.flat.colour_count(), 4);
    EXPECT_EQ(find_repetitive_path(tree, result.colouring.flat).status, VerdictStatus::Clean);
}

TEST(TreewidthColouring, PartialTwoTrees)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_random_partial_ktree(14, 2, 5, seed).graph;
        auto path = treewidth_colouring(g, RepetitionMode::Path);
        int l = path.max_bag;
        EXPECT_LE(path.colouring.flat.colour_count(), 4 * l);
        EXPECT_EQ(find_repetitive_path(g, path.colouring.flat).status, VerdictStatus::Clean);

        auto walk = treewidth_colouring(g, RepetitionMode::Walk);
        int d = g.max_degree();
        EXPECT_LE(walk.colouring.flat.colour_count(), 4 * l * (d * d + 1));
        EXPECT_FALSE(find_repetitive_walk(g, walk.colouring.flat));
    }
}

TEST(TreewidthColouring, Targets)
{
    EXPECT_DOUBLE_EQ(tree_partition_bag_target(2, 4), 2.5 * 3 * 13);
    EXPECT_DOUBLE_EQ(treewidth_degree_pi_target(2, 4), 4 * tree_partition_bag_target(2, 4));
}
