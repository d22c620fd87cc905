#pragma once

#include <nonrep/construct.hpp>
#include <nonrep/graph.hpp>

#include <vector>

namespace nonrep
{
    /// Bags over a host tree (or forest) whose nodes are bag indices.
    struct TreeDecomposition
    {
        std::vector<std::vector<Vertex>> bags;
        std::vector<Edge> host_edges;

        /// Largest bag size minus one; -1 with no bags.
        [[nodiscard]] auto width() const -> int;
    };

    /// Partition of V into bags whose quotient graph is a forest. `depths` is the
    /// distance of each bag from the root of its host component.
    struct TreePartition
    {
        std::vector<std::vector<Vertex>> bags;
        std::vector<Edge> host_edges;
        std::vector<int> depths;

        [[nodiscard]] auto max_bag_size() const -> int;
    };

    /// Min-fill elimination ordering, ties broken by lowest vertex id. Host forests of
    /// disconnected inputs are joined into a single tree.
    [[nodiscard]] auto tree_decomposition(const Graph & g) -> TreeDecomposition;

    /// BFS-layer tree-partition: the bags at depth i are the layer-i parts of the
    /// components of the subgraph induced by layers >= i. Each component of g is rooted
    /// at its lowest-id vertex; bags are numbered by (component, depth, smallest member).
    [[nodiscard]] auto tree_partition(const Graph & g) -> TreePartition;

    struct ShadowLevelling
    {
        Graph completed;
        Levelling levelling;
        /// 1-based index of each vertex within its bag (bag members in ascending order).
        Colouring in_bag_index;
    };

    /// Completes every bag to a clique and levels each vertex by the host depth of its bag.
    /// Host components are rooted at the bag holding their lowest vertex. Throws
    /// InvalidInput when tp is not a valid tree-partition of g.
    [[nodiscard]] auto shadow_levelling(const Graph & g, const TreePartition & tp) -> ShadowLevelling;

    enum class RepetitionMode
    {
        Path,
        Walk
    };

    struct TreewidthColouring
    {
        TreePartition partition;
        ShadowLevelling shadow;
        CompositeColouring colouring;
        int max_bag = 0;
    };

    /// tree_partition -> shadow_levelling -> compose_shadow (path mode) or
    /// compose_shadow_walks with a greedy square colouring (walk mode).
    [[nodiscard]] auto treewidth_colouring(const Graph & g, RepetitionMode mode) -> TreewidthColouring;

    /// Known upper bound on the bag size of an optimal tree-partition, for treewidth k and max degree d.
    [[nodiscard]] auto tree_partition_bag_target(int k, int d) -> double;

    /// Colour bound on pi for treewidth k and max degree d obtained from that bag bound.
    [[nodiscard]] auto treewidth_degree_pi_target(int k, int d) -> double;
}
