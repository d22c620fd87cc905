#pragma once

#include <nonrep/decompose.hpp>
#include <nonrep/graph.hpp>

#include <cstdint>

namespace nonrep
{
    // Deterministic families. Paths and cycles are numbered in walk order.
    [[nodiscard]] auto gen_path(int n) -> Graph;
    [[nodiscard]] auto gen_cycle(int n) -> Graph;
    [[nodiscard]] auto gen_complete(int n) -> Graph;

    /// n vertices in total: centre 0 joined to leaves 1..n-1.
    [[nodiscard]] auto gen_star(int n) -> Graph;

    /// P_n with a loop at every vertex.
    [[nodiscard]] auto gen_looped_path(int n) -> Graph;

    [[nodiscard]] auto gen_petersen() -> Graph;

    // Seeded families. Identical (params, seed) always give identical graphs within a build.

    /// Random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
    [[nodiscard]] auto gen_random_tree(int n, std::uint64_t seed) -> Graph;

    /// Erdos-Renyi G(n, p).
    [[nodiscard]] auto gen_random_graph(int n, double p, std::uint64_t seed) -> Graph;

    struct PartialKTree
    {
        Graph graph;
        TreeDecomposition decomposition;
    };

    /// Grows a k-tree (each new vertex joins a uniformly chosen recorded k-clique) and
    /// skips any edge that would push an endpoint above deg_cap. When every edge to the
    /// chosen clique is blocked, other cliques are tried in random order before the
    /// vertex is left isolated. The recorded decomposition has width <= k.
    [[nodiscard]] auto gen_random_partial_ktree(int n, int k, int deg_cap, std::uint64_t seed) -> PartialKTree;

    enum class SubdivisionRule
    {
        /// Edge v_i v_j (i < j) gets j-i-1 division vertices; v_i sits at level i.
        Interpolated,
        /// Edge v_i v_j gets 2(j-i)-1 division vertices, so no two original vertices stay
        /// adjacent; v_i sits at level 2i.
        Separated
    };

    /// Original vertices keep their ids; division vertices follow in edge order, with
    /// levels rising by one along each subdivided edge. Rejects disconnected or looped inputs.
    [[nodiscard]] auto build_subdivision(const Graph & g, SubdivisionRule rule = SubdivisionRule::Interpolated)
        -> SubdivisionResult;

    struct ColouredGraph
    {
        Graph graph;
        Colouring colouring;
    };

    /// K_{c-1} (vertices 0..c-2, colours 1..c-1) fully joined to an independent set of
    /// n-c+1 vertices coloured c.
    [[nodiscard]] auto gen_extremal(int c, int n) -> ColouredGraph;

    struct LeveledGraph
    {
        Graph graph;
        Levelling levelling;
    };

    /// Lexicographic product of P_m and K_p; vertex level * p + j is the j-th vertex of its level.
    [[nodiscard]] auto gen_lex_product(int m, int p) -> LeveledGraph;
}
