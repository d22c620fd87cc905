#pragma once

#include <nonrep/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace nonrep
{
    struct TreePartition;
    struct TreeDecomposition;

    /// A repetitively coloured non-boring walk v_1..v_{2t}.
    struct WalkWitness
    {
        std::vector<Vertex> vertices;
        int t = 0;

        /// Number of distinct vertices.
        [[nodiscard]] auto order() const -> int;
        [[nodiscard]] auto length() const -> int { return int(vertices.size()); }

        auto operator==(const WalkWitness & other) const -> bool = default;
    };

    /// A repetitively coloured path: a walk witness with pairwise distinct vertices.
    struct PathWitness
    {
        std::vector<Vertex> vertices;
        int t = 0;

        auto operator==(const PathWitness & other) const -> bool = default;
    };

    /// Re-checks every witness invariant against g and c: length 2t, steps along edges
    /// (or loops), halves colour-equal, and non-boring.
    [[nodiscard]] auto is_valid_witness(const Graph & g, const Colouring & c, const WalkWitness & w) -> bool;

    /// As above plus pairwise distinctness; loops never occur on a path.
    [[nodiscard]] auto is_valid_witness(const Graph & g, const Colouring & c, const PathWitness & w) -> bool;

    enum class VerdictStatus
    {
        Clean,
        Witness,
        Unknown
    };

    struct Verdict
    {
        VerdictStatus status = VerdictStatus::Clean;
        std::optional<PathWitness> witness;
        std::uint64_t budget_spent = 0;
    };

    [[nodiscard]] auto is_proper(const Graph & g, const Colouring & c) -> bool;
    [[nodiscard]] auto is_distance2(const Graph & g, const Colouring & c) -> bool;
    [[nodiscard]] auto is_star_colouring(const Graph & g, const Colouring & c) -> bool;

    /// Exhaustive DFS over simple paths from every start vertex (ascending, neighbours
    /// ascending), checking each new endpoint for a square suffix of the colour sequence.
    /// `budget` caps node expansions; 0 means unlimited. Exceeding it yields Unknown.
    [[nodiscard]] auto find_repetitive_path(const Graph & g, const Colouring & c, std::uint64_t budget = 0) -> Verdict;

    /// Checks the unique path between every ordered pair of vertices of a tree.
    /// Throws InvalidInput unless g is a tree.
    [[nodiscard]] auto find_repetitive_path_in_tree(const Graph & g, const Colouring & c) -> std::optional<PathWitness>;

    /// Exact search for a non-boring repetitively coloured walk of any length.
    ///
    /// Works on the synchronised product: states are pairs (v_i, v_{t+i}) of equally
    /// coloured vertices, and both coordinates step together. A witness is a product walk
    /// from (v_1, v_{t+1}) to (v_t, v_{2t}) that touches an off-diagonal state, closed by a
    /// step from v_t to v_{t+1}. Existence reduces to a connectivity question on the
    /// product graph, which is undirected.
    ///
    /// With `minimize`, the witness has the minimum possible length 2t, ties broken by the
    /// lexicographically smallest vertex sequence (so the lowest start vertex first).
    [[nodiscard]] auto find_repetitive_walk(const Graph & g, const Colouring & c, bool minimize = false)
        -> std::optional<WalkWitness>;

    [[nodiscard]] auto validate_levelling(const Graph & g, const Levelling & levelling) -> bool;

    /// For every k, the k-shadow of each component of G[level > k] must induce a clique.
    /// False also when the levelling itself is invalid.
    [[nodiscard]] auto validate_shadow_complete(const Graph & g, const Levelling & levelling) -> bool;

    /// Bags partition V, host edges form a forest over bag indices, and every edge of g
    /// joins vertices of one bag or of two host-adjacent bags. Throws InvalidInput on bag
    /// indices or vertex ids out of range.
    [[nodiscard]] auto validate_tree_partition(const Graph & g, const TreePartition & tp) -> bool;

    /// Bags cover every vertex and edge, host edges form a tree (a forest is accepted),
    /// and each vertex's bags induce a connected host subtree.
    [[nodiscard]] auto validate_tree_decomposition(const Graph & g, const TreeDecomposition & td) -> bool;
}
