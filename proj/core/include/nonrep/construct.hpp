#pragma once

#include <nonrep/graph.hpp>

#include <cstdint>
#include <vector>

namespace nonrep
{
    /// Product of factor colourings flattened to dense ids.
    ///
    /// A tuple (f_1, ..., f_m) is first encoded mixed-radix with f_1 most significant and
    /// radix r_i = max colour of factor i, then the occurring codes are ranked in
    /// increasing order to give ids 1..k. Both steps are injective and deterministic.
    struct CompositeColouring
    {
        std::vector<Colouring> factors;
        std::vector<int> radices;
        Colouring flat;

        /// Mixed-radix code of vertex v (0-based).
        [[nodiscard]] auto code(Vertex v) const -> std::uint64_t;
    };

    [[nodiscard]] auto compose(std::vector<Colouring> factors) -> CompositeColouring;

    /// thue_word(n) as colours; 1..n for n <= 2.
    [[nodiscard]] auto path_colouring_3(int n) -> Colouring;

    /// kp_word(n) as colours: walk-nonrepetitive on P_n with or without loops.
    [[nodiscard]] auto plus_path_colouring_4(int n) -> Colouring;

    /// Colours v by the kp_word symbol at position level(v) - min level. Throws
    /// InvalidInput unless `levelling` is a levelling of g.
    [[nodiscard]] auto levelling_colouring(const Graph & g, const Levelling & levelling) -> Colouring;

    /// Pairs the levelling colouring with a colouring that is path-nonrepetitive on every
    /// level (given as one colouring of all of g). Throws InvalidInput unless the levelling
    /// is shadow-complete.
    [[nodiscard]] auto compose_shadow(const Graph & g, const Levelling & levelling, const Colouring & per_level)
        -> CompositeColouring;

    /// Triple (levelling colouring of g, per-level colouring, separator) restricted to the
    /// subgraph h. `separator` must give distinct colours to any two distinct vertices at
    /// the same level with a common neighbour in h; a proper colouring of h squared always
    /// qualifies. Throws InvalidInput when h is not a subgraph of g, the levelling is not
    /// shadow-complete, or the separator condition fails.
    [[nodiscard]] auto compose_shadow_walks(const Graph & h, const Graph & g, const Levelling & levelling,
        const Colouring & per_level, const Colouring & separator) -> CompositeColouring;

    /// Greedy proper colouring of the square of g, visiting vertices in `order`
    /// (ascending ids when empty). Uses at most max_degree^2 + 1 colours.
    [[nodiscard]] auto greedy_square_colouring(const Graph & g, const std::vector<Vertex> & order = {}) -> Colouring;

    /// Lowest-id leaf (vertex 0 for a single vertex) and its BFS levels.
    struct RootedTree
    {
        Vertex root;
        Levelling levelling;
        std::vector<Vertex> parent;
    };

    [[nodiscard]] auto root_at_leaf(const Graph & tree) -> RootedTree;

    /// Levelling colouring over leaf-rooted BFS levels; at most 4 colours, path-nonrepetitive.
    [[nodiscard]] auto tree_pi_colouring(const Graph & tree) -> Colouring;

    /// Pairs leaf-rooted level colours with each vertex's index among its parent's
    /// children; at most 4 max(1, Delta - 1) colours, walk-nonrepetitive.
    [[nodiscard]] auto tree_sigma_colouring(const Graph & tree) -> CompositeColouring;

    struct CycleSearch
    {
        Colouring colouring;
        std::uint64_t nodes = 0;
    };

    /// Number of colours of an optimal path-nonrepetitive colouring of C_n.
    [[nodiscard]] auto cycle_pi_target(int n) -> int;

    /// Backtracking search for a path-nonrepetitive colouring of C_n with exactly
    /// cycle_pi_target(n) colours. First vertex gets colour 1, new colours appear in
    /// increasing order.
    [[nodiscard]] auto cycle_pi_colouring(int n) -> CycleSearch;

    /// Walk-nonrepetitive 5-colouring of gen_cycle(n): a window of the 4-colouring of a
    /// path on 2n-4 vertices closed up by one extra vertex of colour 5 (vertex n-1).
    [[nodiscard]] auto cycle_sigma5_colouring(int n) -> Colouring;

    struct SubdivisionColouring
    {
        SubdivisionResult subdivision;
        Colouring colouring;
    };

    /// Levelling colouring (at most 4 colours) of the Separated subdivision of g. With the
    /// Interpolated rule, two adjacent original vertices v_i v_{i+1} each with a second
    /// lower neighbour give a path reading abab, so that rule is not used here.
    [[nodiscard]] auto subdivision_colouring(const Graph & g) -> SubdivisionColouring;

    [[nodiscard]] auto extremal_colouring(int c, int n) -> Colouring;

    /// Pairs level colours with the in-level index on gen_lex_product(m, p).
    [[nodiscard]] auto sigma_lex_colouring(int m, int p) -> CompositeColouring;
}
