#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonrep
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Raised for malformed inputs: bad parameters, broken invariants, size mismatches.
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Undirected simple graph on vertices 0..n-1, with an optional loop at any vertex.
    ///
    /// Edges are stored canonically (u < v, sorted, unique); loops live in a separate
    /// flag array and never appear in the edge list. Immutable after construction.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InvalidInput on out-of-range ids, u == v edges or duplicates.
        Graph(int n, std::vector<Edge> edges, std::vector<Vertex> loops = {});

        [[nodiscard]] auto order() const noexcept -> int { return _n; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _edges.size(); }
        [[nodiscard]] auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto loops() const -> std::vector<Vertex>;

        /// Sorted neighbour list, loops excluded.
        [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adj[v]; }

        /// Neighbours plus v itself when v carries a loop: every vertex a walk may step to from v.
        [[nodiscard]] auto steps(Vertex v) const -> std::span<const Vertex> { return _steps[v]; }

        [[nodiscard]] auto has_loop(Vertex v) const -> bool { return _loop[v]; }
        [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;

        /// True for an edge, or for u == v carrying a loop.
        [[nodiscard]] auto can_step(Vertex u, Vertex v) const -> bool;

        /// Loops count once.
        [[nodiscard]] auto degree(Vertex v) const -> int;
        [[nodiscard]] auto max_degree() const -> int;

        [[nodiscard]] auto is_connected() const -> bool;
        [[nodiscard]] auto is_tree() const -> bool;

        /// Component id per vertex, ids assigned in order of smallest member.
        [[nodiscard]] auto components() const -> std::vector<int>;

        /// BFS distances from source; -1 for unreachable.
        [[nodiscard]] auto distances_from(Vertex source) const -> std::vector<int>;

        /// Subgraph induced by `vertices` (sorted ascending on output); second is the old id of each new vertex.
        [[nodiscard]] auto induced(std::vector<Vertex> vertices) const -> std::pair<Graph, std::vector<Vertex>>;

        /// True when every edge and loop of this graph is also present in `other` (same vertex set).
        [[nodiscard]] auto is_subgraph_of(const Graph & other) const -> bool;

        auto operator==(const Graph & other) const -> bool = default;

    private:
        int _n = 0;
        std::vector<Edge> _edges;
        std::vector<char> _loop;
        std::vector<std::vector<Vertex>> _adj;
        std::vector<std::vector<Vertex>> _steps;
    };

    /// Total vertex colouring with positive integer colour ids.
    class Colouring
    {
    public:
        Colouring() = default;
        explicit Colouring(std::vector<int> colours);

        [[nodiscard]] auto operator[](Vertex v) const -> int { return _colours[v]; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _colours.size(); }
        [[nodiscard]] auto colours() const noexcept -> const std::vector<int> & { return _colours; }

        /// Number of distinct ids used.
        [[nodiscard]] auto colour_count() const -> int;
        [[nodiscard]] auto max_colour() const -> int;

        /// Throws InvalidInput unless this colours exactly g.order() vertices.
        void check_covers(const Graph & g) const;

        auto operator==(const Colouring & other) const -> bool = default;

    private:
        std::vector<int> _colours;
    };

    /// Integer level per vertex. Whether it is a levelling of a given graph is checked by
    /// verify::validate_levelling, not on construction.
    struct Levelling
    {
        std::vector<int> levels;

        [[nodiscard]] auto min_level() const -> int;
        [[nodiscard]] auto max_level() const -> int;

        auto operator==(const Levelling & other) const -> bool = default;
    };

    /// Origin of a vertex of a subdivision: either an original vertex, or the `step`-th
    /// division vertex (1-based, counted from the lower endpoint) on edge {low, high}.
    struct SubdivisionOrigin
    {
        std::optional<Vertex> original;
        Edge edge{-1, -1};
        int step = 0;

        [[nodiscard]] auto is_original() const -> bool { return original.has_value(); }
    };

    struct SubdivisionResult
    {
        Graph graph;
        Levelling levelling;
        std::vector<SubdivisionOrigin> origin;
    };
}
