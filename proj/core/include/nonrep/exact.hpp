#pragma once

#include <nonrep/graph.hpp>
#include <nonrep/verify.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace nonrep
{
    /// Thrown when an exact search runs out of node expansions before deciding.
    class BudgetExhausted : public std::runtime_error
    {
    public:
        BudgetExhausted(std::uint64_t nodes) :
            std::runtime_error("search budget of " + std::to_string(nodes) + " nodes exhausted"),
            _nodes(nodes)
        {
        }

        [[nodiscard]] auto nodes() const noexcept -> std::uint64_t { return _nodes; }

    private:
        std::uint64_t _nodes;
    };

    struct ExactResult
    {
        int value = 0;
        Colouring certificate;
        std::uint64_t nodes_expanded = 0;
    };

    /// Largest clique size, by plain Bron-Kerbosch with pivoting.
    [[nodiscard]] auto clique_number(const Graph & g) -> int;

    /// Smallest-last degeneracy order, reversed (densest core first). Ties by lowest id.
    [[nodiscard]] auto degeneracy_order(const Graph & g) -> std::vector<Vertex>;

    /// Minimum number of colours of a path-nonrepetitive colouring, by iterative deepening
    /// from the clique number. Each partial assignment is pruned as soon as an even simple
    /// path through the newly coloured vertex reads as a square. The certificate is
    /// re-checked by find_repetitive_path. `budget` counts colour assignments over all
    /// rounds (0 = unlimited); running out throws BudgetExhausted.
    [[nodiscard]] auto exact_pi(const Graph & g, std::uint64_t budget = 0) -> ExactResult;

    /// As exact_pi for walk-nonrepetitive colourings, from max(clique number, Delta + 1).
    /// Prunes on distance-2 conflicts, then on repetitive walks inside the coloured part.
    [[nodiscard]] auto exact_sigma(const Graph & g, std::uint64_t budget = 0) -> ExactResult;

    struct ExplorerSample
    {
        std::uint64_t index = 0;
        Graph graph;
        Colouring colouring;
        WalkWitness witness;
        int colours = 0;

        [[nodiscard]] auto ratio() const -> double { return double(witness.length()) / witness.order(); }
    };

    struct ExplorerReport
    {
        std::uint64_t seed = 0;
        std::uint64_t samples = 0;
        std::vector<ExplorerSample> witnesses;
        /// Largest length/order ratio seen, keyed by the number of colours used.
        std::map<int, double> max_ratio;
    };

    struct ExplorerOptions
    {
        int n_max = 6;
        int colour_max = 3;
        std::uint64_t samples = 100;
        std::uint64_t seed = 1;
        bool filter_conjecture = false;
    };

    /// Samples (graph, colouring) pairs and records minimum-length repetitive walks.
    ///
    /// Even-numbered samples draw G(n, p) with n uniform in [2, n_max] and p uniform in
    /// [0.2, 0.8]; odd-numbered samples draw a random recursive tree on n uniform in
    /// [2, n_max] vertices. Colours are uniform in 1..colour_max. With filter_conjecture,
    /// only colourings that are path-nonrepetitive and distance-2 are kept. Every recorded
    /// witness is re-validated and must satisfy length <= 2 order^2, else std::logic_error.
    [[nodiscard]] auto explore_smallwalks(const ExplorerOptions & options) -> ExplorerReport;
}
