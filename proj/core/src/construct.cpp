#include <nonrep/construct.hpp>
#include <nonrep/generators.hpp>
#include <nonrep/verify.hpp>
#include <nonrep/words.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::vector;

namespace nonrep
{
    auto CompositeColouring::code(Vertex v) const -> std::uint64_t
    {
        std::uint64_t result = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            result = result * std::uint64_t(radices[i]) + std::uint64_t(factors[i][v] - 1);
        return result;
    }

    auto compose(vector<Colouring> factors) -> CompositeColouring
    {
        if (factors.empty())
            throw InvalidInput("composite colouring needs at least one factor");
        for (auto & f : factors)
            if (f.size() != factors.front().size())
                throw InvalidInput("composite colouring factors differ in length");

        CompositeColouring result;
        result.factors = std::move(factors);
        for (auto & f : result.factors)
            result.radices.push_back(std::max(1, f.max_colour()));

        auto n = result.factors.front().size();
        std::map<std::uint64_t, int> rank;
        for (std::size_t v = 0; v < n; ++v)
            rank.emplace(result.code(Vertex(v)), 0);
        int next = 0;
        for (auto & [code, id] : rank)
            id = ++next;
        vector<int> flat(n);
        for (std::size_t v = 0; v < n; ++v)
            flat[v] = rank.at(result.code(Vertex(v)));
        result.flat = Colouring(std::move(flat));
        return result;
    }

    auto path_colouring_3(int n) -> Colouring
    {
        if (n < 1)
            throw InvalidInput("path colouring needs n >= 1");
        if (n <= 2) {
            vector<int> colours(n);
            for (int i = 0; i < n; ++i)
                colours[i] = i + 1;
            return Colouring(std::move(colours));
        }
        return Colouring(thue_word(std::size_t(n)).as_colours());
    }

    auto plus_path_colouring_4(int n) -> Colouring
    {
        if (n < 1)
            throw InvalidInput("path colouring needs n >= 1");
        return Colouring(kp_word(std::size_t(n)).as_colours());
    }

    auto levelling_colouring(const Graph & g, const Levelling & levelling) -> Colouring
    {
        if (! validate_levelling(g, levelling))
            throw InvalidInput("not a levelling of the graph");
        int low = levelling.min_level();
        auto word = kp_word(std::size_t(levelling.max_level() - low + 1));
        vector<int> colours(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            colours[v] = word[std::size_t(levelling.levels[v] - low)];
        return Colouring(std::move(colours));
    }

    auto compose_shadow(const Graph & g, const Levelling & levelling, const Colouring & per_level) -> CompositeColouring
    {
        per_level.check_covers(g);
        if (! validate_shadow_complete(g, levelling))
            throw InvalidInput("levelling is not shadow-complete");
        return compose({levelling_colouring(g, levelling), per_level});
    }

    auto compose_shadow_walks(const Graph & h, const Graph & g, const Levelling & levelling,
        const Colouring & per_level, const Colouring & separator) -> CompositeColouring
    {
        per_level.check_covers(g);
        separator.check_covers(h);
        if (! h.is_subgraph_of(g))
            throw InvalidInput("h is not a subgraph of g");
        if (! validate_shadow_complete(g, levelling))
            throw InvalidInput("levelling is not shadow-complete");

        auto & level = levelling.levels;
        for (Vertex u = 0; u < h.order(); ++u) {
            auto around = h.steps(u);
            for (std::size_t i = 0; i < around.size(); ++i)
                for (std::size_t j = i + 1; j < around.size(); ++j) {
                    auto v = around[i], w = around[j];
                    if (level[v] == level[w] && separator[v] == separator[w])
                        throw InvalidInput("separator colouring repeats a colour on vertices " + std::to_string(v)
                            + " and " + std::to_string(w) + " sharing neighbour " + std::to_string(u));
                }
        }
        return compose({levelling_colouring(g, levelling), per_level, separator});
    }

    auto greedy_square_colouring(const Graph & g, const vector<Vertex> & order) -> Colouring
    {
        int n = g.order();
        vector<Vertex> sequence = order;
        if (sequence.empty())
            for (Vertex v = 0; v < n; ++v)
                sequence.push_back(v);
        if (sequence.size() != std::size_t(n))
            throw InvalidInput("greedy order must list every vertex once");

        vector<int> colours(n, 0);
        vector<int> stamp(n * 2 + 2, -1);
        for (auto v : sequence) {
            if (colours[v] != 0)
                throw InvalidInput("greedy order repeats a vertex");
            for (auto w : g.neighbours(v)) {
                if (colours[w])
                    stamp[colours[w]] = v;
                for (auto x : g.neighbours(w))
                    if (x != v && colours[x])
                        stamp[colours[x]] = v;
            }
            int colour = 1;
            while (colour < int(stamp.size()) && stamp[colour] == v)
                ++colour;
            if (colour >= int(stamp.size()))
                stamp.resize(colour + 1, -1);
            colours[v] = colour;
        }
        return Colouring(std::move(colours));
    }

    auto root_at_leaf(const Graph & tree) -> RootedTree
    {
        if (! tree.is_tree())
            throw InvalidInput("input is not a tree");
        Vertex root = 0;
        for (Vertex v = 0; v < tree.order(); ++v)
            if (tree.degree(v) == 1) {
                root = v;
                break;
            }
        RootedTree result{root, {tree.distances_from(root)}, vector<Vertex>(tree.order(), -1)};
        for (Vertex v = 0; v < tree.order(); ++v)
            for (auto w : tree.neighbours(v))
                if (result.levelling.levels[w] + 1 == result.levelling.levels[v])
                    result.parent[v] = w;
        return result;
    }

    auto tree_pi_colouring(const Graph & tree) -> Colouring
    {
        auto rooted = root_at_leaf(tree);
        return compose_shadow(tree, rooted.levelling, Colouring(vector<int>(tree.order(), 1))).flat;
    }

    auto tree_sigma_colouring(const Graph & tree) -> CompositeColouring
    {
        if (tree.order() < 2)
            throw InvalidInput("tree_sigma_colouring needs at least two vertices");
        auto rooted = root_at_leaf(tree);
        vector<int> child_index(tree.order(), 1);
        vector<int> issued(tree.order(), 0);
        for (Vertex v = 0; v < tree.order(); ++v)
            if (rooted.parent[v] != -1)
                child_index[v] = ++issued[rooted.parent[v]];
        return compose_shadow_walks(tree, tree, rooted.levelling, Colouring(vector<int>(tree.order(), 1)),
            Colouring(std::move(child_index)));
    }

    auto cycle_pi_target(int n) -> int
    {
        switch (n) {
        case 5:
        case 7:
        case 9:
        case 10:
        case 14:
        case 17:
            return 4;
        default:
            return 3;
        }
    }

    namespace
    {
        auto has_square_suffix(const vector<int> & seq, std::size_t len) -> bool
        {
            for (std::size_t h = 1; 2 * h <= len; ++h) {
                std::size_t base = len - 2 * h;
                if (std::equal(seq.begin() + base, seq.begin() + base + h, seq.begin() + base + h))
                    return true;
            }
            return false;
        }

        // Every path of C_n is a cyclic factor with at most n entries.
        auto cyclic_square_free(const vector<int> & seq) -> bool
        {
            std::size_t n = seq.size();
            for (std::size_t start = 0; start < n; ++start)
                for (std::size_t h = 1; 2 * h <= n; ++h) {
                    bool square = true;
                    for (std::size_t i = 0; i < h && square; ++i)
                        square = seq[(start + i) % n] == seq[(start + h + i) % n];
                    if (square)
                        return false;
                }
            return true;
        }
    }

    auto cycle_pi_colouring(int n) -> CycleSearch
    {
        if (n < 3)
            throw InvalidInput("cycle needs n >= 3");
        int k = cycle_pi_target(n);
        CycleSearch result;
        vector<int> seq(n, 0);

        // Iterative backtracking over positions; seq[i] == 0 means untried.
        int i = 0;
        vector<int> used(n + 1, 0);
        while (i >= 0) {
            if (i == n) {
                if (used[n - 1] == k && cyclic_square_free(seq)) {
                    result.colouring = Colouring(seq);
                    return result;
                }
                --i;
                continue;
            }
            int limit = std::min(k, (i == 0 ? 0 : used[i - 1]) + 1);
            bool placed = false;
            while (seq[i] < limit) {
                ++seq[i];
                ++result.nodes;
                if (! has_square_suffix(seq, std::size_t(i) + 1)) {
                    used[i] = std::max(i == 0 ? 0 : used[i - 1], seq[i]);
                    placed = true;
                    break;
                }
            }
            if (placed)
                ++i;
            else {
                seq[i] = 0;
                --i;
            }
        }
        throw std::logic_error("no path-nonrepetitive " + std::to_string(k) + "-colouring of C_" + std::to_string(n)
            + " found");
    }

    auto cycle_sigma5_colouring(int n) -> Colouring
    {
        if (n < 3)
            throw InvalidInput("cycle needs n >= 3");
        auto word = kp_word(std::size_t(2 * n - 4));
        // Window v_i..v_{n+i-2} (1-based) needs distinct colours at its two ends.
        for (int i = 1; i <= n - 2; ++i)
            if (word[i - 1] != word[n + i - 3]) {
                vector<int> colours;
                for (int j = 0; j < n - 1; ++j)
                    colours.push_back(word[std::size_t(i - 1 + j)]);
                colours.push_back(5);
                return Colouring(std::move(colours));
            }
        throw std::logic_error("no window with distinct end colours for C_" + std::to_string(n));
    }

    auto subdivision_colouring(const Graph & g) -> SubdivisionColouring
    {
        auto subdivision = build_subdivision(g, SubdivisionRule::Separated);
        auto colouring = levelling_colouring(subdivision.graph, subdivision.levelling);
        return {std::move(subdivision), std::move(colouring)};
    }

    auto extremal_colouring(int c, int n) -> Colouring
    {
        return gen_extremal(c, n).colouring;
    }

    auto sigma_lex_colouring(int m, int p) -> CompositeColouring
    {
        auto product = gen_lex_product(m, p);
        vector<int> index(product.graph.order());
        for (Vertex v = 0; v < product.graph.order(); ++v)
            index[v] = v % p + 1;
        return compose({levelling_colouring(product.graph, product.levelling), Colouring(std::move(index))});
    }
}
