#include <nonrep/exact.hpp>
#include <nonrep/generators.hpp>

#include <algorithm>
#include <functional>
#include <random>

using std::vector;

namespace nonrep
{
    auto clique_number(const Graph & g) -> int
    {
        int best = 0;
        std::function<void(vector<Vertex>, vector<Vertex>, vector<Vertex>)> expand =
            [&](vector<Vertex> r, vector<Vertex> p, vector<Vertex> x) {
                if (p.empty() && x.empty()) {
                    best = std::max(best, int(r.size()));
                    return;
                }
                if (int(r.size() + p.size()) <= best)
                    return;
                Vertex pivot = p.empty() ? x.front() : p.front();
                vector<Vertex> candidates;
                for (auto v : p)
                    if (! g.has_edge(pivot, v))
                        candidates.push_back(v);
                for (auto v : candidates) {
                    vector<Vertex> r2 = r, p2, x2;
                    r2.push_back(v);
                    for (auto w : p)
                        if (g.has_edge(v, w))
                            p2.push_back(w);
                    for (auto w : x)
                        if (g.has_edge(v, w))
                            x2.push_back(w);
                    expand(std::move(r2), std::move(p2), std::move(x2));
                    p.erase(std::find(p.begin(), p.end(), v));
                    x.push_back(v);
                }
            };
        vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            all[v] = v;
        expand({}, all, {});
        return best;
    }

    auto degeneracy_order(const Graph & g) -> vector<Vertex>
    {
        int n = g.order();
        vector<int> degree(n);
        vector<char> removed(n, 0);
        for (Vertex v = 0; v < n; ++v)
            degree[v] = int(g.neighbours(v).size());
        vector<Vertex> order;
        for (int step = 0; step < n; ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < n; ++v)
                if (! removed[v] && (pick == -1 || degree[v] < degree[pick]))
                    pick = v;
            removed[pick] = 1;
            order.push_back(pick);
            for (auto w : g.neighbours(pick))
                if (! removed[w])
                    --degree[w];
        }
        std::reverse(order.begin(), order.end());
        return order;
    }

    namespace
    {
        /// Canonical colouring enumeration in a fixed vertex order: the first vertex gets
        /// colour 1 and each vertex may open at most one new colour.
        class ColouringSearch
        {
        public:
            using Check = std::function<bool(const vector<int> & colours, const vector<char> & coloured, Vertex v)>;

            ColouringSearch(const Graph & g, std::uint64_t budget, Check check) :
                _g(g), _order(degeneracy_order(g)), _budget(budget), _check(std::move(check))
            {
            }

            auto run(int k) -> std::optional<Colouring>
            {
                _k = k;
                _colours.assign(_g.order(), 0);
                _coloured.assign(_g.order(), 0);
                if (recurse(0, 0))
                    return Colouring(_colours);
                return std::nullopt;
            }

            [[nodiscard]] auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            auto recurse(std::size_t depth, int used) -> bool
            {
                if (depth == _order.size())
                    return true;
                Vertex v = _order[depth];
                int limit = std::min(_k, used + 1);
                for (int colour = 1; colour <= limit; ++colour) {
                    if (_budget != 0 && _nodes >= _budget)
                        throw BudgetExhausted(_nodes);
                    ++_nodes;
                    _colours[v] = colour;
                    _coloured[v] = 1;
                    if (_check(_colours, _coloured, v) && recurse(depth + 1, std::max(used, colour)))
                        return true;
                    _coloured[v] = 0;
                    _colours[v] = 0;
                }
                return false;
            }

            const Graph & _g;
            vector<Vertex> _order;
            std::uint64_t _budget;
            Check _check;
            int _k = 0;
            std::uint64_t _nodes = 0;
            vector<int> _colours;
            vector<char> _coloured;
        };

        /// True when no even simple path inside the coloured part that passes through v
        /// reads as a square.
        auto no_square_path_through(const Graph & g, const vector<int> & colours, const vector<char> & coloured, Vertex v)
            -> bool
        {
            for (auto w : g.neighbours(v))
                if (coloured[w] && colours[w] == colours[v])
                    return false;

            vector<char> on_path(g.order(), 0);
            vector<Vertex> left{v}, right;
            on_path[v] = 1;

            auto is_square = [&]() {
                std::size_t len = left.size() + right.size();
                if (len % 2 != 0 || len < 4)
                    return false;
                std::size_t h = len / 2;
                auto at = [&](std::size_t i) {
                    return i < left.size() ? colours[left[left.size() - 1 - i]] : colours[right[i - left.size()]];
                };
                for (std::size_t i = 0; i < h; ++i)
                    if (at(i) != at(i + h))
                        return false;
                return true;
            };

            // Grow the right arm from v for a fixed left arm.
            std::function<bool(Vertex)> grow_right = [&](Vertex end) {
                if (is_square())
                    return false;
                for (auto w : g.neighbours(end))
                    if (coloured[w] && ! on_path[w]) {
                        on_path[w] = 1;
                        right.push_back(w);
                        bool ok = grow_right(w);
                        right.pop_back();
                        on_path[w] = 0;
                        if (! ok)
                            return false;
                    }
                return true;
            };

            // `left` holds the arm from v outward; the path reads left reversed, then right.
            std::function<bool(Vertex)> grow_left = [&](Vertex end) {
                if (! grow_right(v))
                    return false;
                for (auto w : g.neighbours(end))
                    if (coloured[w] && ! on_path[w]) {
                        on_path[w] = 1;
                        left.push_back(w);
                        bool ok = grow_left(w);
                        left.pop_back();
                        on_path[w] = 0;
                        if (! ok)
                            return false;
                    }
                return true;
            };

            return grow_left(v);
        }

        auto no_distance2_clash(const Graph & g, const vector<int> & colours, const vector<char> & coloured, Vertex v) -> bool
        {
            for (auto w : g.neighbours(v)) {
                if (coloured[w] && colours[w] == colours[v])
                    return false;
                for (auto x : g.neighbours(w))
                    if (x != v && coloured[x] && colours[x] == colours[v])
                        return false;
            }
            return true;
        }

        auto no_walk_in_coloured_part(const Graph & g, const vector<int> & colours, const vector<char> & coloured) -> bool
        {
            vector<Vertex> part;
            for (Vertex v = 0; v < g.order(); ++v)
                if (coloured[v])
                    part.push_back(v);
            auto [sub, ids] = g.induced(part);
            vector<int> sub_colours;
            for (auto v : ids)
                sub_colours.push_back(colours[v]);
            return ! find_repetitive_walk(sub, Colouring(std::move(sub_colours)));
        }

        auto solve(const Graph & g, std::uint64_t budget, int lower, ColouringSearch::Check check,
            const std::function<bool(const Colouring &)> & certify) -> ExactResult
        {
            ExactResult result;
            if (g.order() == 0)
                return result;
            ColouringSearch search(g, budget, std::move(check));
            for (int k = std::max(lower, 1);; ++k) {
                auto found = search.run(k);
                if (found) {
                    if (! certify(*found))
                        throw std::logic_error("exact search produced a certificate the oracle rejects");
                    result.value = k;
                    result.certificate = std::move(*found);
                    result.nodes_expanded = search.nodes();
                    return result;
                }
            }
        }
    }

    auto exact_pi(const Graph & g, std::uint64_t budget) -> ExactResult
    {
        auto check = [&](const vector<int> & colours, const vector<char> & coloured, Vertex v) {
            return no_square_path_through(g, colours, coloured, v);
        };
        return solve(g, budget, clique_number(g), check, [&](const Colouring & c) {
            return find_repetitive_path(g, c).status == VerdictStatus::Clean;
        });
    }

    auto exact_sigma(const Graph & g, std::uint64_t budget) -> ExactResult
    {
        int max_simple_degree = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            max_simple_degree = std::max(max_simple_degree, int(g.neighbours(v).size()));
        auto check = [&](const vector<int> & colours, const vector<char> & coloured, Vertex v) {
            return no_distance2_clash(g, colours, coloured, v) && no_walk_in_coloured_part(g, colours, coloured);
        };
        return solve(g, budget, std::max(clique_number(g), max_simple_degree + 1), check,
            [&](const Colouring & c) { return ! find_repetitive_walk(g, c); });
    }

    auto explore_smallwalks(const ExplorerOptions & options) -> ExplorerReport
    {
        if (options.n_max < 2 || options.colour_max < 1)
            throw InvalidInput("explorer needs n_max >= 2 and colour_max >= 1");

        ExplorerReport report;
        report.seed = options.seed;
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<int> pick_n(2, options.n_max);
        std::uniform_real_distribution<double> pick_p(0.2, 0.8);
        std::uniform_int_distribution<int> pick_colour(1, options.colour_max);

        for (std::uint64_t i = 0; i < options.samples; ++i) {
            int n = pick_n(rng);
            auto graph_seed = rng();
            Graph g = (i % 2 == 0) ? gen_random_graph(n, pick_p(rng), graph_seed) : gen_random_tree(n, graph_seed);
            vector<int> colours(n);
            for (auto & c : colours)
                c = pick_colour(rng);
            Colouring c(std::move(colours));
            ++report.samples;

            if (options.filter_conjecture
                && (! is_distance2(g, c) || find_repetitive_path(g, c).status != VerdictStatus::Clean))
                continue;
            auto witness = find_repetitive_walk(g, c, true);
            if (! witness)
                continue;
            if (! is_valid_witness(g, c, *witness))
                throw std::logic_error("explorer recorded an invalid witness");
            int order = witness->order();
            if (witness->length() > 2 * order * order)
                throw std::logic_error("minimum witness longer than twice its order squared");

            ExplorerSample sample{i, g, c, *witness, c.colour_count()};
            auto & best = report.max_ratio[sample.colours];
            best = std::max(best, sample.ratio());
            report.witnesses.push_back(std::move(sample));
        }
        return report;
    }
}
