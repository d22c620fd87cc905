#include <nonrep/generators.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using std::vector;

namespace nonrep
{
    namespace
    {
        void require(bool condition, const char * message)
        {
            if (! condition)
                throw InvalidInput(message);
        }

        auto path_edges(int n) -> vector<Edge>
        {
            vector<Edge> edges;
            for (Vertex v = 0; v + 1 < n; ++v)
                edges.emplace_back(v, v + 1);
            return edges;
        }
    }

    auto gen_path(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        return Graph(n, path_edges(n));
    }

    auto gen_cycle(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        auto edges = path_edges(n);
        edges.emplace_back(0, n - 1);
        return Graph(n, std::move(edges));
    }

    auto gen_complete(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    auto gen_star(int n) -> Graph
    {
        require(n >= 1, "star needs n >= 1");
        vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.emplace_back(0, v);
        return Graph(n, std::move(edges));
    }

    auto gen_looped_path(int n) -> Graph
    {
        require(n >= 1, "looped path needs n >= 1");
        vector<Vertex> loops(n);
        std::iota(loops.begin(), loops.end(), 0);
        return Graph(n, path_edges(n), std::move(loops));
    }

    auto gen_petersen() -> Graph
    {
        vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, std::move(edges));
    }

    auto gen_random_tree(int n, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "tree needs n >= 1");
        std::mt19937_64 rng(seed);
        vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
        return Graph(n, std::move(edges));
    }

    auto gen_random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "random graph needs n >= 1");
        require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    auto gen_random_partial_ktree(int n, int k, int deg_cap, std::uint64_t seed) -> PartialKTree
    {
        require(n >= 1, "partial k-tree needs n >= 1");
        require(k >= 1, "partial k-tree needs k >= 1");
        require(deg_cap >= 1 && (n <= 2 || deg_cap >= 2), "degree cap infeasible (need >= 2 beyond two vertices)");

        std::mt19937_64 rng(seed);
        vector<int> degree(n, 0);
        vector<Edge> edges;
        auto try_edge = [&](Vertex u, Vertex v) {
            if (degree[u] >= deg_cap || degree[v] >= deg_cap)
                return false;
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
            return true;
        };

        TreeDecomposition td;
        int base = std::min(n, k + 1);
        td.bags.emplace_back(base);
        std::iota(td.bags[0].begin(), td.bags[0].end(), 0);
        for (Vertex u = 0; u < base; ++u)
            for (Vertex v = u + 1; v < base; ++v)
                try_edge(u, v);

        struct Clique
        {
            vector<Vertex> members;
            int bag;
        };
        vector<Clique> cliques;
        if (n > base)
            for (Vertex skip = 0; skip < base; ++skip) {
                Clique c{{}, 0};
                for (Vertex u = 0; u < base; ++u)
                    if (u != skip)
                        c.members.push_back(u);
                cliques.push_back(std::move(c));
            }

        for (Vertex v = base; v < n; ++v) {
            auto attach = [&](std::size_t index) {
                bool any = false;
                for (auto u : cliques[index].members)
                    any = try_edge(u, v) || any;
                return any;
            };

            auto chosen = std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng);
            if (! attach(chosen)) {
                vector<std::size_t> order(cliques.size());
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::shuffle(order.begin(), order.end(), rng);
                for (auto index : order)
                    if (index != chosen && attach(index)) {
                        chosen = index;
                        break;
                    }
            }

            auto clique = cliques[chosen];
            int bag = int(td.bags.size());
            auto contents = clique.members;
            contents.push_back(v);
            td.bags.push_back(std::move(contents));
            td.host_edges.emplace_back(clique.bag, bag);
            for (auto u : clique.members) {
                Clique next{{}, bag};
                for (auto w : clique.members)
                    if (w != u)
                        next.members.push_back(w);
                next.members.push_back(v);
                cliques.push_back(std::move(next));
            }
        }

        return {Graph(n, std::move(edges)), std::move(td)};
    }

    auto build_subdivision(const Graph & g, SubdivisionRule rule) -> SubdivisionResult
    {
        require(g.order() >= 1, "subdivision needs a non-empty graph");
        require(g.loops().empty(), "subdivision input must be loopless");
        require(g.is_connected(), "subdivision input must be connected");

        int scale = rule == SubdivisionRule::Separated ? 2 : 1;
        int n = g.order();
        int total = n;
        for (auto [i, j] : g.edges())
            total += scale * (j - i) - 1;

        SubdivisionResult result;
        result.levelling.levels.resize(total);
        result.origin.resize(total);
        for (Vertex v = 0; v < n; ++v) {
            result.levelling.levels[v] = scale * v;
            result.origin[v].original = v;
        }

        vector<Edge> edges;
        Vertex next = n;
        for (auto [i, j] : g.edges()) {
            Vertex previous = i;
            for (int step = 1; step < scale * (j - i); ++step) {
                result.levelling.levels[next] = scale * i + step;
                result.origin[next].edge = {i, j};
                result.origin[next].step = step;
                edges.emplace_back(previous, next);
                previous = next++;
            }
            edges.emplace_back(previous, j);
        }
        result.graph = Graph(total, std::move(edges));
        return result;
    }

    auto gen_extremal(int c, int n) -> ColouredGraph
    {
        require(c >= 2, "extremal graph needs c >= 2");
        require(n >= c - 1, "extremal graph needs n >= c - 1");
        vector<Edge> edges;
        vector<int> colours(n, c);
        for (Vertex u = 0; u < c - 1; ++u) {
            colours[u] = u + 1;
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        }
        return {Graph(n, std::move(edges)), Colouring(std::move(colours))};
    }

    auto gen_lex_product(int m, int p) -> LeveledGraph
    {
        require(m >= 1 && p >= 1, "lexicographic product needs m, p >= 1");
        vector<Edge> edges;
        Levelling levelling;
        levelling.levels.resize(std::size_t(m) * p);
        for (int level = 0; level < m; ++level)
            for (int j = 0; j < p; ++j) {
                Vertex v = level * p + j;
                levelling.levels[v] = level;
                for (int j2 = j + 1; j2 < p; ++j2)
                    edges.emplace_back(v, level * p + j2);
                if (level + 1 < m)
                    for (int j2 = 0; j2 < p; ++j2)
                        edges.emplace_back(v, (level + 1) * p + j2);
            }
        return {Graph(m * p, std::move(edges)), std::move(levelling)};
    }
}
