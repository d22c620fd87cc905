#include <nonrep/decompose.hpp>
#include <nonrep/verify.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

using std::vector;

namespace nonrep
{
    namespace
    {
        auto halves_match(const Colouring & c, const vector<Vertex> & vs, int t) -> bool
        {
            for (int i = 0; i < t; ++i)
                if (c[vs[i]] != c[vs[t + i]])
                    return false;
            return true;
        }

        // True when the last 2h entries of seq form a square for some h >= 1; h is reported.
        auto square_suffix(const vector<int> & seq, int & half) -> bool
        {
            int len = int(seq.size());
            for (int h = 1; 2 * h <= len; ++h) {
                int base = len - 2 * h;
                bool square = true;
                for (int i = 0; i < h; ++i)
                    if (seq[base + i] != seq[base + h + i]) {
                        square = false;
                        break;
                    }
                if (square) {
                    half = h;
                    return true;
                }
            }
            return false;
        }

        struct DisjointSets
        {
            vector<int> parent;

            explicit DisjointSets(int n) :
                parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                parent[a] = b;
                return true;
            }
        };

        auto is_forest(int nodes, const vector<Edge> & edges) -> bool
        {
            DisjointSets sets(nodes);
            for (auto [a, b] : edges) {
                if (a < 0 || b < 0 || a >= nodes || b >= nodes)
                    throw InvalidInput("host edge {" + std::to_string(a) + "," + std::to_string(b) + "} refers to a missing bag");
                if (a == b || ! sets.unite(a, b))
                    return false;
            }
            return true;
        }

        /// Synchronised product of a coloured graph with itself, restricted to colour-equal pairs.
        class PairSpace
        {
        public:
            PairSpace(const Graph & g, const Colouring & c) :
                _g(g), _c(c), _n(g.order()), _index(std::size_t(_n) * _n, -1)
            {
                for (Vertex a = 0; a < _n; ++a)
                    for (Vertex b = 0; b < _n; ++b)
                        if (c[a] == c[b]) {
                            _index[std::size_t(a) * _n + b] = int(_pairs.size());
                            _pairs.emplace_back(a, b);
                        }
            }

            [[nodiscard]] auto size() const -> int { return int(_pairs.size()); }
            [[nodiscard]] auto pair(int s) const -> Edge { return _pairs[s]; }
            [[nodiscard]] auto index(Vertex a, Vertex b) const -> int { return _index[std::size_t(a) * _n + b]; }
            [[nodiscard]] auto off_diagonal(int s) const -> bool { return _pairs[s].first != _pairs[s].second; }

            template <typename F>
            void for_each_neighbour(int s, F && f) const
            {
                auto [a, b] = _pairs[s];
                for (auto a2 : _g.steps(a))
                    for (auto b2 : _g.steps(b))
                        if (_c[a2] == _c[b2])
                            f(index(a2, b2));
            }

        private:
            const Graph & _g;
            const Colouring & _c;
            int _n;
            vector<int> _index;
            vector<Edge> _pairs;
        };

        // Flagged product state: 2 * pair + flag, where flag records an off-diagonal visit.
        auto flagged(int s, bool f) -> int { return 2 * s + (f ? 1 : 0); }

        auto assemble(const vector<Vertex> & firsts, const vector<Vertex> & seconds) -> WalkWitness
        {
            WalkWitness w;
            w.t = int(firsts.size());
            w.vertices = firsts;
            w.vertices.insert(w.vertices.end(), seconds.begin(), seconds.end());
            return w;
        }

        /// Shortest flagged product walk from `start` to an accepting end for y = second(start).
        auto witness_from(const Graph & g, const PairSpace & space, int start) -> std::optional<WalkWitness>
        {
            Vertex y = space.pair(start).second;
            vector<int> parent(2 * std::size_t(space.size()), -2);
            std::queue<int> queue;
            int root = flagged(start, space.off_diagonal(start));
            parent[root] = -1;
            queue.push(root);
            while (! queue.empty()) {
                int node = queue.front();
                queue.pop();
                int s = node / 2;
                bool f = node % 2;
                if (f && g.can_step(space.pair(s).first, y)) {
                    vector<Vertex> firsts, seconds;
                    for (int at = node; at != -1; at = parent[at]) {
                        firsts.push_back(space.pair(at / 2).first);
                        seconds.push_back(space.pair(at / 2).second);
                    }
                    std::reverse(firsts.begin(), firsts.end());
                    std::reverse(seconds.begin(), seconds.end());
                    return assemble(firsts, seconds);
                }
                space.for_each_neighbour(s, [&](int s2) {
                    int next = flagged(s2, f || space.off_diagonal(s2));
                    if (parent[next] == -2) {
                        parent[next] = node;
                        queue.push(next);
                    }
                });
            }
            return std::nullopt;
        }

        constexpr int unreachable = std::numeric_limits<int>::max();

        /// Distance from every flagged state to an accepting end for second-coordinate y.
        auto distances_to_accept(const Graph & g, const PairSpace & space, Vertex y) -> vector<int>
        {
            vector<int> dist(2 * std::size_t(space.size()), unreachable);
            std::queue<int> queue;
            for (int s = 0; s < space.size(); ++s)
                if (g.can_step(space.pair(s).first, y)) {
                    dist[flagged(s, true)] = 0;
                    queue.push(flagged(s, true));
                }
            while (! queue.empty()) {
                int node = queue.front();
                queue.pop();
                int s2 = node / 2;
                bool f2 = node % 2;
                space.for_each_neighbour(s2, [&](int s) {
                    // Predecessor flags f with f || off(s2) == f2 and f >= off(s).
                    for (int f = 0; f < 2; ++f) {
                        if ((f || space.off_diagonal(s2)) != f2)
                            continue;
                        if (! f && space.off_diagonal(s))
                            continue;
                        int prev = flagged(s, f);
                        if (dist[prev] == unreachable) {
                            dist[prev] = dist[node] + 1;
                            queue.push(prev);
                        }
                    }
                });
            }
            return dist;
        }

        /// Lexicographically smallest witness of exactly `steps` + 1 pairs with second coordinate y first.
        auto smallest_witness_for(const Graph & g, const Colouring & c, const PairSpace & space, Vertex y,
            const vector<int> & dist, int steps) -> WalkWitness
        {
            int n = g.order();
            vector<Vertex> firsts;
            vector<std::array<char, 2>> frontier(n, {0, 0});

            for (Vertex x = 0; x < n; ++x) {
                int s = space.index(x, y);
                if (s != -1 && dist[flagged(s, space.off_diagonal(s))] <= steps) {
                    firsts.push_back(x);
                    frontier[y][x != y] = 1;
                    break;
                }
            }

            for (int k = 1; k <= steps; ++k) {
                bool chosen = false;
                for (auto a2 : g.steps(firsts.back())) {
                    vector<std::array<char, 2>> next(n, {0, 0});
                    bool any = false;
                    for (Vertex b = 0; b < n; ++b)
                        for (int f = 0; f < 2; ++f) {
                            if (! frontier[b][f])
                                continue;
                            for (auto b2 : g.steps(b)) {
                                if (c[b2] != c[a2])
                                    continue;
                                bool f2 = f || a2 != b2;
                                if (dist[flagged(space.index(a2, b2), f2)] <= steps - k) {
                                    next[b2][f2] = 1;
                                    any = true;
                                }
                            }
                        }
                    if (any) {
                        firsts.push_back(a2);
                        frontier = std::move(next);
                        chosen = true;
                        break;
                    }
                }
                if (! chosen)
                    throw std::logic_error("walk minimiser lost feasibility");
            }

            // Second half: lexicographically smallest b-walk shadowing the fixed first half.
            int t = int(firsts.size());
            vector<vector<std::array<char, 2>>> ok(t, vector<std::array<char, 2>>(n, {0, 0}));
            for (Vertex b = 0; b < n; ++b)
                if (c[b] == c[firsts[t - 1]])
                    ok[t - 1][b][1] = 1;
            for (int k = t - 2; k >= 0; --k)
                for (Vertex b = 0; b < n; ++b) {
                    if (c[b] != c[firsts[k]])
                        continue;
                    for (int f = 0; f < 2; ++f)
                        for (auto b2 : g.steps(b))
                            if (c[b2] == c[firsts[k + 1]] && ok[k + 1][b2][f || firsts[k + 1] != b2]) {
                                ok[k][b][f] = 1;
                                break;
                            }
                }

            vector<Vertex> seconds{y};
            bool f = firsts[0] != y;
            for (int k = 1; k < t; ++k) {
                bool chosen = false;
                for (auto b2 : g.steps(seconds.back())) {
                    if (c[b2] != c[firsts[k]])
                        continue;
                    bool f2 = f || firsts[k] != b2;
                    if (ok[k][b2][f2]) {
                        seconds.push_back(b2);
                        f = f2;
                        chosen = true;
                        break;
                    }
                }
                if (! chosen)
                    throw std::logic_error("walk minimiser lost feasibility");
            }
            return assemble(firsts, seconds);
        }
    }

    auto WalkWitness::order() const -> int
    {
        return int(std::set<Vertex>(vertices.begin(), vertices.end()).size());
    }

    auto is_valid_witness(const Graph & g, const Colouring & c, const WalkWitness & w) -> bool
    {
        if (w.t < 1 || w.vertices.size() != 2 * std::size_t(w.t))
            return false;
        for (auto v : w.vertices)
            if (v < 0 || v >= g.order())
                return false;
        for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
            if (! g.can_step(w.vertices[i], w.vertices[i + 1]))
                return false;
        if (! halves_match(c, w.vertices, w.t))
            return false;
        for (int i = 0; i < w.t; ++i)
            if (w.vertices[i] != w.vertices[w.t + i])
                return true;
        return false;
    }

    auto is_valid_witness(const Graph & g, const Colouring & c, const PathWitness & w) -> bool
    {
        std::set<Vertex> distinct(w.vertices.begin(), w.vertices.end());
        if (distinct.size() != w.vertices.size())
            return false;
        return is_valid_witness(g, c, WalkWitness{w.vertices, w.t});
    }

    auto is_proper(const Graph & g, const Colouring & c) -> bool
    {
        c.check_covers(g);
        return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) { return c[e.first] == c[e.second]; });
    }

    auto is_distance2(const Graph & g, const Colouring & c) -> bool
    {
        c.check_covers(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            vector<int> seen{c[v]};
            for (auto w : g.neighbours(v))
                seen.push_back(c[w]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                return false;
        }
        return true;
    }

    auto is_star_colouring(const Graph & g, const Colouring & c) -> bool
    {
        if (! is_proper(g, c))
            return false;
        // A bichromatic P4 a-b-x-d has col(a) = col(x) and col(d) = col(b); properness
        // already forces a != d.
        for (Vertex b = 0; b < g.order(); ++b)
            for (auto x : g.neighbours(b)) {
                bool left = false, right = false;
                for (auto a : g.neighbours(b))
                    if (a != x && c[a] == c[x])
                        left = true;
                for (auto d : g.neighbours(x))
                    if (d != b && c[d] == c[b])
                        right = true;
                if (left && right)
                    return false;
            }
        return true;
    }

    auto find_repetitive_path(const Graph & g, const Colouring & c, std::uint64_t budget) -> Verdict
    {
        c.check_covers(g);
        Verdict verdict;
        int n = g.order();
        vector<char> on_path(n, 0);
        vector<Vertex> path;
        vector<int> colours;
        bool stop = false;

        std::function<void(Vertex)> extend = [&](Vertex v) {
            if (budget != 0 && verdict.budget_spent >= budget) {
                verdict.status = VerdictStatus::Unknown;
                stop = true;
                return;
            }
            ++verdict.budget_spent;
            path.push_back(v);
            colours.push_back(c[v]);
            on_path[v] = 1;

            int half = 0;
            if (square_suffix(colours, half)) {
                verdict.status = VerdictStatus::Witness;
                verdict.witness = PathWitness{vector<Vertex>(path.end() - 2 * half, path.end()), half};
                stop = true;
            }
            else
                for (auto w : g.neighbours(v)) {
                    if (! on_path[w])
                        extend(w);
                    if (stop)
                        break;
                }

            on_path[v] = 0;
            path.pop_back();
            colours.pop_back();
        };

        for (Vertex s = 0; s < n && ! stop; ++s)
            extend(s);
        return verdict;
    }

    auto find_repetitive_path_in_tree(const Graph & g, const Colouring & c) -> std::optional<PathWitness>
    {
        if (! g.is_tree())
            throw InvalidInput("find_repetitive_path_in_tree needs a tree");
        c.check_covers(g);
        int n = g.order();
        for (Vertex root = 0; root < n; ++root) {
            vector<Vertex> parent(n, -1);
            vector<Vertex> order{root};
            parent[root] = root;
            for (std::size_t i = 0; i < order.size(); ++i)
                for (auto w : g.neighbours(order[i]))
                    if (parent[w] == -1) {
                        parent[w] = order[i];
                        order.push_back(w);
                    }
            for (auto v : order) {
                vector<Vertex> path;
                for (Vertex at = v; at != root; at = parent[at])
                    path.push_back(at);
                path.push_back(root);
                if (path.size() % 2 != 0)
                    continue;
                std::reverse(path.begin(), path.end());
                int t = int(path.size() / 2);
                if (halves_match(c, path, t))
                    return PathWitness{path, t};
            }
        }
        return std::nullopt;
    }

    auto find_repetitive_walk(const Graph & g, const Colouring & c, bool minimize) -> std::optional<WalkWitness>
    {
        c.check_covers(g);
        PairSpace space(g, c);
        int count = space.size();

        vector<int> component(count, -1);
        vector<vector<int>> members;
        for (int s = 0; s < count; ++s) {
            if (component[s] != -1)
                continue;
            int id = int(members.size());
            members.emplace_back();
            component[s] = id;
            vector<int> stack{s};
            while (! stack.empty()) {
                int at = stack.back();
                stack.pop_back();
                members[id].push_back(at);
                space.for_each_neighbour(at, [&](int next) {
                    if (component[next] == -1) {
                        component[next] = id;
                        stack.push_back(next);
                    }
                });
            }
        }

        // A component supports a witness when it holds an off-diagonal pair and some first
        // coordinate z steps to some second coordinate y.
        vector<int> second_mark(g.order(), -1);
        vector<char> candidate_y(g.order(), 0);
        std::optional<int> first_start;
        for (int id = 0; id < int(members.size()); ++id) {
            auto & comp = members[id];
            if (std::none_of(comp.begin(), comp.end(), [&](int s) { return space.off_diagonal(s); }))
                continue;
            std::sort(comp.begin(), comp.end());
            for (int s : comp)
                second_mark[space.pair(s).second] = id;
            for (int s : comp)
                for (auto y : g.steps(space.pair(s).first))
                    if (second_mark[y] == id && ! candidate_y[y]) {
                        candidate_y[y] = 1;
                        if (! first_start)
                            for (int s2 : comp)
                                if (space.pair(s2).second == y) {
                                    first_start = s2;
                                    break;
                                }
                    }
        }

        if (! first_start)
            return std::nullopt;
        if (! minimize)
            return witness_from(g, space, *first_start);

        int best_steps = unreachable;
        vector<std::pair<Vertex, vector<int>>> per_y;
        for (Vertex y = 0; y < g.order(); ++y) {
            if (! candidate_y[y])
                continue;
            auto dist = distances_to_accept(g, space, y);
            int steps = unreachable;
            for (Vertex x = 0; x < g.order(); ++x) {
                int s = space.index(x, y);
                if (s != -1)
                    steps = std::min(steps, dist[flagged(s, space.off_diagonal(s))]);
            }
            if (steps < best_steps) {
                best_steps = steps;
                per_y.clear();
            }
            if (steps == best_steps && steps != unreachable)
                per_y.emplace_back(y, std::move(dist));
        }

        std::optional<WalkWitness> best;
        for (auto & [y, dist] : per_y) {
            auto w = smallest_witness_for(g, c, space, y, dist, best_steps);
            if (! best || w.vertices < best->vertices)
                best = std::move(w);
        }
        return best;
    }

    auto validate_levelling(const Graph & g, const Levelling & levelling) -> bool
    {
        if (levelling.levels.size() != std::size_t(g.order()))
            return false;
        return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) {
            return std::abs(levelling.levels[e.first] - levelling.levels[e.second]) <= 1;
        });
    }

    auto validate_shadow_complete(const Graph & g, const Levelling & levelling) -> bool
    {
        if (! validate_levelling(g, levelling))
            return false;
        auto & level = levelling.levels;
        int n = g.order();
        for (int k = levelling.min_level(); k < levelling.max_level(); ++k) {
            vector<int> comp(n, -1);
            for (Vertex s = 0; s < n; ++s) {
                if (level[s] <= k || comp[s] != -1)
                    continue;
                vector<Vertex> stack{s}, shadow;
                comp[s] = s;
                while (! stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    for (auto w : g.neighbours(v)) {
                        if (level[w] == k)
                            shadow.push_back(w);
                        else if (level[w] > k && comp[w] == -1) {
                            comp[w] = s;
                            stack.push_back(w);
                        }
                    }
                }
                std::sort(shadow.begin(), shadow.end());
                shadow.erase(std::unique(shadow.begin(), shadow.end()), shadow.end());
                for (std::size_t i = 0; i < shadow.size(); ++i)
                    for (std::size_t j = i + 1; j < shadow.size(); ++j)
                        if (! g.has_edge(shadow[i], shadow[j]))
                            return false;
            }
        }
        return true;
    }

    auto validate_tree_partition(const Graph & g, const TreePartition & tp) -> bool
    {
        int n = g.order();
        int bags = int(tp.bags.size());
        vector<int> bag_of(n, -1);
        for (int b = 0; b < bags; ++b)
            for (auto v : tp.bags[b]) {
                if (v < 0 || v >= n)
                    throw InvalidInput("tree-partition bag holds unknown vertex " + std::to_string(v));
                if (bag_of[v] != -1)
                    return false;
                bag_of[v] = b;
            }
        if (std::find(bag_of.begin(), bag_of.end(), -1) != bag_of.end())
            return false;
        if (! is_forest(bags, tp.host_edges))
            return false;

        std::set<Edge> host;
        for (auto [a, b] : tp.host_edges)
            host.emplace(std::min(a, b), std::max(a, b));
        for (auto [u, v] : g.edges()) {
            int a = bag_of[u], b = bag_of[v];
            if (a != b && ! host.count({std::min(a, b), std::max(a, b)}))
                return false;
        }

        if (! tp.depths.empty()) {
            if (tp.depths.size() != std::size_t(bags))
                return false;
            for (auto [a, b] : tp.host_edges)
                if (std::abs(tp.depths[a] - tp.depths[b]) != 1)
                    return false;
            DisjointSets sets(bags);
            for (auto [a, b] : tp.host_edges)
                sets.unite(a, b);
            vector<int> roots(bags, 0);
            for (int b = 0; b < bags; ++b)
                if (tp.depths[b] == 0)
                    ++roots[sets.find(b)];
            for (int b = 0; b < bags; ++b)
                if (sets.find(b) == b && roots[b] != 1)
                    return false;
        }
        return true;
    }

    auto validate_tree_decomposition(const Graph & g, const TreeDecomposition & td) -> bool
    {
        int n = g.order();
        int bags = int(td.bags.size());
        vector<vector<int>> holders(n);
        for (int b = 0; b < bags; ++b)
            for (auto v : td.bags[b]) {
                if (v < 0 || v >= n)
                    throw InvalidInput("tree decomposition bag holds unknown vertex " + std::to_string(v));
                holders[v].push_back(b);
            }
        if (! is_forest(bags, td.host_edges))
            return false;
        for (auto & h : holders)
            if (h.empty())
                return false;

        for (auto [u, v] : g.edges()) {
            vector<int> shared;
            std::set_intersection(holders[u].begin(), holders[u].end(), holders[v].begin(), holders[v].end(),
                std::back_inserter(shared));
            if (shared.empty())
                return false;
        }

        vector<vector<int>> host(bags);
        for (auto [a, b] : td.host_edges) {
            host[a].push_back(b);
            host[b].push_back(a);
        }
        for (Vertex v = 0; v < n; ++v) {
            vector<char> holds(bags, 0), seen(bags, 0);
            for (auto b : holders[v])
                holds[b] = 1;
            vector<int> stack{holders[v].front()};
            seen[holders[v].front()] = 1;
            std::size_t reached = 0;
            while (! stack.empty()) {
                int b = stack.back();
                stack.pop_back();
                ++reached;
                for (auto b2 : host[b])
                    if (holds[b2] && ! seen[b2]) {
                        seen[b2] = 1;
                        stack.push_back(b2);
                    }
            }
            if (reached != holders[v].size())
                return false;
        }
        return true;
    }
}
