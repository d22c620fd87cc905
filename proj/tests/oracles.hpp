#pragma once

// Slow reference implementations used to cross-check the library. Nothing here shares
// code with core/: every check is written from the definitions directly.

#include <nonrep/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using nonrep::Colouring;
    using nonrep::Edge;
    using nonrep::Graph;
    using nonrep::Vertex;
    using std::vector;

    /// Cubic scan over every factor.
    inline auto has_square(const vector<int> & s) -> bool
    {
        std::size_t n = s.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t h = 1; i + 2 * h <= n; ++h)
                if (std::equal(s.begin() + long(i), s.begin() + long(i + h), s.begin() + long(i + h)))
                    return true;
        return false;
    }

    /// Enumerates every simple path and tests its colour sequence for being a square.
    inline auto has_repetitive_path(const Graph & g, const Colouring & c) -> bool
    {
        int n = g.order();
        vector<char> used(n, 0);
        vector<int> seq;
        std::function<bool(Vertex)> dfs = [&](Vertex v) {
            used[v] = 1;
            seq.push_back(c[v]);
            bool found = false;
            std::size_t len = seq.size();
            if (len % 2 == 0 && std::equal(seq.begin(), seq.begin() + long(len / 2), seq.begin() + long(len / 2)))
                found = true;
            for (Vertex w = 0; w < n && ! found; ++w)
                if (! used[w] && g.has_edge(v, w))
                    found = dfs(w);
            seq.pop_back();
            used[v] = 0;
            return found;
        };
        for (Vertex v = 0; v < n; ++v)
            if (dfs(v))
                return true;
        return false;
    }

    inline auto can_step(const Graph & g, Vertex a, Vertex b) -> bool
    {
        return a == b ? g.has_loop(a) : g.has_edge(a, b);
    }

    /// Smallest t such that a non-boring walk of length 2t reads as a square, searching
    /// t = 1..max_t by layered expansion over (v_{t+1}, v_i, v_{t+i}, off-diagonal seen).
    inline auto min_repetitive_walk_half(const Graph & g, const Colouring & c, int max_t) -> std::optional<int>
    {
        int n = g.order();
        auto index = [n](int first, int a, int b, int flag) { return ((first * n + a) * n + b) * 2 + flag; };
        vector<char> layer(std::size_t(n * n * n * 2), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (c[a] == c[b])
                    layer[index(b, a, b, a != b)] = 1;
        for (int t = 1; t <= max_t; ++t) {
            for (int first = 0; first < n; ++first)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (layer[index(first, a, b, 1)] && can_step(g, a, first))
                            return t;
            vector<char> next(layer.size(), 0);
            for (int first = 0; first < n; ++first)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int flag = 0; flag < 2; ++flag) {
                            if (! layer[index(first, a, b, flag)])
                                continue;
                            for (int a2 = 0; a2 < n; ++a2) {
                                if (! can_step(g, a, a2))
                                    continue;
                                for (int b2 = 0; b2 < n; ++b2)
                                    if (c[a2] == c[b2] && can_step(g, b, b2))
                                        next[index(first, a2, b2, flag | (a2 != b2))] = 1;
                            }
                        }
            layer.swap(next);
        }
        return std::nullopt;
    }

    /// Literal enumeration of all walks of length 2t for t <= max_t. Only for tiny inputs.
    inline auto has_repetitive_walk_literal(const Graph & g, const Colouring & c, int max_t) -> bool
    {
        int n = g.order();
        vector<Vertex> walk;
        std::function<bool(std::size_t)> extend = [&](std::size_t target) {
            if (walk.size() == target) {
                std::size_t t = target / 2;
                bool boring = true;
                for (std::size_t i = 0; i < t; ++i) {
                    if (c[walk[i]] != c[walk[t + i]])
                        return false;
                    if (walk[i] != walk[t + i])
                        boring = false;
                }
                return ! boring;
            }
            for (Vertex w = 0; w < n; ++w)
                if (walk.empty() || can_step(g, walk.back(), w)) {
                    walk.push_back(w);
                    bool found = extend(target);
                    walk.pop_back();
                    if (found)
                        return true;
                }
            return false;
        };
        for (int t = 1; t <= max_t; ++t)
            if (extend(std::size_t(2 * t)))
                return true;
        return false;
    }

    inline auto is_distance2(const Graph & g, const Colouring & c) -> bool
    {
        auto dist_le_2 = [&](Vertex u, Vertex v) {
            if (g.has_edge(u, v))
                return true;
            for (Vertex w = 0; w < g.order(); ++w)
                if (g.has_edge(u, w) && g.has_edge(w, v))
                    return true;
            return false;
        };
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (c[u] == c[v] && dist_le_2(u, v))
                    return false;
        return true;
    }

    /// Every colouring of n vertices with at most k colours in which colour j + 1 first
    /// appears only after colour j.
    inline auto canonical_colourings(int n, int k) -> vector<vector<int>>
    {
        vector<vector<int>> out;
        vector<int> current(n, 0);
        std::function<void(int, int)> rec = [&](int i, int used) {
            if (i == n) {
                out.push_back(current);
                return;
            }
            for (int colour = 1; colour <= std::min(k, used + 1); ++colour) {
                current[i] = colour;
                rec(i + 1, std::max(used, colour));
            }
        };
        rec(0, 0);
        return out;
    }

    /// One representative per isomorphism class of simple graphs on n <= 6 vertices.
    inline auto all_graphs(int n) -> vector<Graph>
    {
        vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        vector<vector<int>> perms;
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        auto slot_of = [&](int u, int v) {
            if (u > v)
                std::swap(u, v);
            return int(std::find(slots.begin(), slots.end(), Edge{u, v}) - slots.begin());
        };
        std::set<std::uint32_t> seen;
        vector<Graph> out;
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::uint32_t best = mask;
            for (auto & p : perms) {
                std::uint32_t image = 0;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (mask >> s & 1u)
                        image |= 1u << slot_of(p[slots[s].first], p[slots[s].second]);
                best = std::min(best, image);
            }
            if (! seen.insert(best).second)
                continue;
            vector<Edge> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1u)
                    edges.push_back(slots[s]);
            out.emplace_back(n, edges);
        }
        return out;
    }

    namespace detail
    {
        inline auto encode(const vector<vector<int>> & adj, int v, int parent) -> std::string
        {
            vector<std::string> parts;
            for (auto w : adj[v])
                if (w != parent)
                    parts.push_back(encode(adj, w, v));
            std::sort(parts.begin(), parts.end());
            std::string out = "(";
            for (auto & p : parts)
                out += p;
            return out + ")";
        }
    }

    /// One representative of every unlabelled tree on n vertices, from Pruefer sequences.
    inline auto all_trees(int n) -> vector<Graph>
    {
        if (n == 1)
            return {Graph(1, {})};
        if (n == 2)
            return {Graph(2, {{0, 1}})};
        std::set<std::string> seen;
        vector<Graph> out;
        vector<int> code(n - 2, 0);
        while (true) {
            vector<int> degree(n, 1);
            for (auto x : code)
                ++degree[x];
            vector<Edge> edges;
            for (auto x : code)
                for (int leaf = 0; leaf < n; ++leaf)
                    if (degree[leaf] == 1) {
                        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                        --degree[leaf];
                        --degree[x];
                        break;
                    }
            vector<int> last;
            for (int v = 0; v < n; ++v)
                if (degree[v] == 1)
                    last.push_back(v);
            edges.emplace_back(last[0], last[1]);

            vector<vector<int>> adj(n);
            for (auto [u, v] : edges) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            std::string key;
            for (int root = 0; root < n; ++root) {
                auto form = detail::encode(adj, root, -1);
                if (key.empty() || form < key)
                    key = form;
            }
            if (seen.insert(key).second)
                out.emplace_back(n, edges);

            int i = 0;
            while (i < n - 2 && ++code[i] == n)
                code[i++] = 0;
            if (i == n - 2)
                break;
        }
        return out;
    }

    inline auto binomial2(int c) -> int
    {
        return c * (c - 1) / 2;
    }
}
