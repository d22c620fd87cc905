#include <nonrep/decompose.hpp>
#include <nonrep/verify.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

using std::vector;

namespace nonrep
{
    auto TreeDecomposition::width() const -> int
    {
        int largest = 0;
        for (auto & bag : bags)
            largest = std::max(largest, int(bag.size()));
        return largest - 1;
    }

    auto TreePartition::max_bag_size() const -> int
    {
        int largest = 0;
        for (auto & bag : bags)
            largest = std::max(largest, int(bag.size()));
        return largest;
    }

    auto tree_decomposition(const Graph & g) -> TreeDecomposition
    {
        int n = g.order();
        vector<std::set<Vertex>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }

        auto fill_in = [&](Vertex v) {
            int missing = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (! adj[*a].count(*b))
                        ++missing;
            return missing;
        };

        vector<char> eliminated(n, 0);
        vector<int> position(n, -1);
        vector<Vertex> order;
        TreeDecomposition td;
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            int best_fill = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (eliminated[v])
                    continue;
                int fill = fill_in(v);
                if (best == -1 || fill < best_fill) {
                    best = v;
                    best_fill = fill;
                }
            }

            vector<Vertex> bag(adj[best].begin(), adj[best].end());
            bag.push_back(best);
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));

            for (auto a = adj[best].begin(); a != adj[best].end(); ++a)
                for (auto b = std::next(a); b != adj[best].end(); ++b) {
                    adj[*a].insert(*b);
                    adj[*b].insert(*a);
                }
            for (auto w : adj[best])
                adj[w].erase(best);
            eliminated[best] = 1;
            position[best] = step;
            order.push_back(best);
        }

        // Bag of v hangs below the bag of its earliest-eliminated later neighbour.
        int first_root = -1;
        for (int step = 0; step < n; ++step) {
            auto & bag = td.bags[step];
            int parent = -1;
            for (auto w : bag)
                if (position[w] > step && (parent == -1 || position[w] < parent))
                    parent = position[w];
            if (parent != -1)
                td.host_edges.emplace_back(parent, step);
            else if (first_root == -1)
                first_root = step;
            else
                td.host_edges.emplace_back(first_root, step);
        }
        return td;
    }

    auto tree_partition(const Graph & g) -> TreePartition
    {
        int n = g.order();
        auto component = g.components();
        vector<int> depth(n, -1);
        for (Vertex v = 0; v < n; ++v)
            if (depth[v] == -1) {
                auto dist = g.distances_from(v);
                for (Vertex w = 0; w < n; ++w)
                    if (dist[w] != -1)
                        depth[w] = dist[w];
            }

        int max_depth = n == 0 ? -1 : *std::max_element(depth.begin(), depth.end());
        vector<vector<Vertex>> layer(max_depth + 1);
        for (Vertex v = 0; v < n; ++v)
            layer[depth[v]].push_back(v);

        vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };

        // Bags discovered while sweeping layers bottom-up; each keyed for final ordering.
        struct RawBag
        {
            int component, depth;
            vector<Vertex> members;
            int parent_raw = -1;
        };
        vector<RawBag> raw;
        vector<int> raw_of(n, -1);
        vector<char> present(n, 0);

        for (int i = max_depth; i >= 0; --i) {
            for (auto v : layer[i])
                present[v] = 1;
            for (auto v : layer[i])
                for (auto w : g.neighbours(v))
                    if (present[w])
                        parent[find(v)] = find(w);

            std::map<int, int> by_root;
            for (auto v : layer[i]) {
                int root = find(v);
                auto [it, inserted] = by_root.emplace(root, int(raw.size()));
                if (inserted)
                    raw.push_back({component[v], i, {}});
                raw[it->second].members.push_back(v);
                raw_of[v] = it->second;
            }
            if (i + 1 <= max_depth)
                for (auto v : layer[i + 1]) {
                    auto & child = raw[raw_of[v]];
                    if (child.parent_raw == -1)
                        child.parent_raw = by_root.at(find(v));
                }
        }

        vector<int> sorted(raw.size());
        std::iota(sorted.begin(), sorted.end(), 0);
        std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
            return std::tuple(raw[a].component, raw[a].depth, raw[a].members.front())
                < std::tuple(raw[b].component, raw[b].depth, raw[b].members.front());
        });
        vector<int> final_index(raw.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            final_index[sorted[i]] = int(i);

        TreePartition tp;
        for (auto r : sorted) {
            tp.bags.push_back(raw[r].members);
            tp.depths.push_back(raw[r].depth);
            if (raw[r].parent_raw != -1)
                tp.host_edges.emplace_back(final_index[raw[r].parent_raw], final_index[r]);
        }
        return tp;
    }

    auto shadow_levelling(const Graph & g, const TreePartition & tp) -> ShadowLevelling
    {
        if (! validate_tree_partition(g, tp))
            throw InvalidInput("not a tree-partition of the graph");

        int n = g.order();
        int bags = int(tp.bags.size());
        vector<int> bag_of(n);
        vector<int> index(n);
        for (int b = 0; b < bags; ++b) {
            auto members = tp.bags[b];
            std::sort(members.begin(), members.end());
            for (std::size_t i = 0; i < members.size(); ++i) {
                bag_of[members[i]] = b;
                index[members[i]] = int(i) + 1;
            }
        }

        auto edges = g.edges();
        for (auto & bag : tp.bags)
            for (auto u : bag)
                for (auto v : bag)
                    if (u < v && ! g.has_edge(u, v))
                        edges.emplace_back(u, v);

        vector<vector<int>> host(bags);
        for (auto [a, b] : tp.host_edges) {
            host[a].push_back(b);
            host[b].push_back(a);
        }
        vector<int> smallest(bags, n);
        for (int b = 0; b < bags; ++b)
            for (auto v : tp.bags[b])
                smallest[b] = std::min(smallest[b], v);

        // Root each host component at the bag holding its lowest vertex.
        vector<int> bag_depth(bags, -1);
        vector<int> by_smallest(bags);
        std::iota(by_smallest.begin(), by_smallest.end(), 0);
        std::sort(by_smallest.begin(), by_smallest.end(), [&](int a, int b) { return smallest[a] < smallest[b]; });
        for (auto root : by_smallest) {
            if (bag_depth[root] != -1)
                continue;
            bag_depth[root] = 0;
            vector<int> queue{root};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto next : host[queue[i]])
                    if (bag_depth[next] == -1) {
                        bag_depth[next] = bag_depth[queue[i]] + 1;
                        queue.push_back(next);
                    }
        }

        ShadowLevelling result;
        result.completed = Graph(n, std::move(edges), g.loops());
        result.levelling.levels.resize(n);
        for (Vertex v = 0; v < n; ++v)
            result.levelling.levels[v] = bag_depth[bag_of[v]];
        result.in_bag_index = Colouring(std::move(index));
        return result;
    }

    auto treewidth_colouring(const Graph & g, RepetitionMode mode) -> TreewidthColouring
    {
        TreewidthColouring result;
        result.partition = tree_partition(g);
        result.max_bag = result.partition.max_bag_size();
        result.shadow = shadow_levelling(g, result.partition);
        auto & shadow = result.shadow;
        if (mode == RepetitionMode::Path)
            result.colouring = compose_shadow(shadow.completed, shadow.levelling, shadow.in_bag_index);
        else
            result.colouring = compose_shadow_walks(g, shadow.completed, shadow.levelling, shadow.in_bag_index,
                greedy_square_colouring(g));
        return result;
    }

    auto tree_partition_bag_target(int k, int d) -> double
    {
        return 2.5 * (k + 1) * (3.5 * d - 1);
    }

    auto treewidth_degree_pi_target(int k, int d) -> double
    {
        return 10.0 * (k + 1) * (3.5 * d - 1);
    }
}
