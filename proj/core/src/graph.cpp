#include <nonrep/graph.hpp>

#include <algorithm>
#include <queue>
#include <set>

using std::vector;

namespace nonrep
{
    Graph::Graph(int n, vector<Edge> edges, vector<Vertex> loops) :
        _n(n), _loop(n < 0 ? 0 : n, 0), _adj(n < 0 ? 0 : n), _steps(n < 0 ? 0 : n)
    {
        if (n < 0)
            throw InvalidInput("vertex count must be non-negative");

        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
            if (u == v)
                throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(u) + "} is a loop; use the loop set");
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidInput("duplicate edge");
        _edges = std::move(edges);

        for (auto v : loops) {
            if (v < 0 || v >= n)
                throw InvalidInput("loop vertex " + std::to_string(v) + " out of range");
            if (_loop[v])
                throw InvalidInput("duplicate loop at " + std::to_string(v));
            _loop[v] = 1;
        }

        for (auto [u, v] : _edges) {
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (Vertex v = 0; v < n; ++v) {
            std::sort(_adj[v].begin(), _adj[v].end());
            _steps[v] = _adj[v];
            if (_loop[v])
                _steps[v].insert(std::lower_bound(_steps[v].begin(), _steps[v].end(), v), v);
        }
    }

    auto Graph::loops() const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex v = 0; v < _n; ++v)
            if (_loop[v])
                result.push_back(v);
        return result;
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        if (u == v)
            return false;
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto Graph::can_step(Vertex u, Vertex v) const -> bool
    {
        return u == v ? bool(_loop[u]) : has_edge(u, v);
    }

    auto Graph::degree(Vertex v) const -> int
    {
        return int(_adj[v].size()) + (_loop[v] ? 1 : 0);
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (Vertex v = 0; v < _n; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::components() const -> vector<int>
    {
        vector<int> comp(_n, -1);
        int next = 0;
        for (Vertex s = 0; s < _n; ++s) {
            if (comp[s] != -1)
                continue;
            comp[s] = next;
            vector<Vertex> stack{s};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : _adj[v])
                    if (comp[w] == -1) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return comp;
    }

    auto Graph::is_connected() const -> bool
    {
        auto comp = components();
        return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    }

    auto Graph::is_tree() const -> bool
    {
        return _n >= 1 && _edges.size() == std::size_t(_n - 1) && is_connected() && loops().empty();
    }

    auto Graph::distances_from(Vertex source) const -> vector<int>
    {
        vector<int> dist(_n, -1);
        std::queue<Vertex> queue;
        dist[source] = 0;
        queue.push(source);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : _adj[v])
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
        }
        return dist;
    }

    auto Graph::induced(vector<Vertex> vertices) const -> std::pair<Graph, vector<Vertex>>
    {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        vector<int> index(_n, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            index[vertices[i]] = int(i);

        vector<Edge> edges;
        vector<Vertex> loops;
        for (auto [u, v] : _edges)
            if (index[u] != -1 && index[v] != -1)
                edges.emplace_back(index[u], index[v]);
        for (auto v : vertices)
            if (_loop[v])
                loops.push_back(index[v]);
        return {Graph(int(vertices.size()), std::move(edges), std::move(loops)), std::move(vertices)};
    }

    auto Graph::is_subgraph_of(const Graph & other) const -> bool
    {
        if (_n != other._n)
            return false;
        for (Vertex v = 0; v < _n; ++v)
            if (_loop[v] && ! other._loop[v])
                return false;
        return std::includes(other._edges.begin(), other._edges.end(), _edges.begin(), _edges.end());
    }

    Colouring::Colouring(vector<int> colours) :
        _colours(std::move(colours))
    {
        for (auto c : _colours)
            if (c < 1)
                throw InvalidInput("colour ids must be positive, got " + std::to_string(c));
    }

    auto Colouring::colour_count() const -> int
    {
        return int(std::set<int>(_colours.begin(), _colours.end()).size());
    }

    auto Colouring::max_colour() const -> int
    {
        return _colours.empty() ? 0 : *std::max_element(_colours.begin(), _colours.end());
    }

    void Colouring::check_covers(const Graph & g) const
    {
        if (_colours.size() != std::size_t(g.order()))
            throw InvalidInput("colouring has " + std::to_string(_colours.size()) + " entries but graph has "
                + std::to_string(g.order()) + " vertices");
    }

    auto Levelling::min_level() const -> int
    {
        return levels.empty() ? 0 : *std::min_element(levels.begin(), levels.end());
    }

    auto Levelling::max_level() const -> int
    {
        return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
    }
}
