#include <nonrep/io.hpp>

#include <array>
#include <fstream>
#include <sstream>

using std::vector;

namespace nonrep::io
{
    namespace
    {
        auto edges_to_json(const vector<Edge> & edges) -> json
        {
            json out = json::array();
            for (auto [u, v] : edges)
                out.push_back({u, v});
            return out;
        }

        auto edges_from_json(const json & j) -> vector<Edge>
        {
            vector<Edge> edges;
            for (auto & e : j) {
                if (! e.is_array() || e.size() != 2)
                    throw InvalidInput("edge entries must be pairs");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return edges;
        }

        template <typename F>
        auto guarded(F && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const json::exception & e) {
                throw InvalidInput(std::string("malformed JSON document: ") + e.what());
            }
        }

        const std::array<const char *, 12> palette{"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
            "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};
    }

    auto to_json(const Graph & g) -> json
    {
        return {{"n", g.order()}, {"edges", edges_to_json(g.edges())}, {"loops", g.loops()}};
    }

    auto graph_from_json(const json & j) -> Graph
    {
        return guarded([&] {
            auto loops = j.contains("loops") ? j.at("loops").get<vector<int>>() : vector<int>{};
            return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges")), std::move(loops));
        });
    }

    auto to_json(const Colouring & c) -> json
    {
        return {{"colours", c.colours()}};
    }

    auto colouring_from_json(const json & j) -> Colouring
    {
        return guarded([&] { return Colouring(j.at("colours").get<vector<int>>()); });
    }

    auto to_json(const Levelling & l) -> json
    {
        return {{"levels", l.levels}};
    }

    auto levelling_from_json(const json & j) -> Levelling
    {
        return guarded([&] { return Levelling{j.at("levels").get<vector<int>>()}; });
    }

    auto to_json(const WalkWitness & w) -> json
    {
        return {{"type", "walk"}, {"t", w.t}, {"vertices", w.vertices}};
    }

    auto to_json(const PathWitness & w) -> json
    {
        return {{"type", "path"}, {"t", w.t}, {"vertices", w.vertices}};
    }

    auto to_json(const TreePartition & tp) -> json
    {
        return {{"bags", tp.bags}, {"tree_edges", edges_to_json(tp.host_edges)}, {"depths", tp.depths}};
    }

    auto tree_partition_from_json(const json & j) -> TreePartition
    {
        return guarded([&] {
            TreePartition tp;
            tp.bags = j.at("bags").get<vector<vector<int>>>();
            tp.host_edges = edges_from_json(j.at("tree_edges"));
            if (j.contains("depths"))
                tp.depths = j.at("depths").get<vector<int>>();
            return tp;
        });
    }

    auto to_json(const TreeDecomposition & td) -> json
    {
        return {{"bags", td.bags}, {"tree_edges", edges_to_json(td.host_edges)}, {"width", td.width()}};
    }

    auto tree_decomposition_from_json(const json & j) -> TreeDecomposition
    {
        return guarded([&] {
            TreeDecomposition td;
            td.bags = j.at("bags").get<vector<vector<int>>>();
            td.host_edges = edges_from_json(j.at("tree_edges"));
            return td;
        });
    }

    auto to_json(const ExactResult & r) -> json
    {
        return {{"value", r.value}, {"colours", r.certificate.colours()}, {"nodes", r.nodes_expanded}};
    }

    auto to_json(const ExplorerSample & s) -> json
    {
        return {{"sample", s.index}, {"graph", to_json(s.graph)}, {"colours", s.colouring.colours()},
            {"colour_count", s.colours}, {"witness", to_json(s.witness)}, {"length", s.witness.length()},
            {"order", s.witness.order()}, {"ratio", s.ratio()}};
    }

    auto dump(const json & j) -> std::string
    {
        return j.dump();
    }

    auto palette_colour(int colour) -> std::string
    {
        if (colour < 1)
            throw InvalidInput("colour ids start at 1");
        return palette[std::size_t(colour - 1) % palette.size()];
    }

    auto to_dot(const Graph & g, const Colouring * colouring) -> std::string
    {
        if (colouring)
            colouring->check_covers(g);
        std::ostringstream out;
        out << "graph G {\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            out << "  " << v;
            if (colouring)
                out << " [label=\"" << v << ":" << (*colouring)[v] << "\", style=filled, fillcolor=\""
                    << palette_colour((*colouring)[v]) << "\"]";
            out << ";\n";
        }
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        for (auto v : g.loops())
            out << "  " << v << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto read_json_file(const std::string & path) -> json
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open " + path);
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw InvalidInput("cannot parse " + path + ": " + e.what());
        }
    }

    void write_text_file(const std::string & path, const std::string & text)
    {
        std::ofstream out(path);
        if (! out)
            throw InvalidInput("cannot write " + path);
        out << text;
    }
}
