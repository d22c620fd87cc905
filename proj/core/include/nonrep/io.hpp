#pragma once

#include <nonrep/decompose.hpp>
#include <nonrep/exact.hpp>
#include <nonrep/graph.hpp>
#include <nonrep/verify.hpp>

#include <nlohmann/json.hpp>

#include <string>

// JSON schemas (0-based vertex ids, 1-based colour ids):
//   graph        {"n": 4, "edges": [[0,1],[1,2]], "loops": [3]}   edges u < v, sorted
//   colouring    {"colours": [1,2,1,3]}
//   levelling    {"levels": [0,1,1,2]}
//   witness      {"type": "walk" | "path", "t": 2, "vertices": [0,1,2,1]}
//   partition    {"bags": [[0],[1,2]], "tree_edges": [[0,1]], "depths": [0,1]}
//   decomposition{"bags": [...], "tree_edges": [...], "width": 2}
//   exact        {"value": 4, "colours": [...], "nodes": 123}
namespace nonrep::io
{
    using nlohmann::json;

    [[nodiscard]] auto to_json(const Graph & g) -> json;
    [[nodiscard]] auto graph_from_json(const json & j) -> Graph;

    [[nodiscard]] auto to_json(const Colouring & c) -> json;
    [[nodiscard]] auto colouring_from_json(const json & j) -> Colouring;

    [[nodiscard]] auto to_json(const Levelling & l) -> json;
    [[nodiscard]] auto levelling_from_json(const json & j) -> Levelling;

    [[nodiscard]] auto to_json(const WalkWitness & w) -> json;
    [[nodiscard]] auto to_json(const PathWitness & w) -> json;

    [[nodiscard]] auto to_json(const TreePartition & tp) -> json;
    [[nodiscard]] auto tree_partition_from_json(const json & j) -> TreePartition;

    [[nodiscard]] auto to_json(const TreeDecomposition & td) -> json;
    [[nodiscard]] auto tree_decomposition_from_json(const json & j) -> TreeDecomposition;

    [[nodiscard]] auto to_json(const ExactResult & r) -> json;

    /// One JSON object per recorded witness.
    [[nodiscard]] auto to_json(const ExplorerSample & s) -> json;

    /// Canonical compact text: the same graph always serialises to the same bytes.
    [[nodiscard]] auto dump(const json & j) -> std::string;

    /// Fill colour for a colour id. Ids 1..12 map onto a fixed palette, larger ids wrap
    /// around it.
    [[nodiscard]] auto palette_colour(int colour) -> std::string;

    /// Graphviz text. With a colouring, each node carries style=filled, its palette fill
    /// and its colour id as label suffix.
    [[nodiscard]] auto to_dot(const Graph & g, const Colouring * colouring = nullptr) -> std::string;

    [[nodiscard]] auto read_json_file(const std::string & path) -> json;
    void write_text_file(const std::string & path, const std::string & text);
}
