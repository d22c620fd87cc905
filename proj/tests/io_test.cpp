#include <nonrep/generators.hpp>
#include <nonrep/io.hpp>

#include <gtest/gtest.h>

using namespace nonrep;
using nonrep::io::json;

TEST(Io, GraphRoundTrip)
{
    Graph g(5, {{3, 1}, {0, 4}, {1, 2}}, {2});
    auto text = io::dump(io::to_json(g));
    EXPECT_EQ(text, R"({"edges":[[0,4],[1,2],[1,3]],"loops":[2],"n":5})");
    auto back = io::graph_from_json(json::parse(text));
    EXPECT_EQ(back, g);
    EXPECT_EQ(io::dump(io::to_json(back)), text);
}

TEST(Io, GraphWithoutLoopsField)
{
    auto g = io::graph_from_json(json::parse(R"({"n":3,"edges":[[0,1]]})"));
    EXPECT_EQ(g.order(), 3);
    EXPECT_TRUE(g.loops().empty());
}

TEST(Io, RejectsMalformedDocuments)
{
    EXPECT_THROW((void) io::graph_from_json(json::parse(R"({"edges":[]})")), InvalidInput);
    EXPECT_THROW((void) io::graph_from_json(json::parse(R"({"n":2,"edges":[[0,1,2]]})")), InvalidInput);
    EXPECT_THROW((void) io::graph_from_json(json::parse(R"({"n":2,"edges":[[0,5]]})")), InvalidInput);
    EXPECT_THROW((void) io::graph_from_json(json::parse(R"({"n":"two","edges":[]})")), InvalidInput);
    EXPECT_THROW((void) io::colouring_from_json(json::parse(R"({"colours":[1,0]})")), InvalidInput);
    EXPECT_THROW((void) io::read_json_file("/nonexistent/graph.json"), InvalidInput);
}

TEST(Io, OtherSchemas)
{
    Colouring c({1, 2, 1});
    EXPECT_EQ(io::colouring_from_json(io::to_json(c)), c);
    Levelling l{{0, 1, 1}};
    EXPECT_EQ(io::levelling_from_json(io::to_json(l)), l);
    EXPECT_EQ(io::dump(io::to_json(WalkWitness{{0, 1, 2, 1}, 2})), R"({"t":2,"type":"walk","vertices":[0,1,2,1]})");
    EXPECT_EQ(io::dump(io::to_json(PathWitness{{0, 1, 2, 3}, 2})), R"({"t":2,"type":"path","vertices":[0,1,2,3]})");

    TreePartition tp{{{0}, {1, 2}}, {{0, 1}}, {0, 1}};
    auto tp_back = io::tree_partition_from_json(io::to_json(tp));
    EXPECT_EQ(tp_back.bags, tp.bags);
    EXPECT_EQ(tp_back.host_edges, tp.host_edges);
    EXPECT_EQ(tp_back.depths, tp.depths);

    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    auto td_json = io::to_json(td);
    EXPECT_EQ(td_json.at("width"), 1);
    EXPECT_EQ(io::tree_decomposition_from_json(td_json).bags, td.bags);

    ExactResult r{4, Colouring({1, 2, 3, 4, 2}), 17};
    EXPECT_EQ(io::dump(io::to_json(r)), R"({"colours":[1,2,3,4,2],"nodes":17,"value":4})");
}

TEST(Io, Dot)
{
    auto g = gen_path(3);
    auto plain = io::to_dot(g);
    EXPECT_NE(plain.find("0 -- 1;"), std::string::npos);
    EXPECT_EQ(plain.find("fillcolor"), std::string::npos);
    Colouring c({1, 2, 13});
    auto coloured = io::to_dot(g, &c);
    EXPECT_NE(coloured.find("fillcolor=\"" + io::palette_colour(1) + "\""), std::string::npos);
    EXPECT_EQ(io::palette_colour(13), io::palette_colour(1));
    EXPECT_NE(io::palette_colour(1), io::palette_colour(2));
    Colouring short_colouring({1});
    EXPECT_THROW((void) io::to_dot(g, &short_colouring), InvalidInput);
}
