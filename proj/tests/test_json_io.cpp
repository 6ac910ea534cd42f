#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "thetapcn/graph.hpp"
#include "thetapcn/json_io.hpp"
#include "thetapcn/verifier.hpp"

using namespace thetapcn;

TEST_CASE("undirected theta graphs round-trip with their metadata") {
  const LabeledGraph g = build_theta(ThetaSpec({2, 3}));
  const std::string text = graph_to_json(g);
  CHECK(text.find("\"theta_lengths\"") != std::string::npos);

  const GraphDocument doc = parse_graph(text);
  CHECK_FALSE(doc.directed);
  CHECK(doc.graph.labels() == g.labels());
  CHECK(doc.graph.edges() == g.edges());
  REQUIRE(doc.graph.theta().has_value());
  CHECK(doc.graph.theta()->lengths == std::vector<int>{2, 3});
  CHECK(doc.graph.theta()->u == g.index_of("u"));
  CHECK(graph_to_json(doc.graph) == text);
}

TEST_CASE("oriented graphs round-trip and keep canonical direction bits") {
  const LabeledGraph g = build_theta(ThetaSpec({2, 2}));
  const OrientedGraph og = orient(g, 0b0110);
  const std::string text = graph_to_json(og);

  const GraphDocument doc = parse_graph(text);
  CHECK(doc.directed);
  CHECK(doc.forward == og.forward_bits());
  const OrientedGraph back = doc.oriented();
  for (int i = 0; i < og.arc_count(); ++i) CHECK(back.arc(i) == og.arc(i));
  CHECK(graph_to_json(doc.oriented()) == text);
}

TEST_CASE("plain graphs parse without metadata") {
  const std::string text = R"({
    "directed": false,
    "vertices": ["a", "b", "c"],
    "edges": [["a", "b"], ["b", "c"]]
  })";
  const GraphDocument doc = parse_graph(text);
  CHECK(doc.graph.vertex_count() == 3);
  CHECK(doc.graph.edge_count() == 2);
  CHECK_FALSE(doc.graph.theta().has_value());
  CHECK(doc.forward == std::vector<bool>{true, true});
}

TEST_CASE("a reversed edge listing still yields canonical bits") {
  // same arcs as orient(theta(2,2), 0b0110) but edges written head-first
  const std::string text = R"({
    "directed": true,
    "vertices": ["u", "v", "x1_1", "x2_1"],
    "edges": [["x1_1", "u"], ["x1_1", "v"], ["u", "x2_1"], ["v", "x2_1"]],
    "theta_lengths": [2, 2]
  })";
  const GraphDocument doc = parse_graph(text);
  CHECK(doc.forward == std::vector<bool>{false, true, true, false});
  REQUIRE(doc.graph.theta().has_value());
  // canonical edge order restored: path by path from u
  CHECK(doc.graph.edges()[0].first == doc.graph.index_of("u"));
}

TEST_CASE("malformed graph files raise input errors") {
  CHECK_THROWS_AS(parse_graph("{"), IoError);
  CHECK_THROWS_AS(parse_graph("[1, 2]"), IoError);
  CHECK_THROWS_AS(parse_graph(R"({"directed": 1, "vertices": [], "edges": []})"),
                  IoError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), IoError);
  CHECK_THROWS_AS(
      parse_graph(
          R"({"directed": false, "vertices": ["a", "a"], "edges": []})"),
      IoError);
  CHECK_THROWS_AS(
      parse_graph(
          R"({"directed": false, "vertices": ["a", "b"],
              "edges": [["a", "z"]]})"),
      IoError);
  CHECK_THROWS_AS(
      parse_graph(
          R"({"directed": false, "vertices": ["a", "b"],
              "edges": [["a", "a"]]})"),
      IoError);
  // metadata that does not match the canonical construction
  CHECK_THROWS_AS(
      parse_graph(
          R"({"directed": false, "vertices": ["u", "v", "w"],
              "edges": [["u", "v"], ["v", "w"], ["w", "u"]],
              "theta_lengths": [1, 2]})"),
      IoError);
}

TEST_CASE("colorings round-trip against their graph") {
  const LabeledGraph g = build_path(3);
  const PackingColoring c{{1, 2, 1}};
  const std::string text = coloring_to_json(g, c);
  const PackingColoring back = parse_coloring(text, g);
  CHECK(back.colors == c.colors);
  CHECK(coloring_to_json(g, back) == text);
}

TEST_CASE("malformed coloring files raise input errors") {
  const LabeledGraph g = build_path(2);
  CHECK_THROWS_AS(parse_coloring("{}", g), IoError);
  CHECK_THROWS_AS(parse_coloring(R"({"colors": {"v0": 1}})", g), IoError);
  CHECK_THROWS_AS(
      parse_coloring(R"({"colors": {"v0": 1, "v1": 2, "zz": 1}})", g), IoError);
  CHECK_THROWS_AS(parse_coloring(R"({"colors": {"v0": 0, "v1": 2}})", g),
                  IoError);
  CHECK_THROWS_AS(parse_coloring(R"({"colors": {"v0": "x", "v1": 2}})", g),
                  IoError);
}

TEST_CASE("file helpers report the path on failure") {
  CHECK_THROWS_AS(read_text_file("/no/such/dir/file.json"), IoError);
  CHECK_THROWS_AS(write_text_file("/no/such/dir/file.json", "x"), IoError);

  const std::string path = "roundtrip_io_test.json";
  write_text_file(path, "hello\n");
  CHECK(read_text_file(path) == "hello\n");
}
