#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "thetapcn/graph.hpp"
#include "thetapcn/verifier.hpp"

namespace thetapcn {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsed graph file: {"directed": bool, "vertices": ["u", ...], "edges":
// [["u", "x1_1"], ...]} where each edge pair reads (tail, head) when the
// graph is directed.  An optional "theta_lengths" array asserts the graph is
// the canonical theta construction for those lengths (same labels, same edge
// order up to per-edge direction); the loaded graph then carries the theta
// metadata, with direction bits relative to the canonical u-to-v edge order.
struct GraphDocument {
  bool directed = false;
  LabeledGraph graph;
  std::vector<bool> forward;  // per edge; all true when undirected

  OrientedGraph oriented() const { return OrientedGraph(graph, forward); }
};

GraphDocument parse_graph(const std::string& text);

std::string graph_to_json(const LabeledGraph& g);
std::string graph_to_json(const OrientedGraph& og);

// Coloring file: {"colors": {"u": 4, ...}}, exactly one positive color per
// vertex of the graph it is checked against.
PackingColoring parse_coloring(const std::string& text, const LabeledGraph& g);
std::string coloring_to_json(const LabeledGraph& g, const PackingColoring& c);

// Whole-file helpers; IoError with the path on any failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace thetapcn
