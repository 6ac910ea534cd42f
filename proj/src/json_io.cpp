#include "thetapcn/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace thetapcn {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  if (!j.is_object()) throw IoError("expected a JSON object");
  return j;
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  const json j = parse_document(text);

  bool directed = false;
  if (j.contains("directed")) {
    if (!j["directed"].is_boolean())
      throw IoError("\"directed\" must be a boolean");
    directed = j["directed"].get<bool>();
  }

  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw IoError("\"vertices\" must be an array of labels");
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  for (const json& v : j["vertices"]) {
    if (!v.is_string()) throw IoError("vertex labels must be strings");
    const std::string label = v.get<std::string>();
    if (!index.emplace(label, static_cast<int>(labels.size())).second)
      throw IoError("duplicate vertex label: " + label);
    labels.push_back(label);
  }

  if (!j.contains("edges") || !j["edges"].is_array())
    throw IoError("\"edges\" must be an array of label pairs");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw IoError("each edge must be a pair of vertex labels");
    const auto a = index.find(e[0].get<std::string>());
    const auto b = index.find(e[1].get<std::string>());
    if (a == index.end() || b == index.end())
      throw IoError("edge endpoint is not a listed vertex");
    edges.emplace_back(a->second, b->second);
  }

  std::vector<bool> forward(edges.size(), true);

  if (j.contains("theta_lengths")) {
    if (!j["theta_lengths"].is_array())
      throw IoError("\"theta_lengths\" must be an array of integers");
    std::vector<int> lengths;
    for (const json& l : j["theta_lengths"]) {
      if (!l.is_number_integer())
        throw IoError("\"theta_lengths\" must be an array of integers");
      lengths.push_back(l.get<int>());
    }
    try {
      const LabeledGraph canonical = build_theta(ThetaSpec(lengths));
      if (labels != canonical.labels())
        throw IoError(
            "vertices do not match the canonical theta construction");
      if (edges.size() != canonical.edges().size())
        throw IoError("edge count does not match the theta lengths");
      for (size_t i = 0; i < edges.size(); ++i) {
        const auto& c = canonical.edges()[i];
        if (edges[i] == c) {
          forward[i] = true;
        } else if (edges[i] == std::pair<int, int>{c.second, c.first}) {
          forward[i] = false;
        } else {
          throw IoError(
              "edge order does not match the canonical theta construction");
        }
      }
      return GraphDocument{directed,
                           LabeledGraph(std::move(labels), canonical.edges(),
                                        canonical.theta()),
                           std::move(forward)};
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  }

  try {
    return GraphDocument{directed,
                         LabeledGraph(std::move(labels), std::move(edges)),
                         std::move(forward)};
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
}

namespace {

json graph_object(const LabeledGraph& g, bool directed,
                  const std::vector<bool>* forward) {
  json j;
  j["directed"] = directed;
  j["vertices"] = json::array();
  for (const std::string& label : g.labels()) j["vertices"].push_back(label);
  j["edges"] = json::array();
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [a, b] = g.edges()[i];
    if (forward != nullptr && !(*forward)[i]) std::swap(a, b);
    j["edges"].push_back(json::array({g.label(a), g.label(b)}));
  }
  if (g.theta()) j["theta_lengths"] = g.theta()->lengths;
  return j;
}

}  // namespace

std::string graph_to_json(const LabeledGraph& g) {
  return graph_object(g, false, nullptr).dump(2) + "\n";
}

std::string graph_to_json(const OrientedGraph& og) {
  const std::vector<bool> forward = og.forward_bits();
  return graph_object(og.base(), true, &forward).dump(2) + "\n";
}

PackingColoring parse_coloring(const std::string& text,
                               const LabeledGraph& g) {
  const json j = parse_document(text);
  if (!j.contains("colors") || !j["colors"].is_object())
    throw IoError("\"colors\" must be an object mapping labels to colors");
  std::vector<int> colors(g.vertex_count(), 0);
  std::vector<bool> assigned(g.vertex_count(), false);
  for (const auto& [label, value] : j["colors"].items()) {
    int v = -1;
    try {
      v = g.index_of(label);
    } catch (const std::invalid_argument&) {
      throw IoError("color assigned to unknown vertex: " + label);
    }
    if (!value.is_number_integer() || value.get<int>() < 1)
      throw IoError("color of " + label + " must be a positive integer");
    if (assigned[v]) throw IoError("vertex colored twice: " + label);
    assigned[v] = true;
    colors[v] = value.get<int>();
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!assigned[v]) throw IoError("vertex has no color: " + g.label(v));
  return PackingColoring{std::move(colors)};
}

std::string coloring_to_json(const LabeledGraph& g,
                             const PackingColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count())
    throw IoError("coloring size does not match the graph");
  json j;
  j["colors"] = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    j["colors"][g.label(v)] = c.colors[v];
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace thetapcn
