#include "thetapcn/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace thetapcn {

ThetaSpec::ThetaSpec(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 2)
    throw std::invalid_argument("theta spec needs at least two paths");
  if (!std::is_sorted(lengths_.begin(), lengths_.end()))
    throw std::invalid_argument("theta spec lengths must be non-decreasing");
  if (lengths_.front() < 1)
    throw std::invalid_argument("theta spec lengths must be positive");
  if (lengths_[1] < 2)
    throw std::invalid_argument(
        "theta spec allows at most one path of length 1");
}

int ThetaSpec::count_of_length(int len) const {
  return static_cast<int>(
      std::count(lengths_.begin(), lengths_.end(), len));
}

int ThetaSpec::count_at_least(int len) const {
  return static_cast<int>(std::count_if(
      lengths_.begin(), lengths_.end(), [len](int l) { return l >= len; }));
}

int ThetaSpec::vertex_count() const {
  int n = 2;
  for (int l : lengths_) n += l - 1;
  return n;
}

int ThetaSpec::edge_count() const {
  int m = 0;
  for (int l : lengths_) m += l;
  return m;
}

LabeledGraph::LabeledGraph(std::vector<std::string> labels,
                           std::vector<std::pair<int, int>> edges,
                           std::optional<ThetaMeta> theta)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      theta_(std::move(theta)) {
  const int n = vertex_count();
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate vertex label: " + l);
  adjacency_.resize(n);
  std::unordered_set<int64_t> edge_keys;
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    const int64_t key =
        static_cast<int64_t>(std::min(a, b)) * n + std::max(a, b);
    if (!edge_keys.insert(key).second)
      throw std::invalid_argument("duplicate edge");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
}

int LabeledGraph::index_of(std::string_view label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown vertex label: " + std::string(label));
}

OrientedGraph::OrientedGraph(LabeledGraph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != base_.edge_count())
    throw std::invalid_argument("one direction bit per edge required");
  out_.resize(base_.vertex_count());
  in_.resize(base_.vertex_count());
  for (int i = 0; i < base_.edge_count(); ++i) {
    auto [tail, head] = arc(i);
    out_[tail].push_back(head);
    in_[head].push_back(tail);
  }
}

std::pair<int, int> OrientedGraph::arc(int i) const {
  const auto& e = base_.edges()[i];
  return forward_[i] ? e : std::pair<int, int>{e.second, e.first};
}

LabeledGraph build_theta(const ThetaSpec& spec) {
  std::vector<std::string> labels = {"u", "v"};
  std::vector<std::pair<int, int>> edges;
  const int u = 0, v = 1;
  for (int i = 0; i < spec.path_count(); ++i) {
    const int len = spec.lengths()[i];
    int prev = u;
    for (int j = 1; j < len; ++j) {
      labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
      const int cur = static_cast<int>(labels.size()) - 1;
      edges.emplace_back(prev, cur);
      prev = cur;
    }
    edges.emplace_back(prev, v);
  }
  ThetaMeta meta{spec.lengths(), u, v};
  return LabeledGraph(std::move(labels), std::move(edges), std::move(meta));
}

LabeledGraph build_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return LabeledGraph(std::move(labels), std::move(edges));
}

LabeledGraph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return LabeledGraph(std::move(labels), std::move(edges));
}

namespace {

void bfs_fill(const std::vector<std::vector<int>>& adj, int src,
              std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
  dist[src] = 0;
  std::deque<int> queue = {src};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (dist[y] == DistanceMatrix::kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

DistanceMatrix distance_matrix(const LabeledGraph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm(n);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    bfs_fill(adj, s, dist);
    for (int t = 0; t < n; ++t) dm.at(s, t) = dist[t];
  }
  return dm;
}

DistanceMatrix weak_distance_matrix(const OrientedGraph& og) {
  const int n = og.vertex_count();
  DistanceMatrix directed(n);
  std::vector<std::vector<int>> out(n);
  for (int v = 0; v < n; ++v) out[v] = og.out_neighbors(v);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    bfs_fill(out, s, dist);
    for (int t = 0; t < n; ++t) directed.at(s, t) = dist[t];
  }
  DistanceMatrix weak(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      weak.at(a, b) = std::min(directed.at(a, b), directed.at(b, a));
  return weak;
}

uint64_t orientation_count(const LabeledGraph& g) {
  if (g.edge_count() > 62)
    throw std::invalid_argument("too many edges to enumerate orientations");
  return uint64_t{1} << g.edge_count();
}

OrientedGraph orient(const LabeledGraph& g, uint64_t index) {
  const int m = g.edge_count();
  if (m > 62) throw std::invalid_argument("too many edges to index orientations");
  if (index >= (uint64_t{1} << m))
    throw std::invalid_argument("orientation index out of range");
  std::vector<bool> forward(m);
  for (int i = 0; i < m; ++i)
    forward[i] = (index >> (m - 1 - i)) & 1;
  return OrientedGraph(g, std::move(forward));
}

void enumerate_orientations(
    const LabeledGraph& g,
    const std::function<void(uint64_t, const OrientedGraph&)>& fn,
    int edge_cap) {
  if (g.edge_count() > edge_cap)
    throw std::invalid_argument("edge count exceeds orientation cap");
  const uint64_t total = orientation_count(g);
  for (uint64_t m = 0; m < total; ++m) fn(m, orient(g, m));
}

}  // namespace thetapcn
