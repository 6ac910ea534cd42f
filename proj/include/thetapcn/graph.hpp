#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetapcn {

// Sorted multiset of path lengths of a generalized theta graph: two end
// vertices joined by p >= 2 internally disjoint paths.  At most one path may
// be a single edge, so after sorting l2 >= 2.
class ThetaSpec {
 public:
  explicit ThetaSpec(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int path_count() const { return static_cast<int>(lengths_.size()); }
  int count_of_length(int len) const;
  int count_at_least(int len) const;
  int vertex_count() const;
  int edge_count() const;

  bool operator==(const ThetaSpec& o) const { return lengths_ == o.lengths_; }

 private:
  std::vector<int> lengths_;
};

// End vertices and path lengths a graph carries when it was built as a theta.
struct ThetaMeta {
  std::vector<int> lengths;
  int u = 0;
  int v = 0;
};

// Simple undirected graph with string vertex labels and a fixed edge order.
// Immutable after construction; edge order is the canonical order used to
// index orientation bits.
class LabeledGraph {
 public:
  LabeledGraph(std::vector<std::string> labels,
               std::vector<std::pair<int, int>> edges,
               std::optional<ThetaMeta> theta = std::nullopt);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  int index_of(std::string_view label) const;  // throws if unknown
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::optional<ThetaMeta>& theta() const { return theta_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<ThetaMeta> theta_;
};

// An orientation of a LabeledGraph: forward[i] means edge i runs from its
// canonical first endpoint to its second.
class OrientedGraph {
 public:
  OrientedGraph(LabeledGraph base, std::vector<bool> forward);

  const LabeledGraph& base() const { return base_; }
  int vertex_count() const { return base_.vertex_count(); }
  int arc_count() const { return base_.edge_count(); }
  std::pair<int, int> arc(int i) const;  // (tail, head)
  const std::vector<bool>& forward_bits() const { return forward_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  bool is_source(int v) const { return in_[v].empty(); }
  bool is_sink(int v) const { return out_[v].empty(); }

 private:
  LabeledGraph base_;
  std::vector<bool> forward_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Symmetric all-pairs distance matrix with an explicit unreachable sentinel
// (larger than any finite distance, so it never constrains a color).
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = 1 << 20;

  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }
  int& at(int a, int b) { return d_[static_cast<size_t>(a) * n_ + b]; }
  int at(int a, int b) const { return d_[static_cast<size_t>(a) * n_ + b]; }
  bool reachable(int a, int b) const { return at(a, b) < kUnreachable; }

 private:
  int n_;
  std::vector<int> d_;
};

// Canonical constructions.  Theta vertices are labeled u, v, xi_j (path i,
// j-th internal vertex counted from u); edges run path by path from u to v.
LabeledGraph build_theta(const ThetaSpec& spec);
LabeledGraph build_path(int n);   // n >= 1 vertices, labels v0..v{n-1}
LabeledGraph build_cycle(int n);  // n >= 3 vertices

DistanceMatrix distance_matrix(const LabeledGraph& g);

// Weak directed distance: min of the two one-way directed distances.
DistanceMatrix weak_distance_matrix(const OrientedGraph& og);

// Orientation index m assigns edge i the direction bit (m >> (E-1-i)) & 1,
// so ascending m enumerates direction bit-strings in lexicographic order.
uint64_t orientation_count(const LabeledGraph& g);
OrientedGraph orient(const LabeledGraph& g, uint64_t index);
void enumerate_orientations(
    const LabeledGraph& g,
    const std::function<void(uint64_t, const OrientedGraph&)>& fn,
    int edge_cap = 24);

}  // namespace thetapcn
