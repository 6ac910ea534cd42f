#include "thetapcn/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace thetapcn {

namespace {

// Exact maximum independent set size over a bitmask conflict graph.
// Vertices of degree <= 1 inside the candidate set are taken greedily
// (always optimal); otherwise branch on a maximum-degree vertex.
int max_independent(const std::vector<uint64_t>& adj, uint64_t cand) {
  if (cand == 0) return 0;
  int branch_vertex = -1;
  int branch_degree = -1;
  for (uint64_t rest = cand; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    const uint64_t nb = adj[x] & cand;
    const int deg = std::popcount(nb);
    if (deg <= 1)
      return 1 + max_independent(adj, cand & ~((uint64_t{1} << x) | nb));
    if (deg > branch_degree) {
      branch_degree = deg;
      branch_vertex = x;
    }
  }
  const uint64_t bit = uint64_t{1} << branch_vertex;
  const int with_v =
      1 + max_independent(adj, cand & ~(bit | adj[branch_vertex]));
  const int without_v = max_independent(adj, cand & ~bit);
  return std::max(with_v, without_v);
}

class PackingSearch {
 public:
  PackingSearch(const DistanceMatrix& dm, const SolverConfig& cfg)
      : dm_(dm), cfg_(cfg), n_(dm.size()) {}

  SolveResult exists(int k) {
    k_ = k;
    SolveResult result;
    if (n_ == 0) {
      result.status = SolveStatus::kFound;
      result.coloring = PackingColoring{};
      return result;
    }

    build_order();
    build_neighborhoods();
    build_capacities();

    color_of_.assign(n_, 0);
    allowed_.assign(n_, (k_ >= 64 ? ~uint64_t{0} : (uint64_t{1} << k_) - 1));
    used_.assign(k_ + 1, 0);
    trail_.clear();
    nodes_ = 0;
    limit_hit_ = false;
    witness_.reset();

    const bool found = expand(0);
    result.nodes = nodes_;
    if (limit_hit_) {
      result.status = SolveStatus::kNodeLimit;
    } else if (found) {
      result.status = SolveStatus::kFound;
      result.coloring = std::move(witness_);
    } else {
      result.status = SolveStatus::kNone;
    }
    return result;
  }

 private:
  void build_order() {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    if (cfg_.vertex_order == VertexOrder::kIndex) return;
    std::vector<int> near_count(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int u = 0; u < n_; ++u)
        if (u != v && dm_.at(v, u) <= k_) ++near_count[v];
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (near_count[a] != near_count[b]) return near_count[a] > near_count[b];
      return a < b;
    });
  }

  // within_[c][v]: vertices at finite distance in [1, c] of v.
  void build_neighborhoods() {
    within_.assign(k_ + 1, {});
    for (int c = 1; c <= k_; ++c) {
      within_[c].assign(n_, {});
      for (int v = 0; v < n_; ++v)
        for (int u = 0; u < n_; ++u)
          if (u != v && dm_.at(v, u) <= c) within_[c][v].push_back(u);
    }
  }

  // caps_[c]: exact maximum size of a distance->c packing; color class c can
  // never exceed it, which gives a sound residual bound during search.
  void build_capacities() {
    caps_.assign(k_ + 1, n_);
    if (n_ > 64) {
      residual_ = static_cast<int64_t>(k_) * n_;
      return;
    }
    residual_ = 0;
    std::vector<uint64_t> adj(n_);
    const uint64_t all = n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    for (int c = 1; c <= k_; ++c) {
      for (int v = 0; v < n_; ++v) {
        uint64_t mask = 0;
        for (int u : within_[c][v]) mask |= uint64_t{1} << u;
        adj[v] = mask;
      }
      caps_[c] = max_independent(adj, all);
      residual_ += caps_[c];
    }
  }

  bool expand(int depth) {
    if (depth == n_) {
      witness_ = PackingColoring{color_of_};
      return true;
    }
    const int v = order_[depth];
    for (int c = 1; c <= k_; ++c) {
      if (!(allowed_[v] >> (c - 1) & 1)) continue;
      if (used_[c] + 1 > caps_[c]) continue;
      ++nodes_;
      if (cfg_.node_limit != 0 && nodes_ > cfg_.node_limit) {
        limit_hit_ = true;
        return false;
      }

      color_of_[v] = c;
      ++used_[c];
      --residual_;
      const size_t mark = trail_.size();
      bool viable = residual_ >= n_ - depth - 1;
      if (viable) {
        for (int u : within_[c][v]) {
          if (color_of_[u] != 0) continue;
          if (allowed_[u] >> (c - 1) & 1) {
            allowed_[u] &= ~(uint64_t{1} << (c - 1));
            trail_.push_back(u);
            if (allowed_[u] == 0) {
              viable = false;
              break;
            }
          }
        }
      }
      if (viable && expand(depth + 1)) return true;
      if (limit_hit_) return false;

      while (trail_.size() > mark) {
        allowed_[trail_.back()] |= uint64_t{1} << (c - 1);
        trail_.pop_back();
      }
      ++residual_;
      --used_[c];
      color_of_[v] = 0;
    }
    return false;
  }

  const DistanceMatrix& dm_;
  const SolverConfig& cfg_;
  int n_;
  int k_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<std::vector<int>>> within_;
  std::vector<int> caps_;
  int64_t residual_ = 0;
  std::vector<int> color_of_;
  std::vector<uint64_t> allowed_;
  std::vector<int> used_;
  std::vector<int> trail_;
  uint64_t nodes_ = 0;
  bool limit_hit_ = false;
  std::optional<PackingColoring> witness_;
};

}  // namespace

SolveResult exists_k_coloring(const DistanceMatrix& dm, int k,
                              const SolverConfig& cfg) {
  if (k < 1) throw std::invalid_argument("color budget must be positive");
  if (k > 62) throw std::invalid_argument("color budget too large");
  PackingSearch search(dm, cfg);
  return search.exists(k);
}

PcnResult pcn_exact(const DistanceMatrix& dm, const SolverConfig& cfg) {
  PcnResult result;
  if (dm.size() == 0) return result;
  const int cap = cfg.max_k > 0 ? cfg.max_k : dm.size();
  PackingSearch search(dm, cfg);
  for (int k = 1; k <= cap; ++k) {
    SolveResult r = search.exists(k);
    result.nodes += r.nodes;
    if (r.status == SolveStatus::kNodeLimit)
      throw NodeLimitError("packing search exceeded the node limit");
    if (r.status == SolveStatus::kFound) {
      result.k = k;
      result.coloring = std::move(*r.coloring);
      return result;
    }
  }
  throw std::runtime_error("color budget exhausted without a coloring");
}

}  // namespace thetapcn
