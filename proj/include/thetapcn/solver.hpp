#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "thetapcn/graph.hpp"
#include "thetapcn/verifier.hpp"

namespace thetapcn {

enum class VertexOrder {
  kMostConstrained,  // decreasing count of vertices within distance k
  kIndex,
};

struct SolverConfig {
  int max_k = 0;             // cap on colors tried by pcn_exact; 0 = vertex count
  VertexOrder vertex_order = VertexOrder::kMostConstrained;
  uint64_t node_limit = 0;   // search-node cap; 0 = unlimited
};

enum class SolveStatus {
  kFound,      // witness coloring attached
  kNone,       // exhaustive proof that no k-coloring exists
  kNodeLimit,  // search aborted: says nothing about existence
};

struct SolveResult {
  SolveStatus status = SolveStatus::kNone;
  std::optional<PackingColoring> coloring;
  uint64_t nodes = 0;
};

class NodeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive backtracking search for a packing k-coloring over an explicit
// distance matrix (undirected or weak-directed).  Deterministic: fixed vertex
// order, colors tried in increasing order, so the witness is reproducible.
SolveResult exists_k_coloring(const DistanceMatrix& dm, int k,
                              const SolverConfig& cfg = {});

struct PcnResult {
  int k = 0;
  PackingColoring coloring;
  uint64_t nodes = 0;
};

// Smallest k admitting a packing k-coloring, with witness.  Throws
// NodeLimitError if the node cap interrupts any of the searches.
PcnResult pcn_exact(const DistanceMatrix& dm, const SolverConfig& cfg = {});

}  // namespace thetapcn
