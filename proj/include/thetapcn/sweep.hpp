#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetapcn/graph.hpp"

namespace thetapcn {

// Every theta length multiset with min_p..max_p paths, lengths at most
// max_len, at most one length-1 path, and at most max_vertices vertices.
// Ordered by path count, then lexicographically.
std::vector<ThetaSpec> enumerate_theta_specs(int min_p, int max_p, int max_len,
                                             int max_vertices);

struct SweepRow {
  std::string key;     // length list, plus arc bits for per-orientation rows
  int formula_k = 0;   // closed-form value
  int oracle_k = 0;    // exact solver value
  std::string trace;   // rule that produced the formula value
  std::string status;  // "ok" or what went wrong
};

struct SweepReport {
  uint64_t instances = 0;
  uint64_t agreements = 0;
  uint64_t disagreements = 0;
  uint64_t repairs = 0;  // pattern-table repairs in effect during the run
  std::vector<SweepRow> rows;

  bool passed() const { return disagreements == 0; }
  std::string to_text() const;
};

struct UndirectedSweepConfig {
  int min_p = 2;
  int max_p = 5;
  int max_len = 8;
  int max_vertices = 24;
  bool check_certificates = true;
  bool check_lower_bound = true;  // prove no (k-1)-coloring exists
};

// Formula vs exact solver on every spec within the bounds.  Per spec:
// formula value equals the solver's; the certificate verifies with exactly k
// colors; no (k-1)-coloring exists; and a spec meeting a 3-color condition
// is never reported 4 even when a 4-color condition also matches.
SweepReport run_sweep_undirected(const UndirectedSweepConfig& config);

struct OrientedSweepConfig {
  int max_edges = 12;
  bool include_theta0 = true;  // append the 20-arc five-color example
};

// Every orientation of every theta spec within the edge budget: checks
// 2 <= pcn <= 5, pcn <= undirected pcn, agreement of the structural pcn=2
// test with the solver, and that color_oriented_theta verifies with at most
// five colors.  Rows aggregate per spec; failing orientations get their own
// row.
SweepReport run_sweep_oriented(const OrientedSweepConfig& config);

}  // namespace thetapcn
