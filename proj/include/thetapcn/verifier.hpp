#pragma once

#include <algorithm>
#include <vector>

#include "thetapcn/graph.hpp"

namespace thetapcn {

// Total color assignment, indexed by vertex; colors are positive integers.
struct PackingColoring {
  std::vector<int> colors;

  int color_count() const {
    return colors.empty() ? 0
                          : *std::max_element(colors.begin(), colors.end());
  }
};

// One broken pair: both endpoints carry `color` but are only `distance` apart.
struct Violation {
  int a = 0;
  int b = 0;
  int color = 0;
  int distance = 0;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks the packing condition: equal colors i must be more than i apart.
// Unreachable pairs never conflict.  Violations are listed in increasing
// (a, b) index order; fail_fast stops at the first one.
VerificationReport verify(const DistanceMatrix& dm,
                          const PackingColoring& coloring,
                          bool fail_fast = false);

// Structural test for packing chromatic number exactly 2 of an orientation:
// the underlying graph is bipartite and some part of the bipartition consists
// solely of sources or sinks.
bool check_pcn2_oriented(const OrientedGraph& og);

}  // namespace thetapcn
