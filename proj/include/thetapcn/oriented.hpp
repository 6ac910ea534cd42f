#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "thetapcn/graph.hpp"
#include "thetapcn/patterns.hpp"
#include "thetapcn/verifier.hpp"

namespace thetapcn {

// How to color the interior vertices (x1, x2) of a length-3 path whose ends
// carry colors 4 and 5, keyed by the three arc directions along u-x1-x2-v.
// toward_v[i] is true when the i-th edge of the path points from the u side
// to the v side.
struct Length3OrientationRow {
  std::array<bool, 3> toward_v{};
  int x1 = 0;
  int x2 = 0;
};

// The eight rows, one per arc pattern, in descending bit order (all-forward
// first).  Validated on first use: patterns are distinct and each row's path
// verifies in isolation under weak distance with ends colored 4 and 5.
const std::array<Length3OrientationRow, 8>& length3_rows();

// Packing coloring of an oriented theta graph with at most five colors,
// valid under weak directed distance.  Ends get colors 4 and 5; interior
// vertices of paths of length != 3 reuse the undirected five-color words
// (valid here because weak distances never drop below undirected ones);
// every length-3 path is colored from its orientation row.  The base graph
// must carry theta metadata (i.e. come from build_theta).  Throws
// CertificateError when the assembled coloring fails verification.
PackingColoring color_oriented_theta(const OrientedGraph& og);

// A fixed orientation of the theta graph with path lengths 2,2,3,3,5,5 whose
// weak-distance packing chromatic number is 5 — the largest possible for an
// oriented theta graph.  One path of each length runs u->v, the other v->u,
// so both ends have short routes in both directions.  16 vertices, 20 arcs,
// weak distance between the ends 2.
OrientedGraph build_theta0();

// Exhaustive search for orientations needing five colors among theta graphs
// all of whose path lengths lie in [min_len, max_len] with at most max_p
// paths.  min_len >= 4 (shorter paths are known to reach five colors).
struct ScanConfig {
  int min_len = 4;
  int max_len = 4;
  int max_p = 3;
  int orientation_cap = 24;  // largest edge count the scan may enumerate
};

struct ScanSpecResult {
  std::vector<int> lengths;
  std::vector<uint8_t> pcn_by_orientation;  // indexed by orientation bits
};

struct ScanHit {
  std::vector<int> lengths;
  std::string arcs;  // direction bits, edge 0 first; '1' = toward v
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanSpecResult> specs;
  std::vector<ScanHit> hits;  // orientations with packing chromatic number 5
  uint64_t orientations = 0;

  // One record per (spec, orientation), then the hit list and totals.
  std::string to_text() const;
};

// Deterministic: specs in lexicographic length order, orientations in
// increasing bit-vector order.  Throws std::invalid_argument when min_len < 4
// or the bounds admit a spec with more than orientation_cap edges.
ScanReport conjecture_scan(const ScanConfig& config);

}  // namespace thetapcn
