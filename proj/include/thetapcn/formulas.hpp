#pragma once

#include <array>
#include <optional>
#include <string>

#include "thetapcn/graph.hpp"

namespace thetapcn {

// Which rule produced a packing chromatic number (or which of the fourteen
// 4-colorability conditions A..N holds).  Order of A..N matters: when several
// conditions hold, the first one in this order is reported.
enum class ConditionLabel {
  kA,
  kB,
  kC,
  kD,
  kE,
  kF,
  kG,
  kH,
  kI,
  kJ,
  kK,
  kL,
  kM,
  kN,
  kPcn3I,         // one bridging edge, all other paths of length 2
  kPcn3II,        // every pair of path lengths sums to 0 mod 4
  kN3Dominated,   // at least three paths of length 3: pcn = n3 + 2
  kCycleCase,     // p = 2: the theta graph is a plain cycle
  kUpperBound,    // none of the 4-colorable conditions holds: pcn = 5
};

std::string to_string(ConditionLabel label);

// Multiplicities n_len of the path lengths of a theta spec.  Lengths above 8
// only matter for the conditions through their total, tracked separately.
struct CountProfile {
  std::array<int, 9> n{};  // n[len] for 1 <= len <= 8; n[0] unused
  int paths = 0;
  int at_least_3 = 0;  // number of paths of length >= 3

  explicit CountProfile(const ThetaSpec& spec);
};

// Packing chromatic number of the path on n vertices.
int path_pcn(int n);

// Packing chromatic number of the cycle on n >= 3 vertices.
int cycle_pcn(int n);

// Exact value for any orientation of a path on >= 2 vertices / cycle on >= 3
// vertices, judged under weak directed distance.  Throw std::invalid_argument
// when the underlying graph has the wrong shape.
int oriented_path_pcn(const OrientedGraph& og);
int oriented_cycle_pcn(const OrientedGraph& og);

// Which 3-colorability case holds, if any.
std::optional<ConditionLabel> pcn3_holds(const ThetaSpec& spec);

// First of the conditions A..N satisfied by the length multiset, or nullopt.
// Requires p >= 3.
std::optional<ConditionLabel> pcn4_condition(const ThetaSpec& spec);

// Whether one specific condition among A..N holds (independent of order).
bool condition_holds(ConditionLabel label, const ThetaSpec& spec);

struct PcnFormulaResult {
  int k = 0;
  ConditionLabel trace = ConditionLabel::kUpperBound;
};

// Closed-form packing chromatic number of an undirected theta graph, with the
// rule that decided it.  O(p).
PcnFormulaResult pcn_theta(const ThetaSpec& spec);

}  // namespace thetapcn
