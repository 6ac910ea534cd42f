#include "thetapcn/formulas.hpp"

#include <queue>
#include <stdexcept>

#include "thetapcn/verifier.hpp"

namespace thetapcn {

namespace {

bool connected(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        q.push(y);
      }
    }
  }
  return reached == n;
}

bool is_path_graph(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    const auto deg = g.neighbors(v).size();
    if (deg > 2) return false;
    if (deg == 1) ++leaves;
  }
  return leaves == 2 && connected(g);
}

bool is_cycle_graph(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v).size() != 2) return false;
  return connected(g);
}

bool is_directed_cycle(const OrientedGraph& og) {
  for (int v = 0; v < og.vertex_count(); ++v)
    if (og.out_neighbors(v).size() != 1) return false;
  return true;
}

}  // namespace

std::string to_string(ConditionLabel label) {
  switch (label) {
    case ConditionLabel::kA: return "A";
    case ConditionLabel::kB: return "B";
    case ConditionLabel::kC: return "C";
    case ConditionLabel::kD: return "D";
    case ConditionLabel::kE: return "E";
    case ConditionLabel::kF: return "F";
    case ConditionLabel::kG: return "G";
    case ConditionLabel::kH: return "H";
    case ConditionLabel::kI: return "I";
    case ConditionLabel::kJ: return "J";
    case ConditionLabel::kK: return "K";
    case ConditionLabel::kL: return "L";
    case ConditionLabel::kM: return "M";
    case ConditionLabel::kN: return "N";
    case ConditionLabel::kPcn3I: return "PCN3_I";
    case ConditionLabel::kPcn3II: return "PCN3_II";
    case ConditionLabel::kN3Dominated: return "N3_DOMINATED";
    case ConditionLabel::kCycleCase: return "CYCLE_CASE";
    case ConditionLabel::kUpperBound: return "UPPER_BOUND";
  }
  throw std::invalid_argument("unknown condition label");
}

CountProfile::CountProfile(const ThetaSpec& spec) {
  paths = spec.path_count();
  for (int len : spec.lengths()) {
    if (len >= 1 && len <= 8) ++n[len];
    if (len >= 3) ++at_least_3;
  }
}

int path_pcn(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  if (n == 1) return 1;
  if (n <= 3) return 2;
  return 3;
}

int cycle_pcn(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  return (n == 3 || n % 4 == 0) ? 3 : 4;
}

int oriented_path_pcn(const OrientedGraph& og) {
  if (!is_path_graph(og.base()))
    throw std::invalid_argument("underlying graph is not a path");
  return check_pcn2_oriented(og) ? 2 : 3;
}

int oriented_cycle_pcn(const OrientedGraph& og) {
  if (!is_cycle_graph(og.base()))
    throw std::invalid_argument("underlying graph is not a cycle");
  if (check_pcn2_oriented(og)) return 2;
  const int n = og.vertex_count();
  if (is_directed_cycle(og) && n >= 5 && n % 4 != 0) return 4;
  return 3;
}

std::optional<ConditionLabel> pcn3_holds(const ThetaSpec& spec) {
  const auto& lens = spec.lengths();
  bool one_and_twos = lens[0] == 1;
  for (size_t i = 1; i < lens.size(); ++i)
    if (lens[i] != 2) one_and_twos = false;
  if (one_and_twos) return ConditionLabel::kPcn3I;

  bool all_pairs = true;
  for (size_t i = 0; i + 1 < lens.size() && all_pairs; ++i)
    for (size_t j = i + 1; j < lens.size() && all_pairs; ++j)
      if ((lens[i] + lens[j]) % 4 != 0) all_pairs = false;
  if (all_pairs) return ConditionLabel::kPcn3II;
  return std::nullopt;
}

bool condition_holds(ConditionLabel label, const ThetaSpec& spec) {
  const CountProfile c(spec);
  const auto& n = c.n;
  switch (label) {
    case ConditionLabel::kA:
      return n[1] == 0 && n[2] == 0 && n[3] == 0 && n[4] == 0;
    case ConditionLabel::kB:
      return n[1] == 0 && n[2] == 0 && n[3] == 0 && n[5] <= 2 &&
             n[5] + n[6] <= 4;
    case ConditionLabel::kC:
      return n[1] == 0 && n[2] == 0 && n[3] == 0 && n[7] <= 1;
    case ConditionLabel::kD:
      return n[1] == 0 && n[2] == 0 && n[3] == 0 && n[5] + n[6] + n[7] <= 2;
    case ConditionLabel::kE:
      return n[1] == 0 && n[2] == 0 && n[3] <= 1 && n[5] == 0 && n[6] == 0 &&
             n[7] == 0;
    case ConditionLabel::kF:
      return n[1] == 0 && n[2] == 0 && n[3] <= 1 && n[4] == 0 &&
             n[7] + n[8] <= 1;
    case ConditionLabel::kG:
      return n[1] == 0 && n[3] == 0 && n[4] == 0 && n[7] <= 1 && n[8] == 0;
    case ConditionLabel::kH:
      // The n[2] == 0 guard is required: with paths of length 2 present the
      // end vertices are distance 2 apart, which breaks the (3,4)-ended
      // construction as soon as a length-5 path occurs (e.g. lengths
      // 2,3,3,5 admit no packing 4-coloring).
      return n[1] == 0 && n[3] <= 2 &&
             (n[5] == 0 || (n[5] + n[6] <= 1 && n[2] == 0));
    case ConditionLabel::kI:
      return n[1] == 0 && n[3] + n[4] + n[5] <= 1;
    case ConditionLabel::kJ:
      return n[1] <= 1 && n[3] <= 2 && n[5] == 0 && n[6] == 0;
    case ConditionLabel::kK:
      return n[1] <= 1 && n[3] == 0 && n[7] == 0;
    case ConditionLabel::kL:
      return n[1] <= 1 && n[3] == 0 && n[4] == 0 && n[7] <= 1 && n[8] == 0;
    case ConditionLabel::kM:
      return n[1] <= 1 && n[3] <= 1 && n[4] == 0 && n[7] == 0 && n[8] == 0;
    case ConditionLabel::kN:
      return n[1] <= 1 && c.at_least_3 <= 1;
    default:
      throw std::invalid_argument("condition_holds expects one of A..N");
  }
}

std::optional<ConditionLabel> pcn4_condition(const ThetaSpec& spec) {
  if (spec.path_count() < 3)
    throw std::invalid_argument("pcn4_condition requires at least three paths");
  static constexpr ConditionLabel kOrder[] = {
      ConditionLabel::kA, ConditionLabel::kB, ConditionLabel::kC,
      ConditionLabel::kD, ConditionLabel::kE, ConditionLabel::kF,
      ConditionLabel::kG, ConditionLabel::kH, ConditionLabel::kI,
      ConditionLabel::kJ, ConditionLabel::kK, ConditionLabel::kL,
      ConditionLabel::kM, ConditionLabel::kN,
  };
  for (ConditionLabel label : kOrder)
    if (condition_holds(label, spec)) return label;
  return std::nullopt;
}

PcnFormulaResult pcn_theta(const ThetaSpec& spec) {
  if (spec.path_count() == 2) {
    const int n = spec.lengths()[0] + spec.lengths()[1];
    return {cycle_pcn(n), ConditionLabel::kCycleCase};
  }
  const CountProfile c(spec);
  if (c.n[3] >= 3) return {c.n[3] + 2, ConditionLabel::kN3Dominated};
  if (auto three = pcn3_holds(spec)) return {3, *three};
  if (auto four = pcn4_condition(spec)) return {4, *four};
  return {5, ConditionLabel::kUpperBound};
}

}  // namespace thetapcn
