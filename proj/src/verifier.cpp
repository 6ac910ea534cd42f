#include "thetapcn/verifier.hpp"

#include <stdexcept>

namespace thetapcn {

VerificationReport verify(const DistanceMatrix& dm,
                          const PackingColoring& coloring, bool fail_fast) {
  const int n = dm.size();
  if (static_cast<int>(coloring.colors.size()) != n)
    throw std::invalid_argument("coloring must assign every vertex a color");
  for (int c : coloring.colors)
    if (c < 1) throw std::invalid_argument("colors must be positive");

  VerificationReport report;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int c = coloring.colors[a];
      if (c != coloring.colors[b]) continue;
      if (dm.at(a, b) <= c) {
        report.valid = false;
        report.violations.push_back({a, b, c, dm.at(a, b)});
        if (fail_fast) return report;
      }
    }
  }
  return report;
}

bool check_pcn2_oriented(const OrientedGraph& og) {
  const LabeledGraph& g = og.base();
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack = {s}, component = {s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = side[x] ^ 1;
          stack.push_back(y);
          component.push_back(y);
        } else if (side[y] == side[x]) {
          return false;  // odd cycle: not bipartite
        }
      }
    }
    components.push_back(std::move(component));
  }
  // One global part must contain only sources or sinks.  Parts flip freely
  // per component, so each component must offer at least one such side.
  for (const auto& component : components) {
    bool side_ok[2] = {true, true};
    for (int v : component) {
      if (!og.is_source(v) && !og.is_sink(v)) side_ok[side[v]] = false;
    }
    if (!side_ok[0] && !side_ok[1]) return false;
  }
  return true;
}

}  // namespace thetapcn
