#include "thetapcn/oriented.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "thetapcn/solver.hpp"

namespace thetapcn {

namespace {

std::array<Length3OrientationRow, 8> make_rows() {
  // Interior colors by arc pattern; bits ordered (u-x1, x1-x2, x2-v),
  // all-forward first.
  return {{
      {{true, true, true}, 1, 2},
      {{true, true, false}, 3, 1},
      {{true, false, true}, 1, 2},
      {{true, false, false}, 3, 1},
      {{false, true, true}, 1, 2},
      {{false, true, false}, 2, 1},
      {{false, false, true}, 1, 2},
      {{false, false, false}, 2, 1},
  }};
}

void validate_rows(const std::array<Length3OrientationRow, 8>& rows) {
  std::array<bool, 8> seen{};
  const LabeledGraph path = build_path(4);
  for (const Length3OrientationRow& row : rows) {
    const int code =
        (row.toward_v[0] << 2) | (row.toward_v[1] << 1) | row.toward_v[2];
    if (seen[code])
      throw std::logic_error("duplicate length-3 orientation pattern");
    seen[code] = true;
    const OrientedGraph og(
        path, {row.toward_v[0], row.toward_v[1], row.toward_v[2]});
    const PackingColoring coloring{{4, row.x1, row.x2, 5}};
    if (!verify(weak_distance_matrix(og), coloring, true).valid)
      throw std::logic_error("length-3 orientation row fails in isolation");
  }
}

}  // namespace

const std::array<Length3OrientationRow, 8>& length3_rows() {
  static const std::array<Length3OrientationRow, 8> rows = [] {
    auto r = make_rows();
    validate_rows(r);
    return r;
  }();
  return rows;
}

PackingColoring color_oriented_theta(const OrientedGraph& og) {
  const auto& meta = og.base().theta();
  if (!meta)
    throw CertificateError("graph does not carry theta path metadata");
  const std::vector<int>& lengths = meta->lengths;
  std::vector<int> colors(og.vertex_count(), 0);
  colors[meta->u] = 4;
  colors[meta->v] = 5;

  const CaseTable& table = CaseTable::instance();
  int vbase = 2;
  int ebase = 0;
  for (int len : lengths) {
    if (len == 3) {
      const std::array<bool, 3> bits = {og.forward_bits()[ebase],
                                        og.forward_bits()[ebase + 1],
                                        og.forward_bits()[ebase + 2]};
      for (const Length3OrientationRow& row : length3_rows()) {
        if (row.toward_v != bits) continue;
        colors[vbase] = row.x1;
        colors[vbase + 1] = row.x2;
        break;
      }
    } else if (len > 1) {
      const CaseEntry& entry = table.at("u5/mod" + std::to_string(len % 4));
      const std::string word = entry.pattern.expand(len + 1);
      for (int j = 1; j < len; ++j) colors[vbase + j - 1] = word[j] - '0';
    }
    vbase += len - 1;
    ebase += len;
  }

  PackingColoring coloring{std::move(colors)};
  const auto report = verify(weak_distance_matrix(og), coloring, true);
  if (!report.valid) {
    const Violation& v = report.violations.front();
    throw CertificateError("oriented coloring fails verification: vertices " +
                           og.base().label(v.a) + " and " +
                           og.base().label(v.b) + " share color " +
                           std::to_string(v.color) + " at weak distance " +
                           std::to_string(v.distance));
  }
  return coloring;
}

OrientedGraph build_theta0() {
  const ThetaSpec spec({2, 2, 3, 3, 5, 5});
  std::vector<bool> forward;
  bool toward_v = true;
  for (int len : spec.lengths()) {
    forward.insert(forward.end(), static_cast<size_t>(len), toward_v);
    toward_v = !toward_v;  // paths of equal length alternate direction
  }
  return OrientedGraph(build_theta(spec), forward);
}

namespace {

void enumerate_lengths(int p, int min_len, int max_len, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == p) {
    fn(cur);
    return;
  }
  const int lo = cur.empty() ? min_len : cur.back();
  for (int len = lo; len <= max_len; ++len) {
    cur.push_back(len);
    enumerate_lengths(p, min_len, max_len, cur, fn);
    cur.pop_back();
  }
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

std::string lengths_to_string(const std::vector<int>& lengths) {
  std::string s;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(lengths[i]);
  }
  return s;
}

}  // namespace

ScanReport conjecture_scan(const ScanConfig& config) {
  if (config.min_len < 4)
    throw std::invalid_argument("scan requires paths of length at least 4");
  if (config.max_p < 2)
    throw std::invalid_argument("a theta graph needs at least two paths");
  ScanReport report;
  report.config = config;
  if (config.min_len > config.max_len) return report;
  if (config.max_len * config.max_p > config.orientation_cap)
    throw std::invalid_argument(
        "bounds admit more edges than the orientation cap");

  for (int p = 2; p <= config.max_p; ++p) {
    std::vector<int> cur;
    enumerate_lengths(p, config.min_len, config.max_len, cur,
                      [&](const std::vector<int>& lengths) {
      const ThetaSpec spec(lengths);
      const LabeledGraph g = build_theta(spec);
      ScanSpecResult result;
      result.lengths = lengths;
      result.pcn_by_orientation.reserve(orientation_count(g));
      enumerate_orientations(g, [&](uint64_t, const OrientedGraph& og) {
        const int k = pcn_exact(weak_distance_matrix(og)).k;
        result.pcn_by_orientation.push_back(static_cast<uint8_t>(k));
        ++report.orientations;
        if (k >= 5)
          report.hits.push_back({lengths, bits_to_string(og.forward_bits())});
      }, config.orientation_cap);
      report.specs.push_back(std::move(result));
    });
  }
  return report;
}

std::string ScanReport::to_text() const {
  std::ostringstream out;
  out << "conjecture scan: lengths in [" << config.min_len << ", "
      << config.max_len << "], paths <= " << config.max_p
      << ", orientation cap " << config.orientation_cap << "\n";
  for (const ScanSpecResult& spec : specs) {
    const std::string lens = lengths_to_string(spec.lengths);
    int edges = 0;
    for (int len : spec.lengths) edges += len;
    for (size_t m = 0; m < spec.pcn_by_orientation.size(); ++m) {
      std::string arcs(static_cast<size_t>(edges), '0');
      for (int i = 0; i < edges; ++i)
        if (m >> (edges - 1 - i) & 1) arcs[i] = '1';
      const int k = spec.pcn_by_orientation[m];
      out << "lengths=" << lens << " arcs=" << arcs << " pcn=" << k << " "
          << (k >= 5 ? "hit" : "no-hit") << "\n";
    }
  }
  out << "orientations: " << orientations << "\n";
  out << "five-color orientations: " << hits.size() << "\n";
  for (const ScanHit& hit : hits)
    out << "  lengths=" << lengths_to_string(hit.lengths) << " arcs="
        << hit.arcs << "\n";
  return out.str();
}

}  // namespace thetapcn
