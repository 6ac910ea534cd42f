#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "thetapcn/graph.hpp"
#include "thetapcn/oriented.hpp"
#include "thetapcn/solver.hpp"
#include "thetapcn/verifier.hpp"

using namespace thetapcn;

TEST_CASE("the eight length-3 rows are distinct and self-consistent") {
  const auto& rows = length3_rows();
  std::set<std::array<bool, 3>> seen;
  for (const auto& row : rows) {
    CHECK(seen.insert(row.toward_v).second);
    CHECK(row.x1 >= 1);
    CHECK(row.x2 >= 1);
    CHECK(row.x1 != row.x2);
  }
  CHECK(seen.size() == 8);

  // all arcs toward v: a one-way street, interiors take 1 and 2
  CHECK(rows[0].toward_v == std::array<bool, 3>{true, true, true});
  CHECK(rows[0].x1 == 1);
  CHECK(rows[0].x2 == 2);
  // all arcs toward u: interiors take 2 and 1
  CHECK(rows[7].toward_v == std::array<bool, 3>{false, false, false});
  CHECK(rows[7].x1 == 2);
  CHECK(rows[7].x2 == 1);
}

TEST_CASE("five colors suffice for every orientation of a small theta") {
  const LabeledGraph g = build_theta(ThetaSpec({2, 4, 4}));
  enumerate_orientations(g, [&](uint64_t, const OrientedGraph& og) {
    const PackingColoring c = color_oriented_theta(og);
    CHECK(c.color_count() <= 5);
    CHECK(verify(weak_distance_matrix(og), c).valid);
  });
}

TEST_CASE("length-3 paths are colored by their arc pattern") {
  const LabeledGraph g = build_theta(ThetaSpec({3, 3, 3, 3}));
  enumerate_orientations(g, [&](uint64_t m, const OrientedGraph& og) {
    if (m % 7 != 0) return;  // spot-check a spread of orientations
    const PackingColoring c = color_oriented_theta(og);
    CHECK(c.color_count() <= 5);
    CHECK(verify(weak_distance_matrix(og), c).valid);
  });
}

TEST_CASE("the reference five-color orientation") {
  const OrientedGraph og = build_theta0();
  CHECK(og.vertex_count() == 16);
  CHECK(og.arc_count() == 20);
  REQUIRE(og.base().theta().has_value());
  CHECK(og.base().theta()->lengths == std::vector<int>{2, 2, 3, 3, 5, 5});

  const DistanceMatrix wd = weak_distance_matrix(og);
  const int u = og.base().index_of("u");
  const int v = og.base().index_of("v");
  CHECK(wd.at(u, v) == 2);

  // the construction colors it with five colors
  const PackingColoring c = color_oriented_theta(og);
  CHECK(c.color_count() == 5);
  CHECK(verify(wd, c).valid);
}

TEST_CASE("scan bounds are validated") {
  CHECK_THROWS_AS(conjecture_scan({3, 4, 3, 24}), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan({4, 4, 1, 24}), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_scan({4, 5, 3, 10}), std::invalid_argument);

  const ScanReport empty = conjecture_scan({5, 4, 3, 24});
  CHECK(empty.specs.empty());
  CHECK(empty.orientations == 0);
  CHECK(empty.hits.empty());
}

TEST_CASE("a tiny scan is exhaustive and deterministic") {
  const ScanConfig config{4, 4, 2, 24};
  const ScanReport report = conjecture_scan(config);
  REQUIRE(report.specs.size() == 1);
  CHECK(report.specs[0].lengths == std::vector<int>{4, 4});
  CHECK(report.specs[0].pcn_by_orientation.size() == 256);
  CHECK(report.orientations == 256);
  CHECK(report.hits.empty());  // orientations of an 8-cycle never need five

  // values agree with the exact solver on a sample
  const LabeledGraph g = build_theta(ThetaSpec({4, 4}));
  for (uint64_t m : {uint64_t{0}, uint64_t{85}, uint64_t{255}}) {
    const OrientedGraph og = orient(g, m);
    CHECK(report.specs[0].pcn_by_orientation[m] ==
          pcn_exact(weak_distance_matrix(og)).k);
  }

  const ScanReport again = conjecture_scan(config);
  CHECK(report.to_text() == again.to_text());
  CHECK(report.to_text().find("lengths=4,4") != std::string::npos);
}
