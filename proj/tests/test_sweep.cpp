#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "thetapcn/formulas.hpp"
#include "thetapcn/graph.hpp"
#include "thetapcn/sweep.hpp"

using namespace thetapcn;

TEST_CASE("spec enumeration is complete, sorted, and budgeted") {
  const std::vector<ThetaSpec> specs = enumerate_theta_specs(2, 3, 4, 24);
  CHECK(specs.size() == 25);  // 9 pairs + 16 triples

  for (const ThetaSpec& s : specs) {
    const auto& lens = s.lengths();
    CHECK(std::is_sorted(lens.begin(), lens.end()));
    CHECK(s.count_of_length(1) <= 1);
    CHECK(s.vertex_count() <= 24);
    CHECK(lens.back() <= 4);
  }

  // ordered by path count, then lexicographically
  CHECK(specs.front().lengths() == std::vector<int>{1, 2});
  CHECK(specs[8].lengths() == std::vector<int>{4, 4});
  CHECK(specs[9].lengths() == std::vector<int>{1, 2, 2});
  CHECK(specs.back().lengths() == std::vector<int>{4, 4, 4});

  // the vertex budget prunes large multisets
  const std::vector<ThetaSpec> tight = enumerate_theta_specs(2, 2, 8, 9);
  for (const ThetaSpec& s : tight) CHECK(s.vertex_count() <= 9);
  CHECK(std::none_of(tight.begin(), tight.end(), [](const ThetaSpec& s) {
    return s.lengths() == std::vector<int>{8, 8};
  }));

  CHECK_THROWS_AS(enumerate_theta_specs(1, 2, 4, 24), std::invalid_argument);
}

TEST_CASE("small undirected sweep agrees with the solver everywhere") {
  UndirectedSweepConfig config;
  config.max_p = 3;
  config.max_len = 5;
  config.max_vertices = 14;
  const SweepReport report = run_sweep_undirected(config);

  CHECK(report.passed());
  CHECK(report.disagreements == 0);
  CHECK(report.instances == enumerate_theta_specs(2, 3, 5, 14).size());
  CHECK(report.agreements == report.instances);
  CHECK(report.repairs == 2);  // the two transcription fixes stay on record

  for (const SweepRow& row : report.rows) {
    CAPTURE(row.key);
    CHECK(row.status == "ok");
    CHECK(row.formula_k == row.oracle_k);
    CHECK(row.formula_k >= 3);
    CHECK(row.formula_k <= 5);
  }

  const std::string text = report.to_text();
  CHECK(text.find("disagreements: 0") != std::string::npos);
  CHECK(text == report.to_text());
}

TEST_CASE("two-path rows reduce to the cycle value") {
  UndirectedSweepConfig config;
  config.max_p = 2;
  config.max_len = 6;
  config.check_certificates = true;
  const SweepReport report = run_sweep_undirected(config);
  CHECK(report.passed());
  for (const SweepRow& row : report.rows) {
    CAPTURE(row.key);
    CHECK(row.trace == "CYCLE_CASE");
  }
}

TEST_CASE("small oriented sweep holds all four properties") {
  OrientedSweepConfig config;
  config.max_edges = 7;
  config.include_theta0 = false;
  const SweepReport report = run_sweep_oriented(config);

  CHECK(report.passed());
  CHECK(report.disagreements == 0);

  // aggregate rows, one per spec, each summarizing its orientations
  uint64_t expected_orientations = 0;
  const std::vector<ThetaSpec> specs = enumerate_theta_specs(2, 4, 6, 9);
  uint64_t spec_count = 0;
  for (const ThetaSpec& s : specs) {
    if (s.edge_count() > 7) continue;
    ++spec_count;
    expected_orientations += uint64_t{1} << s.edge_count();
  }
  CHECK(report.rows.size() == spec_count);
  CHECK(report.instances == expected_orientations);
  CHECK(report.to_text() == report.to_text());
}
