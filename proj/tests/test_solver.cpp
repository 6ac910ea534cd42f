#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetapcn/graph.hpp"
#include "thetapcn/solver.hpp"
#include "thetapcn/verifier.hpp"

using namespace thetapcn;

TEST_CASE("paths need one, two, then three colors") {
  CHECK(pcn_exact(distance_matrix(build_path(1))).k == 1);
  CHECK(pcn_exact(distance_matrix(build_path(2))).k == 2);
  CHECK(pcn_exact(distance_matrix(build_path(3))).k == 2);
  CHECK(pcn_exact(distance_matrix(build_path(4))).k == 3);
  CHECK(pcn_exact(distance_matrix(build_path(16))).k == 3);
}

TEST_CASE("cycle values split by residue") {
  CHECK(pcn_exact(distance_matrix(build_cycle(3))).k == 3);
  CHECK(pcn_exact(distance_matrix(build_cycle(4))).k == 3);
  CHECK(pcn_exact(distance_matrix(build_cycle(5))).k == 4);
  CHECK(pcn_exact(distance_matrix(build_cycle(8))).k == 3);
  CHECK(pcn_exact(distance_matrix(build_cycle(11))).k == 4);
}

TEST_CASE("witnesses verify and failures are exhaustive") {
  const DistanceMatrix dm = distance_matrix(build_theta(ThetaSpec({3, 3, 3})));
  const SolveResult none = exists_k_coloring(dm, 4);
  CHECK(none.status == SolveStatus::kNone);
  CHECK_FALSE(none.coloring.has_value());

  const SolveResult found = exists_k_coloring(dm, 5);
  REQUIRE(found.status == SolveStatus::kFound);
  REQUIRE(found.coloring.has_value());
  CHECK(verify(dm, *found.coloring).valid);
  CHECK(found.coloring->color_count() <= 5);
}

TEST_CASE("search is deterministic") {
  const DistanceMatrix dm = distance_matrix(build_theta(ThetaSpec({2, 3, 4})));
  const PcnResult a = pcn_exact(dm);
  const PcnResult b = pcn_exact(dm);
  CHECK(a.k == b.k);
  CHECK(a.nodes == b.nodes);
  CHECK(a.coloring.colors == b.coloring.colors);
}

TEST_CASE("vertex orders agree on the value") {
  const DistanceMatrix dm = distance_matrix(build_theta(ThetaSpec({2, 2, 3})));
  SolverConfig by_index;
  by_index.vertex_order = VertexOrder::kIndex;
  CHECK(pcn_exact(dm).k == pcn_exact(dm, by_index).k);
}

TEST_CASE("node limit interrupts instead of answering") {
  const DistanceMatrix dm = distance_matrix(build_cycle(12));
  SolverConfig tight;
  tight.node_limit = 3;
  const SolveResult r = exists_k_coloring(dm, 3, tight);
  CHECK(r.status == SolveStatus::kNodeLimit);
  CHECK_THROWS_AS(pcn_exact(dm, tight), NodeLimitError);
}

TEST_CASE("color budget is validated") {
  const DistanceMatrix dm = distance_matrix(build_path(2));
  CHECK_THROWS_AS(exists_k_coloring(dm, 0), std::invalid_argument);
  CHECK_THROWS_AS(exists_k_coloring(dm, 63), std::invalid_argument);
  SolverConfig capped;
  capped.max_k = 1;
  CHECK_THROWS_AS(pcn_exact(dm, capped), std::runtime_error);
}

TEST_CASE("weak-distance instances solve the same way") {
  // a directed 4-cycle: the value drops to 3 because opposite vertices
  // stay two apart but color 1 still fits only on alternating vertices
  const OrientedGraph ring(build_cycle(4), {true, true, true, true});
  CHECK(pcn_exact(weak_distance_matrix(ring)).k == 3);

  // orientation with unreachable pairs: u->x<-v three times over
  const OrientedGraph star(build_theta(ThetaSpec({2, 2, 2})),
                           {true, false, true, false, true, false});
  CHECK(pcn_exact(weak_distance_matrix(star)).k == 2);
}
