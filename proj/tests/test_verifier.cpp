#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "thetapcn/graph.hpp"
#include "thetapcn/verifier.hpp"

using namespace thetapcn;

TEST_CASE("packing condition on a path") {
  const DistanceMatrix dm = distance_matrix(build_path(4));
  CHECK(verify(dm, PackingColoring{{1, 2, 1, 3}}).valid);

  const VerificationReport bad = verify(dm, PackingColoring{{1, 1, 2, 1}});
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().a == 0);
  CHECK(bad.violations.front().b == 1);
  CHECK(bad.violations.front().color == 1);
  CHECK(bad.violations.front().distance == 1);

  // color 2 at distance exactly 2 is still too close
  const VerificationReport close2 = verify(dm, PackingColoring{{2, 1, 2, 1}});
  CHECK_FALSE(close2.valid);
  CHECK(close2.violations.front().distance == 2);
}

TEST_CASE("fail fast stops at the first broken pair") {
  const DistanceMatrix dm = distance_matrix(build_path(5));
  const VerificationReport all = verify(dm, PackingColoring{{1, 1, 1, 1, 1}});
  CHECK(all.violations.size() == 4);
  const VerificationReport first =
      verify(dm, PackingColoring{{1, 1, 1, 1, 1}}, true);
  CHECK(first.violations.size() == 1);
}

TEST_CASE("unreachable pairs never conflict") {
  const OrientedGraph og(build_path(3), {true, false});  // v0->v1<-v2
  const DistanceMatrix wd = weak_distance_matrix(og);
  // v0 and v2 share color 9 but have no directed route either way
  CHECK(verify(wd, PackingColoring{{9, 1, 9}}).valid);
}

TEST_CASE("verify rejects malformed colorings") {
  const DistanceMatrix dm = distance_matrix(build_path(3));
  CHECK_THROWS_AS(verify(dm, PackingColoring{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(verify(dm, PackingColoring{{1, 0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("color count is the largest color used") {
  CHECK(PackingColoring{}.color_count() == 0);
  CHECK(PackingColoring{{1, 3, 2}}.color_count() == 3);
}

TEST_CASE("two-color characterization of orientations") {
  const LabeledGraph p3 = build_path(3);
  // v0->v1->v2: ends are a source and a sink on the same side
  CHECK(check_pcn2_oriented(OrientedGraph(p3, {true, true})));
  // v0->v1<-v2: middle vertex is a sink, ends are sources
  CHECK(check_pcn2_oriented(OrientedGraph(p3, {true, false})));

  const LabeledGraph p4 = build_path(4);
  // v0->v1->v2->v3 leaves v1 (and v2) neither source nor sink on both sides
  CHECK_FALSE(check_pcn2_oriented(OrientedGraph(p4, {true, true, true})));
  // alternating arcs: one side is all sources, the other all sinks
  CHECK(check_pcn2_oriented(OrientedGraph(p4, {true, false, true})));

  // odd cycle: never two-colorable
  CHECK_FALSE(check_pcn2_oriented(OrientedGraph(build_cycle(3), {true, true, true})));

  // directed C4 is bipartite but no side is all sources or sinks
  CHECK_FALSE(check_pcn2_oriented(
      OrientedGraph(build_cycle(4), {true, true, true, true})));
  // alternating C4: sources and sinks alternate
  CHECK(check_pcn2_oriented(
      OrientedGraph(build_cycle(4), {true, false, true, false})));
}
