#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "instances.hpp"
#include "posets.hpp"
#include "smale/error.hpp"

using namespace smale;
using namespace smale::testing;

TEST_CASE("sphere cycles glue into two boundary cycles of length 2") {
  const FiniteOrder d = diamond();
  const CycleAssignment a = sphere_cycles(d);
  const GluingResult g = glue_bands(a, d);
  CHECK(g.gluing.pairs.size() == 2);
  CHECK(boundary_profile(g.boundaries.at(d.at("s1"))) == std::vector<std::size_t>{2});
  CHECK(boundary_profile(g.boundaries.at(d.at("s2"))) == std::vector<std::size_t>{2});
  const BoundaryReport r = verify_boundary_cycles(g.gluing, g.boundaries, a, d);
  CHECK(r.passed);
}

TEST_CASE("torus cycles glue into one boundary cycle of length 4 per saddle") {
  const FiniteOrder d = diamond();
  const CycleAssignment a = torus_cycles(d);
  const GluingResult g = glue_bands(a, d);
  CHECK(g.gluing.pairs.size() == 4);
  CHECK(boundary_profile(g.boundaries.at(d.at("s1"))) == std::vector<std::size_t>{4});
  CHECK(boundary_profile(g.boundaries.at(d.at("s2"))) == std::vector<std::size_t>{4});
  CHECK(verify_boundary_cycles(g.gluing, g.boundaries, a, d).passed);
}

TEST_CASE("the drawn torus gluing traces the listed boundary cycle of s2") {
  const FiniteOrder d = diamond();
  const CycleAssignment a = torus_cycles(d);
  const ElementId w = d.at("omega"), al = d.at("alpha");
  BandGluing drawn;
  drawn.pairs = {{{w, 0}, {al, 0}}, {{w, 1}, {al, 3}}, {{w, 2}, {al, 2}}, {{w, 3}, {al, 1}}};
  const BoundaryCycles traced = trace_boundary_cycles(a, d, drawn);
  const auto& s2 = traced.at(d.at("s2"));
  REQUIRE(s2.size() == 1);
  const std::vector<BandRef> expected{{w, 0}, {al, 0}, {al, 1}, {w, 3}, {w, 2}, {al, 2}, {al, 3}, {w, 1}, {w, 0}};
  CHECK(s2[0].sequence == expected);
  CHECK(boundary_profile(traced.at(d.at("s1"))) == std::vector<std::size_t>{4});
  CHECK(verify_boundary_cycles(drawn, traced, a, d).passed);
}

TEST_CASE("unbalanced cycles are refused") {
  const FiniteOrder d = diamond();
  CycleAssignment a = sphere_cycles(d);
  a.cycles[d.at("omega")] = torus_cycles(d).at(d.at("omega"));
  CHECK_THROWS_AS(glue_bands(a, d), Error);
  try {
    glue_bands(a, d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StarViolated);
  }
}

TEST_CASE("matching strategies parse and both satisfy the axioms") {
  CHECK(parse_matching_strategy("first-fit") == MatchingStrategy::FirstFit);
  CHECK(parse_matching_strategy("last-fit") == MatchingStrategy::LastFit);
  CHECK_FALSE(parse_matching_strategy("best-fit"));
  const FiniteOrder d = diamond();
  const CycleAssignment a = balance_cycles(build_initial_cycles(d), d).assignment;
  for (MatchingStrategy s : {MatchingStrategy::FirstFit, MatchingStrategy::LastFit}) {
    const GluingResult g = glue_bands(a, d, s);
    CHECK(verify_boundary_cycles(g.gluing, g.boundaries, a, d).passed);
    CHECK(trace_boundary_cycles(a, d, g.gluing) == g.boundaries);
  }
}

TEST_CASE("verification catches a tampered gluing") {
  const FiniteOrder d = diamond();
  const CycleAssignment a = torus_cycles(d);
  GluingResult g = glue_bands(a, d);
  std::swap(g.gluing.pairs[0].repeller_band, g.gluing.pairs[1].repeller_band);
  CHECK_FALSE(verify_boundary_cycles(g.gluing, g.boundaries, a, d).passed);
}

TEST_CASE("E-identity and partition on random orders") {
  std::mt19937 rng(17);
  int exercised = 0;
  while (exercised < 150) {
    FiniteOrder o;
    if (!realizable_shape(random_order_spec(rng, 6, 0.45), &o)) continue;
    o = o.without_saddle_relations();
    const CycleAssignment a = balance_cycles(build_initial_cycles(o), o).assignment;
    for (MatchingStrategy s : {MatchingStrategy::FirstFit, MatchingStrategy::LastFit}) {
      const GluingResult g = glue_bands(a, o, s);
      CHECK(2 * g.gluing.pairs.size() == a.total_bands());
      const BoundaryReport r = verify_boundary_cycles(g.gluing, g.boundaries, a, o);
      CHECK_MESSAGE(r.passed, (r.violations.empty() ? std::string() : r.violations.front()));
      std::size_t total = 0;
      for (const auto& [s2, cycles] : g.boundaries) {
        for (const auto& c : cycles) total += c.length();
      }
      CHECK(total == a.total_bands());
    }
    ++exercised;
  }
}

TEST_CASE("glue_bands picks an axiom-satisfying matching on every small diamond instance") {
  const FiniteOrder d = diamond();
  const auto instances = balanced_assignments(d, 8);
  CHECK(instances.size() >= 2);
  for (const auto& a : instances) {
    const auto valid = axiom_satisfying_matchings(a, d);
    for (MatchingStrategy s : {MatchingStrategy::FirstFit, MatchingStrategy::LastFit}) {
      const GluingResult g = glue_bands(a, d, s);
      CHECK(std::find(valid.begin(), valid.end(), g.gluing) != valid.end());
    }
  }
}
