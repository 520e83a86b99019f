#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "posets.hpp"
#include "smale/obstruction.hpp"
#include "smale/pipeline.hpp"

using namespace smale;
using namespace smale::testing;

TEST_CASE("rules on the three non-realizable obstruction orders") {
  const ViolationReport left = check_necessary(obstruction_left());
  CHECK(left.fires(Rule::Connectivity));
  CHECK(left.fires(Rule::ChainDepth));
  CHECK_FALSE(left.fires(Rule::R1));
  CHECK_FALSE(left.fires(Rule::R2));

  const ViolationReport middle = check_necessary(obstruction_middle());
  CHECK(middle.fires(Rule::R2));

  const ViolationReport right = check_necessary(obstruction_right());
  CHECK(right.fires(Rule::R1));
  const FiniteOrder r = obstruction_right();
  bool names_b = false;
  for (const auto& v : right.violations) {
    if (v.rule == Rule::R1) names_b = names_b || v.witnesses == std::vector<ElementId>{r.at("B")};
  }
  CHECK(names_b);
}

TEST_CASE("impossibleorder only fails connectivity") {
  const ViolationReport r = check_necessary(impossible_order());
  CHECK(r.fires(Rule::Connectivity));
  CHECK_FALSE(r.fires(Rule::R1));
  CHECK_FALSE(r.fires(Rule::R2));
  CHECK_FALSE(r.fires(Rule::ChainDepth));
}

TEST_CASE("orders passing connectivity have an empty report") {
  CHECK(check_necessary(diamond()).empty());
  CHECK(check_necessary(three_chain()).empty());
  CHECK(check_necessary(plug_order()).empty());
}

TEST_CASE("rules never fire on orders the pipeline realizes") {
  std::mt19937 rng(31);
  int realized = 0;
  for (int i = 0; i < 400; ++i) {
    FiniteOrder o;
    try {
      o = FiniteOrder::load(random_order_spec(rng, 6, 0.4));
    } catch (const std::exception&) {
      continue;
    }
    if (!classify(o).north_south.empty() || !check_connectivity(o).passed()) {
      CHECK(std::holds_alternative<Refusal>(realize(o)) == !check_connectivity(o).passed());
      continue;
    }
    if (std::holds_alternative<RealizationCertificate>(realize(o))) {
      ++realized;
      CHECK(check_necessary(o).empty());
    }
  }
  CHECK(realized > 50);
}
