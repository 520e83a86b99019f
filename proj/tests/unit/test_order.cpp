#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "posets.hpp"
#include "smale/error.hpp"

using namespace smale;
using namespace smale::testing;

namespace {

ErrorCode load_error(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> relations) {
  try {
    load(std::move(elements), std::move(relations));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

std::vector<std::string> names(const FiniteOrder& o, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId id : ids) out.push_back(o.name(id));
  return out;
}

// Union-find oracle for connectivity of the comparability graph on a subset.
bool connected_by_union_find(const FiniteOrder& o, const std::vector<ElementId>& subset) {
  std::vector<std::size_t> parent(subset.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (o.comparable(subset[i], subset[j])) parent[find(i)] = find(j);
    }
  }
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("three-chain closes transitively and keeps only covers") {
  const FiniteOrder o = three_chain();
  CHECK(o.size() == 3);
  CHECK(o.greater(o.at("A"), o.at("w")));
  CHECK_FALSE(o.covers(o.at("A"), o.at("w")));
  REQUIRE(o.cover_pairs().size() == 2);
  CHECK(o.covers(o.at("A"), o.at("s")));
  CHECK(o.covers(o.at("s"), o.at("w")));
  CHECK(o.relation_pairs().size() == 3);
}

TEST_CASE("elements are ordered lexicographically") {
  const FiniteOrder o = load({"w", "s", "A"}, {{"A", "s"}, {"s", "w"}});
  CHECK(std::vector<std::string>(o.names().begin(), o.names().end()) == std::vector<std::string>{"A", "s", "w"});
}

TEST_CASE("impossibleorder is a valid five-element order") {
  const FiniteOrder o = impossible_order();
  CHECK(o.size() == 5);
  CHECK(o.cover_pairs().size() == 4);
}

TEST_CASE("load rejects malformed orders") {
  CHECK(load_error({"a", "b"}, {{"a", "b"}, {"b", "a"}}) == ErrorCode::CycleInRelation);
  CHECK(load_error({"a", "b"}, {{"a", "a"}}) == ErrorCode::CycleInRelation);
  CHECK(load_error({"a", "a", "b"}, {{"a", "b"}}) == ErrorCode::DuplicateElement);
  CHECK(load_error({"a", "b"}, {{"a", "c"}}) == ErrorCode::UnknownElementInRelation);
  CHECK(load_error({"a", "b", "c"}, {{"a", "b"}}) == ErrorCode::IsolatedElement);
}

TEST_CASE("classify assigns roles and generations") {
  const FiniteOrder o = three_chain();
  const RoleMap r = classify(o);
  CHECK(r.role(o.at("A")) == Role::Repeller);
  CHECK(r.role(o.at("s")) == Role::Saddle);
  CHECK(r.generation(o.at("s")) == 1);
  CHECK(r.role(o.at("w")) == Role::Attractor);
  CHECK(r.north_south.empty());

  const FiniteOrder ns = load({"a", "b"}, {{"a", "b"}});
  const RoleMap rn = classify(ns);
  CHECK(rn.role(ns.at("a")) == Role::Repeller);
  CHECK(rn.role(ns.at("b")) == Role::Attractor);
  CHECK(rn.with_role(Role::Saddle).empty());
  CHECK(rn.north_south.size() == 1);

  const FiniteOrder f = plug_order();
  const RoleMap rf = classify(f);
  CHECK(rf.role(f.at("A")) == Role::Saddle);
  CHECK(f.parents(f.at("A")).size() == 3);
  CHECK(f.children(f.at("A")).size() == 3);
  CHECK(rf.generation(f.at("A")) == 1);
  CHECK(rf.generation(f.at("B")) == 2);
}

TEST_CASE("connectivity on the worked example orders") {
  const FiniteOrder o = impossible_order();
  const ConnectivityReport r = check_connectivity(o);
  CHECK(r.entries.size() == 3);
  CHECK_FALSE(r.passed());
  const ConnectivityEntry* a = r.find(o.at("A"));
  REQUIRE(a);
  CHECK_FALSE(a->passed);
  REQUIRE(a->components.size() == 2);
  CHECK(names(o, a->components[0]) == std::vector<std::string>{"s1", "w1"});
  CHECK(names(o, a->components[1]) == std::vector<std::string>{"s2", "w2"});
  CHECK(r.find(o.at("w1"))->passed);
  CHECK(r.find(o.at("w2"))->passed);

  CHECK(check_connectivity(diamond()).passed());
  CHECK(check_connectivity(three_chain()).passed());
  CHECK(check_connectivity(load({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})).passed());
}

TEST_CASE("connectivity agrees with a union-find oracle on all orders up to 5 elements, random up to 7") {
  auto compare = [](const FiniteOrder& o) {
    const ConnectivityReport r = check_connectivity(o);
    std::size_t extremal = 0;
    for (ElementId id : o.elements()) {
      if (o.is_maximal(id)) {
        ++extremal;
        CHECK(r.find(id)->passed == connected_by_union_find(o, o.strictly_below(id)));
      }
      if (o.is_minimal(id)) {
        ++extremal;
        CHECK(r.find(id)->passed == connected_by_union_find(o, o.strictly_above(id)));
      }
    }
    CHECK(r.entries.size() == extremal);
  };
  for (std::size_t n = 2; n <= 5; ++n) {
    for_each_labelled_poset(n, [&](const Relation& gt) {
      FiniteOrder o;
      try {
        o = FiniteOrder::load(spec_of(gt));
      } catch (const Error&) {
        return;
      }
      compare(o);
    });
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    try {
      compare(FiniteOrder::load(random_order_spec(rng, 6 + i % 2, 0.35)));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IsolatedElement);
    }
  }
}

TEST_CASE("generation-1 saddles are those with only repellers above") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    FiniteOrder o;
    try {
      o = FiniteOrder::load(random_order_spec(rng, 7, 0.4));
    } catch (const Error&) {
      continue;
    }
    const RoleMap r = classify(o);
    for (ElementId s : r.with_role(Role::Saddle)) {
      bool only_repellers = true;
      for (ElementId x : o.strictly_above(s)) only_repellers = only_repellers && r.role(x) == Role::Repeller;
      CHECK((r.generation(s) == 1) == only_repellers);
    }
  }
}

TEST_CASE("relabelling yields isomorphic classifications") {
  const FiniteOrder a = load({"A", "s", "t", "w"}, {{"A", "s"}, {"A", "t"}, {"s", "w"}, {"t", "w"}});
  const FiniteOrder b = load({"z", "m", "n", "a"}, {{"z", "m"}, {"z", "n"}, {"m", "a"}, {"n", "a"}});
  auto role_counts = [](const FiniteOrder& o) {
    const RoleMap r = classify(o);
    return std::vector<std::size_t>{r.with_role(Role::Repeller).size(), r.with_role(Role::Saddle).size(),
                                    r.with_role(Role::Attractor).size()};
  };
  CHECK(role_counts(a) == role_counts(b));
  CHECK(check_connectivity(a).passed() == check_connectivity(b).passed());
}

TEST_CASE("stripping saddle relations keeps roles and extremal relations") {
  const FiniteOrder o = plug_order();
  const FiniteOrder s = o.without_saddle_relations();
  CHECK_FALSE(s.greater(s.at("A"), s.at("B")));
  CHECK(s.greater(s.at("A"), s.at("w3")));
  CHECK(s.greater(s.at("R1"), s.at("B")));
  const RoleMap ro = classify(o), rs = classify(s);
  CHECK(ro.roles == rs.roles);
}

TEST_CASE("exhaustive enumeration reproduces the poset counts") {
  std::size_t labelled = 0;
  for_each_labelled_poset(6, [&](const Relation&) { ++labelled; });
  CHECK(labelled == 4824);
  CHECK(unlabelled_posets(4).size() == 16);
  CHECK(unlabelled_posets(5).size() == 63);
}
