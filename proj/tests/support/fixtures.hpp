#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smale/cycles.hpp"
#include "smale/order.hpp"

namespace smale::testing {

inline FiniteOrder load(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> relations) {
  return FiniteOrder::load(OrderSpec{std::move(elements), std::move(relations)});
}

inline FiniteOrder three_chain() { return load({"A", "s", "w"}, {{"A", "s"}, {"s", "w"}}); }

inline FiniteOrder diamond() {
  return load({"alpha", "omega", "s1", "s2"}, {{"alpha", "s1"}, {"alpha", "s2"}, {"s1", "omega"}, {"s2", "omega"}});
}

inline FiniteOrder impossible_order() {
  return load({"A", "s1", "s2", "w1", "w2"}, {{"A", "s1"}, {"A", "s2"}, {"s1", "w1"}, {"s2", "w2"}});
}

inline FiniteOrder two_repellers() {
  return load({"a", "b", "s", "w1", "w2"}, {{"a", "s"}, {"b", "s"}, {"s", "w1"}, {"s", "w2"}});
}

inline FiniteOrder plug_order() {
  return load({"A", "B", "R1", "R2", "R3", "w1", "w2", "w3"},
              {{"R1", "A"}, {"R2", "A"}, {"R3", "A"}, {"A", "B"}, {"A", "w1"}, {"A", "w2"}, {"B", "w3"}});
}

inline FiniteOrder obstruction_left() {
  return load({"A", "s1", "s2", "t", "w1", "w2"}, {{"A", "s1"}, {"A", "s2"}, {"s1", "t"}, {"t", "w1"}, {"s2", "w2"}});
}

inline FiniteOrder obstruction_middle() {
  return load({"A", "A2", "B", "s1", "s2", "s3", "w2"},
              {{"A", "s1"}, {"A", "s2"}, {"s1", "B"}, {"s2", "w2"}, {"A2", "s3"}, {"s3", "B"}});
}

inline FiniteOrder obstruction_right() {
  return load({"A", "B", "s2", "w1", "w2", "w3", "w4"},
              {{"A", "B"}, {"A", "s2"}, {"B", "w1"}, {"B", "w2"}, {"B", "w3"}, {"s2", "w4"}});
}

using Named = std::vector<std::vector<std::string>>;

inline CyclicWord word(const FiniteOrder& order, const Named& transitions) {
  CyclicWord w;
  for (const auto& t : transitions) w.push_back({order.at(t[0]), order.at(t[1]), order.at(t[2])});
  return w;
}

inline CycleAssignment assignment(const FiniteOrder& order, const std::vector<std::pair<std::string, Named>>& cycles) {
  CycleAssignment a;
  for (const auto& [owner, transitions] : cycles) a.cycles[order.at(owner)] = word(order, transitions);
  return a;
}

// Sphere example: cycles of length 2 around both extremal points.
inline CycleAssignment sphere_cycles(const FiniteOrder& d) {
  return assignment(d, {{"omega", {{"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}}},
                        {"alpha", {{"s1", "omega", "s2"}, {"s2", "omega", "s1"}}}});
}

// Torus example: cycles of length 4.
inline CycleAssignment torus_cycles(const FiniteOrder& d) {
  return assignment(
      d, {{"omega", {{"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}, {"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}}},
          {"alpha", {{"s1", "omega", "s2"}, {"s2", "omega", "s1"}, {"s1", "omega", "s2"}, {"s2", "omega", "s1"}}}});
}

}  // namespace smale::testing
