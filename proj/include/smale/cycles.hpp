#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "smale/order.hpp"

namespace smale {

// One band slot in an extremal element's cycle: left --mediator--> right.
struct Transition {
  ElementId left{};
  ElementId mediator{};
  ElementId right{};

  auto operator<=>(const Transition&) const = default;
};

// Indexed from 0 (the explicit index origin); position i is followed by i+1 mod n.
using CyclicWord = std::vector<Transition>;

struct CycleAssignment {
  std::map<ElementId, CyclicWord> cycles;

  const CyclicWord& at(ElementId owner) const;
  std::size_t total_bands() const;
  bool operator==(const CycleAssignment&) const = default;
};

// All (left, mediator, right) with left, right saddles on the owner's side and
// the mediator an opposite extremal element comparable to both; includes
// left == right. Sorted. Throws NotExtremal.
std::vector<Transition> admissible_transitions(const FiniteOrder& order, ElementId owner);

// Structural checks for an assignment against an order: admissibility of
// every slot, chaining, coverage of saddles and mediators, condition 1 on
// distinct saddle pairs, condition 2. Returns human-readable violations.
std::vector<std::string> check_cycle_conditions(const FiniteOrder& order, const CycleAssignment& assignment);

// Eulerian circuit over the doubled transition multigraph of every extremal
// element. Throws ConnectivityFailure or NoMediator.
CycleAssignment build_initial_cycles(const FiniteOrder& order);

struct StarEntry {
  ElementId attractor{};
  ElementId repeller{};
  ElementId low{};
  ElementId high{};
  std::size_t attractor_forward = 0;   // low -> high around the attractor
  std::size_t attractor_backward = 0;  // high -> low around the attractor
  std::size_t repeller_forward = 0;
  std::size_t repeller_backward = 0;

  bool balanced() const {
    return attractor_forward == attractor_backward && attractor_forward == repeller_forward &&
           repeller_forward == repeller_backward;
  }
};

struct StarLedger {
  std::vector<StarEntry> entries;
  bool passed = true;

  const StarEntry* find(ElementId attractor, ElementId repeller, ElementId a, ElementId b) const;
};

// Counts of the four-way balance condition for every (attractor, repeller,
// saddle, saddle) group that is admissible or occurs in some cycle.
StarLedger verify_star(const CycleAssignment& assignment, const FiniteOrder& order);

struct Splice {
  ElementId owner{};
  std::size_t position = 0;  // index of the first inserted slot
  std::vector<Transition> inserted;
};

struct BalanceResult {
  CycleAssignment assignment;
  std::vector<Splice> splices;
  std::size_t initial_deficit = 0;
};

// Sum over groups of |count around attractor - count around repeller|.
std::size_t star_deficit(const CycleAssignment& assignment, const FiniteOrder& order);

// Splices transition pairs (or single self-transitions) into the deficient
// side until the balance condition holds. Throws PreconditionViolated when the
// input does not satisfy the cycle conditions.
BalanceResult balance_cycles(const CycleAssignment& assignment, const FiniteOrder& order);

// Start index of the lexicographically least rotation.
std::size_t least_rotation(const CyclicWord& word);

}  // namespace smale
