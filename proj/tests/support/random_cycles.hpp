#pragma once

#include <random>

#include "smale/cycles.hpp"

namespace smale::testing {

// Splices a random admissible pair (k Y l)(l Y k), or a self-transition, after
// a random band ending at k. Keeps chaining and conditions 1 and 2; usually
// breaks the balance condition.
inline void inject_imbalance(CycleAssignment& assignment, const FiniteOrder& order, std::mt19937& rng) {
  std::vector<ElementId> owners;
  for (const auto& [owner, word] : assignment.cycles) {
    if (!word.empty()) owners.push_back(owner);
  }
  if (owners.empty()) return;
  const ElementId owner = owners[std::uniform_int_distribution<std::size_t>(0, owners.size() - 1)(rng)];
  CyclicWord& word = assignment.cycles[owner];
  const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, word.size() - 1)(rng);
  const ElementId k = word[pos].right;
  std::vector<Transition> choices;
  for (const auto& t : admissible_transitions(order, owner)) {
    if (t.left == k) choices.push_back(t);
  }
  if (choices.empty()) return;
  const Transition t = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
  std::vector<Transition> inserted{t};
  if (t.left != t.right) inserted.push_back({t.right, t.mediator, t.left});
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos + 1), inserted.begin(), inserted.end());
}

}  // namespace smale::testing
