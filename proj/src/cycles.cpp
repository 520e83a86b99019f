#include "smale/cycles.hpp"

#include <algorithm>
#include <set>

#include "smale/error.hpp"

namespace smale {

namespace {

bool is_extremal(const FiniteOrder& order, ElementId id) { return order.is_maximal(id) || order.is_minimal(id); }

// Saddles comparable to the owner, on its side.
std::vector<ElementId> related_saddles(const FiniteOrder& order, ElementId owner) {
  const auto side = order.is_minimal(owner) ? order.strictly_above(owner) : order.strictly_below(owner);
  std::vector<ElementId> out;
  for (ElementId x : side) {
    if (!is_extremal(order, x)) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> related_opposites(const FiniteOrder& order, ElementId owner) {
  const bool attractor = order.is_minimal(owner);
  const auto side = attractor ? order.strictly_above(owner) : order.strictly_below(owner);
  std::vector<ElementId> out;
  for (ElementId x : side) {
    if (attractor ? order.is_maximal(x) : order.is_minimal(x)) out.push_back(x);
  }
  return out;
}

std::size_t count(const CyclicWord& word, const Transition& t) {
  return static_cast<std::size_t>(std::count(word.begin(), word.end(), t));
}

struct GroupKey {
  ElementId attractor, repeller, low, high;
  auto operator<=>(const GroupKey&) const = default;
};

// Every (attractor, repeller, low <= high) group with an admissible
// transition or an occurrence in the assignment.
std::set<GroupKey> star_groups(const CycleAssignment& assignment, const FiniteOrder& order) {
  std::set<GroupKey> groups;
  auto add = [&](ElementId owner, const Transition& t) {
    const bool attractor = order.is_minimal(owner);
    const ElementId a = attractor ? owner : t.mediator;
    const ElementId r = attractor ? t.mediator : owner;
    groups.insert({a, r, std::min(t.left, t.right), std::max(t.left, t.right)});
  };
  for (ElementId id : order.elements()) {
    if (!is_extremal(order, id)) continue;
    for (const auto& t : admissible_transitions(order, id)) add(id, t);
  }
  for (const auto& [owner, word] : assignment.cycles) {
    for (const auto& t : word) add(owner, t);
  }
  return groups;
}

StarEntry tally(const CycleAssignment& assignment, const GroupKey& key) {
  StarEntry e;
  e.attractor = key.attractor;
  e.repeller = key.repeller;
  e.low = key.low;
  e.high = key.high;
  auto word_of = [&](ElementId owner) -> const CyclicWord* {
    auto it = assignment.cycles.find(owner);
    return it == assignment.cycles.end() ? nullptr : &it->second;
  };
  if (const auto* w = word_of(key.attractor)) {
    e.attractor_forward = count(*w, {key.low, key.repeller, key.high});
    e.attractor_backward = count(*w, {key.high, key.repeller, key.low});
  }
  if (const auto* w = word_of(key.repeller)) {
    e.repeller_forward = count(*w, {key.low, key.attractor, key.high});
    e.repeller_backward = count(*w, {key.high, key.attractor, key.low});
  }
  return e;
}

}  // namespace

const CyclicWord& CycleAssignment::at(ElementId owner) const {
  static const CyclicWord empty;
  auto it = cycles.find(owner);
  return it == cycles.end() ? empty : it->second;
}

std::size_t CycleAssignment::total_bands() const {
  std::size_t total = 0;
  for (const auto& [owner, word] : cycles) total += word.size();
  return total;
}

std::vector<Transition> admissible_transitions(const FiniteOrder& order, ElementId owner) {
  if (!is_extremal(order, owner)) raise(ErrorCode::NotExtremal, "'" + order.name(owner) + "' is a saddle");
  const bool attractor = order.is_minimal(owner);
  const auto saddles = related_saddles(order, owner);
  const auto opposites = related_opposites(order, owner);
  std::vector<Transition> out;
  for (ElementId k : saddles) {
    for (ElementId m : opposites) {
      const bool mk = attractor ? order.greater(m, k) : order.greater(k, m);
      if (!mk) continue;
      for (ElementId l : saddles) {
        const bool ml = attractor ? order.greater(m, l) : order.greater(l, m);
        if (ml) out.push_back({k, m, l});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> check_cycle_conditions(const FiniteOrder& order, const CycleAssignment& assignment) {
  std::vector<std::string> violations;
  auto label = [&](const Transition& t) {
    return order.name(t.left) + " -" + order.name(t.mediator) + "-> " + order.name(t.right);
  };

  for (const auto& [owner, word] : assignment.cycles) {
    if (index(owner) >= order.size() || !is_extremal(order, owner)) {
      violations.push_back("cycle owner is not extremal");
      continue;
    }
    const std::string& who = order.name(owner);
    const auto admissible = admissible_transitions(order, owner);
    for (const auto& t : word) {
      if (!std::binary_search(admissible.begin(), admissible.end(), t)) {
        violations.push_back(who + ": transition " + label(t) + " is not admissible");
      }
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i].right != word[(i + 1) % word.size()].left) {
        violations.push_back(who + ": slots " + std::to_string(i) + " and " +
                             std::to_string((i + 1) % word.size()) + " do not chain");
      }
    }
  }

  for (ElementId owner : order.elements()) {
    if (!is_extremal(order, owner)) continue;
    const auto admissible = admissible_transitions(order, owner);
    if (admissible.empty()) continue;
    const std::string& who = order.name(owner);
    const CyclicWord& word = assignment.at(owner);
    if (word.empty()) {
      violations.push_back(who + ": missing cycle");
      continue;
    }
    for (ElementId s : related_saddles(order, owner)) {
      const bool seen = std::any_of(word.begin(), word.end(), [&](const Transition& t) { return t.left == s; });
      if (!seen) violations.push_back(who + ": saddle " + order.name(s) + " absent from cycle");
    }
    std::set<ElementId> mediators;
    for (const auto& t : admissible) mediators.insert(t.mediator);
    for (ElementId m : mediators) {
      const bool seen = std::any_of(word.begin(), word.end(), [&](const Transition& t) { return t.mediator == m; });
      if (!seen) violations.push_back(who + ": mediator " + order.name(m) + " absent from cycle");
    }
    for (const auto& t : admissible) {
      if (t.left == t.right) continue;
      if (count(word, t) == 0) violations.push_back(who + ": condition 1 fails for " + label(t));
      if (t.left < t.right && count(word, t) != count(word, {t.right, t.mediator, t.left})) {
        violations.push_back(who + ": condition 2 fails for " + label(t));
      }
    }
  }
  return violations;
}

CycleAssignment build_initial_cycles(const FiniteOrder& order) {
  const auto connectivity = check_connectivity(order);
  if (!connectivity.passed()) {
    for (const auto& e : connectivity.entries) {
      if (!e.passed) raise(ErrorCode::ConnectivityFailure, "connectivity fails at '" + order.name(e.element) + "'");
    }
  }

  CycleAssignment assignment;
  for (ElementId owner : order.elements()) {
    if (!is_extremal(order, owner)) continue;
    const auto admissible = admissible_transitions(order, owner);
    if (admissible.empty()) continue;  // flagged north-south pair, no saddles

    for (ElementId m : related_opposites(order, owner)) {
      const bool mediates = std::any_of(admissible.begin(), admissible.end(),
                                        [&](const Transition& t) { return t.mediator == m; });
      if (!mediates) {
        raise(ErrorCode::NoMediator, "'" + order.name(m) + "' mediates no transition around '" +
                                         order.name(owner) + "'");
      }
    }

    const auto saddles = related_saddles(order, owner);
    auto slot = [&](ElementId s) {
      return static_cast<std::size_t>(std::lower_bound(saddles.begin(), saddles.end(), s) - saddles.begin());
    };

    // Doubled multigraph: each admissible transition and its reverse.
    std::vector<std::vector<Transition>> out(saddles.size());
    for (const auto& t : admissible) {
      out[slot(t.left)].push_back(t);
      out[slot(t.right)].push_back({t.right, t.mediator, t.left});
    }
    for (auto& edges : out) std::sort(edges.begin(), edges.end());

    std::vector<char> reached(saddles.size(), 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& t : out[v]) {
        const std::size_t w = slot(t.right);
        if (!reached[w]) {
          reached[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
      raise(ErrorCode::ConnectivityFailure, "transition graph around '" + order.name(owner) + "' is disconnected");
    }

    // Hierholzer.
    std::vector<std::size_t> next(saddles.size(), 0);
    std::vector<std::pair<std::size_t, const Transition*>> walk{{0, nullptr}};
    CyclicWord circuit;
    while (!walk.empty()) {
      const std::size_t v = walk.back().first;
      if (next[v] < out[v].size()) {
        const Transition& t = out[v][next[v]++];
        walk.emplace_back(slot(t.right), &t);
      } else {
        if (walk.back().second) circuit.push_back(*walk.back().second);
        walk.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    assignment.cycles.emplace(owner, std::move(circuit));
  }
  return assignment;
}

const StarEntry* StarLedger::find(ElementId attractor, ElementId repeller, ElementId a, ElementId b) const {
  const ElementId low = std::min(a, b), high = std::max(a, b);
  for (const auto& e : entries) {
    if (e.attractor == attractor && e.repeller == repeller && e.low == low && e.high == high) return &e;
  }
  return nullptr;
}

StarLedger verify_star(const CycleAssignment& assignment, const FiniteOrder& order) {
  StarLedger ledger;
  for (const auto& key : star_groups(assignment, order)) {
    ledger.entries.push_back(tally(assignment, key));
    if (!ledger.entries.back().balanced()) ledger.passed = false;
  }
  return ledger;
}

std::size_t star_deficit(const CycleAssignment& assignment, const FiniteOrder& order) {
  std::size_t deficit = 0;
  for (const auto& key : star_groups(assignment, order)) {
    const StarEntry e = tally(assignment, key);
    deficit += e.attractor_forward > e.repeller_forward ? e.attractor_forward - e.repeller_forward
                                                        : e.repeller_forward - e.attractor_forward;
  }
  return deficit;
}

std::size_t least_rotation(const CyclicWord& word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = word[(r + i) % n];
      const auto& b = word[(best + i) % n];
      if (a < b) {
        best = r;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

BalanceResult balance_cycles(const CycleAssignment& assignment, const FiniteOrder& order) {
  const auto violations = check_cycle_conditions(order, assignment);
  if (!violations.empty()) raise(ErrorCode::PreconditionViolated, violations.front());

  BalanceResult result;
  result.assignment = assignment;
  result.initial_deficit = star_deficit(assignment, order);

  auto splice_into = [&](ElementId owner, ElementId mediator, ElementId k, ElementId l) {
    CyclicWord& word = result.assignment.cycles[owner];
    const std::size_t n = word.size();
    const std::size_t origin = least_rotation(word);
    std::size_t anchor = n;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t pos = (origin + i) % n;
      if (word[pos].right == k) {
        anchor = pos;
        break;
      }
    }
    if (anchor == n) {
      raise(ErrorCode::PreconditionViolated, "saddle '" + order.name(k) + "' absent around '" + order.name(owner) + "'");
    }
    Splice splice;
    splice.owner = owner;
    splice.position = anchor + 1;
    splice.inserted.push_back({k, mediator, l});
    if (k != l) splice.inserted.push_back({l, mediator, k});
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(splice.position), splice.inserted.begin(),
                splice.inserted.end());
    result.splices.push_back(std::move(splice));
  };

  std::size_t deficit = result.initial_deficit;
  for (const auto& key : star_groups(assignment, order)) {
    for (;;) {
      const StarEntry e = tally(result.assignment, key);
      if (e.attractor_forward == e.repeller_forward) break;
      if (e.attractor_forward > e.repeller_forward) {
        splice_into(key.repeller, key.attractor, key.low, key.high);
      } else {
        splice_into(key.attractor, key.repeller, key.low, key.high);
      }
      const std::size_t now = star_deficit(result.assignment, order);
      if (now + 1 != deficit) raise(ErrorCode::Internal, "splice did not reduce the balance deficit by one");
      deficit = now;
#ifndef NDEBUG
      if (!check_cycle_conditions(order, result.assignment).empty()) {
        raise(ErrorCode::Internal, "splice broke the cycle conditions");
      }
#endif
    }
  }
  return result;
}

}  // namespace smale
