#include "smale/bands.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "smale/error.hpp"

namespace smale {

namespace {

enum class SlotRole { Begin, End };

struct Slot {
  BandRef band;
  SlotRole role;
  auto operator<=>(const Slot&) const = default;
};

std::size_t step(std::size_t i, std::size_t n, int delta) {
  return static_cast<std::size_t>((static_cast<long long>(i) + delta + static_cast<long long>(n)) %
                                  static_cast<long long>(n));
}

using PartnerOf = std::function<BandRef(const BandRef&)>;

// Walks one boundary cycle of `saddle` from a beginning slot at an attractor.
BoundaryCycle walk(const CycleAssignment& assignment, const FiniteOrder& order, ElementId saddle, BandRef start,
                   std::set<Slot>& visited, const PartnerOf& partner_of) {
  BoundaryCycle cycle;
  cycle.saddle = saddle;
  BandRef cur = start;
  for (;;) {
    if (!visited.insert({cur, SlotRole::Begin}).second) {
      raise(ErrorCode::ExhaustionFailure, "slot revisited while tracing '" + order.name(saddle) + "'");
    }
    cycle.sequence.push_back(cur);

    const BandRef up = partner_of(cur);
    if (!order.is_maximal(up.owner) || !visited.insert({up, SlotRole::Begin}).second) {
      raise(ErrorCode::ExhaustionFailure, "inconsistent glue step for '" + order.name(saddle) + "'");
    }
    cycle.sequence.push_back(up);

    const CyclicWord& rword = assignment.at(up.owner);
    const BandRef end{up.owner, step(up.index, rword.size(), +1)};
    if (rword[end.index].left != saddle || !visited.insert({end, SlotRole::End}).second) {
      raise(ErrorCode::ExhaustionFailure, "advance at repeller breaks the chain for '" + order.name(saddle) + "'");
    }
    cycle.sequence.push_back(end);

    const BandRef down = partner_of(end);
    if (!order.is_minimal(down.owner) || !visited.insert({down, SlotRole::End}).second) {
      raise(ErrorCode::ExhaustionFailure, "inconsistent glue step for '" + order.name(saddle) + "'");
    }
    cycle.sequence.push_back(down);

    const CyclicWord& aword = assignment.at(down.owner);
    const BandRef next{down.owner, step(down.index, aword.size(), -1)};
    if (aword[next.index].right != saddle) {
      raise(ErrorCode::ExhaustionFailure, "advance at attractor breaks the chain for '" + order.name(saddle) + "'");
    }
    if (next == start) {
      cycle.sequence.push_back(start);
      return cycle;
    }
    cur = next;
  }
}

template <typename PartnerProvider>
BoundaryCycles trace_all(const CycleAssignment& assignment, const FiniteOrder& order, PartnerProvider&& partner_of) {
  BoundaryCycles out;
  for (ElementId s : order.elements()) {
    if (order.is_maximal(s) || order.is_minimal(s)) continue;
    std::set<Slot> visited;
    std::vector<BoundaryCycle> cycles;
    for (const auto& [owner, word] : assignment.cycles) {
      if (!order.is_minimal(owner)) continue;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].right != s || visited.count({{owner, i}, SlotRole::Begin})) continue;
        cycles.push_back(walk(assignment, order, s, {owner, i}, visited, partner_of));
      }
    }
    if (!cycles.empty()) out.emplace(s, std::move(cycles));
  }
  return out;
}

}  // namespace

std::map<BandRef, BandRef> BandGluing::partners() const {
  std::map<BandRef, BandRef> out;
  for (const auto& p : pairs) {
    out.emplace(p.attractor_band, p.repeller_band);
    out.emplace(p.repeller_band, p.attractor_band);
  }
  return out;
}

std::string_view to_string(MatchingStrategy strategy) {
  switch (strategy) {
    case MatchingStrategy::FirstFit: return "first-fit";
    case MatchingStrategy::LastFit: return "last-fit";
  }
  return "unknown";
}

std::optional<MatchingStrategy> parse_matching_strategy(std::string_view text) {
  if (text == "first-fit") return MatchingStrategy::FirstFit;
  if (text == "last-fit") return MatchingStrategy::LastFit;
  return std::nullopt;
}

GluingResult glue_bands(const CycleAssignment& assignment, const FiniteOrder& order, MatchingStrategy strategy) {
  if (!verify_star(assignment, order).passed) {
    raise(ErrorCode::StarViolated, "cycles do not satisfy the four-way balance condition");
  }

  std::map<BandRef, BandRef> partner;
  auto partner_of = [&](const BandRef& band) -> BandRef {
    if (auto it = partner.find(band); it != partner.end()) return it->second;
    const Transition& t = assignment.at(band.owner)[band.index];
    const Transition wanted{t.left, band.owner, t.right};
    const CyclicWord& other = assignment.at(t.mediator);
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (other[j] != wanted || partner.count({t.mediator, j})) continue;
      pick = j;
      if (strategy == MatchingStrategy::FirstFit) break;
    }
    if (!pick) raise(ErrorCode::ExhaustionFailure, "no compatible band left around '" + order.name(t.mediator) + "'");
    const BandRef match{t.mediator, *pick};
    partner.emplace(band, match);
    partner.emplace(match, band);
    return match;
  };

  GluingResult result;
  result.boundaries = trace_all(assignment, order, partner_of);

  for (const auto& [owner, word] : assignment.cycles) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto it = partner.find({owner, i});
      if (it == partner.end()) raise(ErrorCode::ExhaustionFailure, "band left unglued");
      if (order.is_minimal(owner)) result.gluing.pairs.push_back({{owner, i}, it->second});
    }
  }
  return result;
}

BoundaryCycles trace_boundary_cycles(const CycleAssignment& assignment, const FiniteOrder& order,
                                     const BandGluing& gluing) {
  const auto partner = gluing.partners();
  return trace_all(assignment, order, [&](const BandRef& band) -> BandRef {
    auto it = partner.find(band);
    if (it == partner.end()) raise(ErrorCode::ExhaustionFailure, "band has no glued partner");
    return it->second;
  });
}

std::vector<std::size_t> boundary_profile(std::span<const BoundaryCycle> cycles) {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.length());
  std::sort(out.begin(), out.end());
  return out;
}

BoundaryReport verify_boundary_cycles(const BandGluing& gluing, const BoundaryCycles& boundaries,
                                      const CycleAssignment& assignment, const FiniteOrder& order) {
  BoundaryReport report;
  auto fail = [&](std::string message) {
    report.passed = false;
    report.violations.push_back(std::move(message));
  };
  auto valid = [&](const BandRef& b) {
    auto it = assignment.cycles.find(b.owner);
    return it != assignment.cycles.end() && b.index < it->second.size();
  };
  auto band_name = [&](const BandRef& b) { return order.name(b.owner) + "[" + std::to_string(b.index) + "]"; };

  // Perfect, type-compatible matching.
  std::map<BandRef, int> used;
  std::set<std::pair<BandRef, BandRef>> glued;
  for (const auto& p : gluing.pairs) {
    if (!valid(p.attractor_band) || !valid(p.repeller_band)) {
      fail("gluing references a missing band");
      continue;
    }
    ++used[p.attractor_band];
    ++used[p.repeller_band];
    glued.insert({p.attractor_band, p.repeller_band});
    if (!order.is_minimal(p.attractor_band.owner) || !order.is_maximal(p.repeller_band.owner)) {
      fail("pair " + band_name(p.attractor_band) + " / " + band_name(p.repeller_band) + " has wrong sides");
      continue;
    }
    const Transition& a = assignment.at(p.attractor_band.owner)[p.attractor_band.index];
    const Transition& r = assignment.at(p.repeller_band.owner)[p.repeller_band.index];
    if (a.left != r.left || a.right != r.right || a.mediator != p.repeller_band.owner ||
        r.mediator != p.attractor_band.owner) {
      fail("pair " + band_name(p.attractor_band) + " / " + band_name(p.repeller_band) + " is not type compatible");
    }
  }
  for (const auto& [owner, word] : assignment.cycles) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const int n = used.count({owner, i}) ? used[{owner, i}] : 0;
      if (n != 1) fail("band " + band_name({owner, i}) + " glued " + std::to_string(n) + " times");
    }
  }

  std::size_t length_total = 0;
  for (const auto& [saddle, cycles] : boundaries) {
    std::map<std::pair<BandRef, int>, int> slot_hits;
    for (const auto& cycle : cycles) {
      const auto& seq = cycle.sequence;
      const std::string who = order.name(saddle);
      if (cycle.saddle != saddle) fail(who + ": cycle filed under the wrong saddle");
      if (seq.size() < 5 || (seq.size() - 1) % 4 != 0 || seq.front() != seq.back()) {
        fail(who + ": malformed boundary cycle");
        continue;
      }
      if (!std::all_of(seq.begin(), seq.end(), valid)) {
        fail(who + ": boundary cycle references a missing band");
        continue;
      }
      length_total += cycle.length();
      if (cycle.length() % 2 != 0) fail(who + ": odd boundary length");

      const std::size_t m = seq.size() - 1;
      std::map<BandRef, int> appearances;
      for (std::size_t p = 0; p < m; ++p) {
        const BandRef& b = seq[p];
        const Transition& t = assignment.at(b.owner)[b.index];
        const bool begin = p % 4 == 0 || p % 4 == 1;
        const bool at_attractor = p % 4 == 0 || p % 4 == 3;
        // Axiom 1: declared band set.
        if ((begin ? t.right : t.left) != saddle) fail(who + ": " + band_name(b) + " is not in its band set");
        if (at_attractor != order.is_minimal(b.owner)) fail(who + ": " + band_name(b) + " on the wrong side");
        ++appearances[b];
        ++slot_hits[{b, begin ? 0 : 1}];
        if (p % 2 == 0) {
          if (!glued.count({seq[p], seq[p + 1]}) && !glued.count({seq[p + 1], seq[p]})) {
            fail(who + ": glue step " + band_name(seq[p]) + " <-> " + band_name(seq[p + 1]) + " not in gluing");
          }
        } else {
          // Axiom 2: i(e) = i(b) + 1 at a common extremal point.
          const BandRef& from = seq[p];
          const BandRef& to = seq[p + 1];
          const BandRef& b_band = (p % 4 == 1) ? from : to;
          const BandRef& e_band = (p % 4 == 1) ? to : from;
          const std::size_t n = assignment.at(from.owner).size();
          if (from.owner != to.owner || (b_band.index + 1) % n != e_band.index) {
            fail(who + ": advance step " + band_name(from) + " -> " + band_name(to) + " violates axiom 2");
          }
        }
      }
      // Axiom 3.
      for (const auto& [b, k] : appearances) {
        const Transition& t = assignment.at(b.owner)[b.index];
        if (k > (t.left == t.right ? 2 : 1)) fail(who + ": " + band_name(b) + " repeated too often (axiom 3)");
      }
    }
    // Partition: every slot of this saddle exactly once.
    for (const auto& [owner, word] : assignment.cycles) {
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].right == saddle && slot_hits[{{owner, i}, 0}] != 1) {
          fail(order.name(saddle) + ": beginning slot " + band_name({owner, i}) + " not covered exactly once");
        }
        if (word[i].left == saddle && slot_hits[{{owner, i}, 1}] != 1) {
          fail(order.name(saddle) + ": end slot " + band_name({owner, i}) + " not covered exactly once");
        }
      }
    }
  }
  // Saddles with bands but no cycles.
  std::set<ElementId> uncovered;
  for (const auto& [owner, word] : assignment.cycles) {
    for (const auto& t : word) {
      for (ElementId s : {t.left, t.right}) {
        if (!boundaries.count(s)) uncovered.insert(s);
      }
    }
  }
  for (ElementId s : uncovered) fail(order.name(s) + ": has bands but no boundary cycles");
  if (report.passed && length_total != assignment.total_bands()) {
    fail("boundary lengths sum to " + std::to_string(length_total) + ", expected " +
         std::to_string(assignment.total_bands()));
  }
  return report;
}

}  // namespace smale
