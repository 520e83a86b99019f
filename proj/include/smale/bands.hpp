#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smale/cycles.hpp"

namespace smale {

// A band is one slot of an extremal element's cycle.
struct BandRef {
  ElementId owner{};
  std::size_t index = 0;

  auto operator<=>(const BandRef&) const = default;
};

struct GluedPair {
  BandRef attractor_band;
  BandRef repeller_band;

  bool operator==(const GluedPair&) const = default;
};

struct BandGluing {
  // Sorted by attractor band.
  std::vector<GluedPair> pairs;

  std::map<BandRef, BandRef> partners() const;
  bool operator==(const BandGluing&) const = default;
};

// Closed glue/advance traversal: sequence[0] <-> sequence[1] -> sequence[2]
// <-> sequence[3] -> ... with the first band repeated at the end. Even
// positions 4t are beginning slots at an attractor, 4t+1 beginning slots at a
// repeller, 4t+2 end slots at that repeller, 4t+3 end slots at an attractor.
struct BoundaryCycle {
  ElementId saddle{};
  std::vector<BandRef> sequence;

  std::size_t length() const { return sequence.empty() ? 0 : (sequence.size() - 1) / 2; }
  bool operator==(const BoundaryCycle&) const = default;
};

using BoundaryCycles = std::map<ElementId, std::vector<BoundaryCycle>>;

struct GluingResult {
  BandGluing gluing;
  BoundaryCycles boundaries;
};

enum class MatchingStrategy { FirstFit, LastFit };

std::string_view to_string(MatchingStrategy strategy);
std::optional<MatchingStrategy> parse_matching_strategy(std::string_view text);

// Matches bands saddle by saddle while tracing boundary cycles. Throws
// StarViolated if the assignment is unbalanced, ExhaustionFailure on an
// internal inconsistency.
GluingResult glue_bands(const CycleAssignment& assignment, const FiniteOrder& order,
                        MatchingStrategy strategy = MatchingStrategy::FirstFit);

// Traces the boundary cycles of every saddle for a complete gluing.
BoundaryCycles trace_boundary_cycles(const CycleAssignment& assignment, const FiniteOrder& order,
                                     const BandGluing& gluing);

// Sorted multiset of cycle lengths.
std::vector<std::size_t> boundary_profile(std::span<const BoundaryCycle> cycles);

struct BoundaryReport {
  bool passed = true;
  std::vector<std::string> violations;
};

BoundaryReport verify_boundary_cycles(const BandGluing& gluing, const BoundaryCycles& boundaries,
                                      const CycleAssignment& assignment, const FiniteOrder& order);

}  // namespace smale
