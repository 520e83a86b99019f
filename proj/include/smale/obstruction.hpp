#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smale/order.hpp"

namespace smale {

// R1: a saddle below a forced non-trivial repeller (above a forced non-trivial
//     attractor) must be periodic, so it meets at most two extremal elements
//     on each side.
// R2: an extremal element on the far side of a forced non-trivial piece must
//     be a periodic point, so it must itself satisfy connectivity.
// ChainDepth: C < B < A with A a forced non-trivial repeller needs C minimal
//     (mirrored for attractors).
enum class Rule { Connectivity, R1, R2, ChainDepth };

std::string_view to_string(Rule rule);

struct Violation {
  Rule rule = Rule::Connectivity;
  // The extremal element that fails connectivity.
  ElementId anchor{};
  std::vector<ElementId> witnesses;
  std::string message;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  bool fires(Rule rule) const;
};

ViolationReport check_necessary(const FiniteOrder& order);

}  // namespace smale
