#include "smale/obstruction.hpp"

#include <algorithm>

namespace smale {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Connectivity: return "connectivity";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::ChainDepth: return "chain-depth";
  }
  return "unknown";
}

bool ViolationReport::fires(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

namespace {

std::size_t count_if_extremal(const FiniteOrder& order, const std::vector<ElementId>& ids, bool maximal) {
  return static_cast<std::size_t>(std::count_if(ids.begin(), ids.end(), [&](ElementId x) {
    return maximal ? order.is_maximal(x) : order.is_minimal(x);
  }));
}

std::string join_names(const FiniteOrder& order, const std::vector<ElementId>& ids) {
  std::string out;
  for (ElementId id : ids) {
    if (!out.empty()) out += ", ";
    out += order.name(id);
  }
  return out;
}

}  // namespace

ViolationReport check_necessary(const FiniteOrder& order) {
  ViolationReport report;
  const ConnectivityReport connectivity = check_connectivity(order);

  for (const ConnectivityEntry& entry : connectivity.entries) {
    if (entry.passed) continue;
    const ElementId a = entry.element;
    const bool repeller = entry.maximal;
    const std::string side = repeller ? "repeller" : "attractor";
    // Far side of a: everything strictly below a repeller, above an attractor.
    const std::vector<ElementId> far = repeller ? order.strictly_below(a) : order.strictly_above(a);

    std::string parts;
    for (const auto& component : entry.components) parts += " {" + join_names(order, component) + "}";
    report.violations.push_back({Rule::Connectivity, a, {},
                                 order.name(a) + " fails connectivity; components:" + parts +
                                     "; it must be a non-trivial " + side});

    for (ElementId x : far) {
      if (order.is_maximal(x) || order.is_minimal(x)) continue;
      const std::size_t maxima = count_if_extremal(order, order.strictly_above(x), true);
      const std::size_t minima = count_if_extremal(order, order.strictly_below(x), false);
      if (maxima > 2 || minima > 2) {
        report.violations.push_back(
            {Rule::R1, a, {x},
             order.name(x) + " must be a periodic saddle but is related to " + std::to_string(maxima) +
                 " maximal and " + std::to_string(minima) + " minimal elements"});
      }
    }

    for (ElementId x : far) {
      const bool opposite = repeller ? order.is_minimal(x) : order.is_maximal(x);
      if (!opposite) continue;
      const ConnectivityEntry* other = connectivity.find(x);
      if (other && !other->passed) {
        report.violations.push_back({Rule::R2, a, {x},
                                     order.name(x) + " must be a periodic point but fails connectivity itself"});
      }
    }

    // C < B < a: C must be an extremal periodic point, B a periodic saddle.
    for (ElementId b : far) {
      const std::vector<ElementId> beyond = repeller ? order.strictly_below(b) : order.strictly_above(b);
      for (ElementId c : beyond) {
        const bool ok = repeller ? order.is_minimal(c) : order.is_maximal(c);
        if (ok) continue;
        report.violations.push_back({Rule::ChainDepth, a, {b, c},
                                     "chain through " + order.name(b) + " and " + order.name(c) +
                                         (repeller ? " below " : " above ") + order.name(a) + " ends in a non-extremal element " + order.name(c)});
      }
    }
  }
  return report;
}

}  // namespace smale
