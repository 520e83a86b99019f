#include "smale/order.hpp"

#include <algorithm>
#include <numeric>

#include "smale/error.hpp"

namespace smale {

FiniteOrder FiniteOrder::load(const OrderSpec& spec) {
  if (spec.elements.empty()) raise(ErrorCode::InvalidArgument, "order has no elements");

  FiniteOrder order;
  order.names_ = spec.elements;
  std::sort(order.names_.begin(), order.names_.end());
  for (std::size_t i = 1; i < order.names_.size(); ++i) {
    if (order.names_[i] == order.names_[i - 1]) {
      raise(ErrorCode::DuplicateElement, "element '" + order.names_[i] + "' listed twice");
    }
  }

  const std::size_t n = order.size();
  order.greater_.assign(n * n, 0);
  for (const auto& [hi, lo] : spec.relations) {
    const ElementId a = order.at(hi);
    const ElementId b = order.at(lo);
    if (a == b) raise(ErrorCode::CycleInRelation, "self pair on '" + hi + "'");
    order.greater_[index(a) * n + index(b)] = 1;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!order.greater_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (order.greater_[k * n + j]) order.greater_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (order.greater_[i * n + i]) {
      raise(ErrorCode::CycleInRelation, "relations induce a directed cycle through '" + order.names_[i] + "'");
    }
  }

  for (ElementId id : order.elements()) {
    if (order.is_maximal(id) && order.is_minimal(id)) {
      raise(ErrorCode::IsolatedElement, "element '" + order.name(id) + "' is related to nothing");
    }
  }

  order.compute_covers();
  return order;
}

void FiniteOrder::compute_covers() {
  covers_.clear();
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!greater_[a * n + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (greater_[a * n + c] && greater_[c * n + b]) cover = false;
      }
      if (cover) covers_.emplace_back(element_id(a), element_id(b));
    }
  }
}

std::optional<ElementId> FiniteOrder::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& lhs, std::string_view rhs) { return lhs < rhs; });
  if (it == names_.end() || *it != name) return std::nullopt;
  return element_id(static_cast<std::size_t>(it - names_.begin()));
}

ElementId FiniteOrder::at(std::string_view name) const {
  auto id = find(name);
  if (!id) raise(ErrorCode::UnknownElementInRelation, "unknown element '" + std::string(name) + "'");
  return *id;
}

bool FiniteOrder::covers(ElementId a, ElementId b) const {
  return std::binary_search(covers_.begin(), covers_.end(), ElementPair{a, b});
}

bool FiniteOrder::is_maximal(ElementId id) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (greater(element_id(i), id)) return false;
  }
  return true;
}

bool FiniteOrder::is_minimal(ElementId id) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (greater(id, element_id(i))) return false;
  }
  return true;
}

std::vector<ElementPair> FiniteOrder::relation_pairs() const {
  std::vector<ElementPair> out;
  for (ElementId a : elements()) {
    for (ElementId b : elements()) {
      if (greater(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ElementId> FiniteOrder::elements() const {
  std::vector<ElementId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = element_id(i);
  return out;
}

std::vector<ElementId> FiniteOrder::strictly_above(ElementId id) const {
  std::vector<ElementId> out;
  for (ElementId x : elements()) {
    if (greater(x, id)) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> FiniteOrder::strictly_below(ElementId id) const {
  std::vector<ElementId> out;
  for (ElementId x : elements()) {
    if (greater(id, x)) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> FiniteOrder::parents(ElementId id) const {
  std::vector<ElementId> out;
  for (const auto& [hi, lo] : covers_) {
    if (lo == id) out.push_back(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> FiniteOrder::children(ElementId id) const {
  std::vector<ElementId> out;
  for (const auto& [hi, lo] : covers_) {
    if (hi == id) out.push_back(lo);
  }
  return out;
}

OrderSpec FiniteOrder::to_spec() const {
  OrderSpec spec;
  spec.elements = names_;
  for (const auto& [hi, lo] : covers_) spec.relations.emplace_back(name(hi), name(lo));
  return spec;
}

FiniteOrder FiniteOrder::without_saddle_relations() const {
  FiniteOrder out = *this;
  const std::size_t n = size();
  std::vector<char> extremal(n);
  for (ElementId id : elements()) extremal[index(id)] = is_maximal(id) || is_minimal(id);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!extremal[a] && !extremal[b]) out.greater_[a * n + b] = 0;
    }
  }
  out.compute_covers();
  return out;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Repeller: return "repeller";
    case Role::Saddle: return "saddle";
    case Role::Attractor: return "attractor";
  }
  return "unknown";
}

std::vector<ElementId> RoleMap::with_role(Role wanted) const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == wanted) out.push_back(element_id(i));
  }
  return out;
}

RoleMap classify(const FiniteOrder& order) {
  RoleMap map;
  const std::size_t n = order.size();
  map.roles.resize(n);
  map.generations.assign(n, 0);
  for (ElementId id : order.elements()) {
    if (order.is_maximal(id)) {
      map.roles[index(id)] = Role::Repeller;
    } else if (order.is_minimal(id)) {
      map.roles[index(id)] = Role::Attractor;
    } else {
      map.roles[index(id)] = Role::Saddle;
    }
  }

  // Generations by longest chain of saddles above; process by up-set size so
  // every saddle above is finished first.
  std::vector<ElementId> saddles = map.with_role(Role::Saddle);
  std::sort(saddles.begin(), saddles.end(), [&](ElementId a, ElementId b) {
    return order.strictly_above(a).size() < order.strictly_above(b).size();
  });
  for (ElementId s : saddles) {
    int gen = 1;
    for (ElementId above : order.strictly_above(s)) {
      if (map.roles[index(above)] == Role::Saddle) gen = std::max(gen, map.generations[index(above)] + 1);
    }
    map.generations[index(s)] = gen;
  }

  for (const auto& [hi, lo] : order.cover_pairs()) {
    if (map.roles[index(hi)] == Role::Repeller && map.roles[index(lo)] == Role::Attractor) {
      map.north_south.emplace_back(hi, lo);
    }
  }
  return map;
}

std::vector<std::vector<ElementId>> comparability_components(const FiniteOrder& order,
                                                             std::span<const ElementId> subset) {
  std::vector<std::vector<ElementId>> components;
  std::vector<char> seen(subset.size(), 0);
  for (std::size_t start = 0; start < subset.size(); ++start) {
    if (seen[start]) continue;
    std::vector<ElementId> component;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      component.push_back(subset[cur]);
      for (std::size_t next = 0; next < subset.size(); ++next) {
        if (!seen[next] && order.comparable(subset[cur], subset[next])) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end());
  return components;
}

bool ConnectivityReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ConnectivityEntry& e) { return e.passed; });
}

const ConnectivityEntry* ConnectivityReport::find(ElementId id) const {
  for (const auto& entry : entries) {
    if (entry.element == id) return &entry;
  }
  return nullptr;
}

ConnectivityReport check_connectivity(const FiniteOrder& order) {
  ConnectivityReport report;
  auto test = [&](ElementId id, bool maximal) {
    const auto subset = maximal ? order.strictly_below(id) : order.strictly_above(id);
    auto components = comparability_components(order, subset);
    ConnectivityEntry entry;
    entry.element = id;
    entry.maximal = maximal;
    entry.passed = components.size() <= 1;
    if (!entry.passed) entry.components = std::move(components);
    report.entries.push_back(std::move(entry));
  };
  for (ElementId id : order.elements()) {
    if (order.is_maximal(id)) test(id, true);
  }
  for (ElementId id : order.elements()) {
    if (order.is_minimal(id)) test(id, false);
  }
  return report;
}

}  // namespace smale
