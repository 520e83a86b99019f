#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smale {

// Index into a FiniteOrder's lexicographically sorted element list.
enum class ElementId : std::uint32_t {};

constexpr std::size_t index(ElementId id) { return static_cast<std::size_t>(id); }
constexpr ElementId element_id(std::size_t i) { return static_cast<ElementId>(i); }

using ElementPair = std::pair<ElementId, ElementId>;

// Raw order description as read from an order spec document.
struct OrderSpec {
  std::vector<std::string> elements;
  // (greater, smaller); any generating set, closed transitively on load.
  std::vector<std::pair<std::string, std::string>> relations;
};

class FiniteOrder {
 public:
  FiniteOrder() = default;

  // Validates, closes transitively and computes Hasse covers. Throws Error
  // with DuplicateElement, UnknownElementInRelation, CycleInRelation or
  // IsolatedElement.
  static FiniteOrder load(const OrderSpec& spec);

  std::size_t size() const { return names_.size(); }
  std::span<const std::string> names() const { return names_; }
  const std::string& name(ElementId id) const { return names_[index(id)]; }
  std::optional<ElementId> find(std::string_view name) const;
  // Like find, but throws UnknownElementInRelation.
  ElementId at(std::string_view name) const;

  // a > b in the closed relation.
  bool greater(ElementId a, ElementId b) const { return greater_[index(a) * size() + index(b)] != 0; }
  bool comparable(ElementId a, ElementId b) const { return greater(a, b) || greater(b, a); }
  bool covers(ElementId a, ElementId b) const;

  bool is_maximal(ElementId id) const;
  bool is_minimal(ElementId id) const;

  // Sorted (greater, smaller) pairs.
  const std::vector<ElementPair>& cover_pairs() const { return covers_; }
  std::vector<ElementPair> relation_pairs() const;

  std::vector<ElementId> elements() const;
  std::vector<ElementId> strictly_above(ElementId id) const;
  std::vector<ElementId> strictly_below(ElementId id) const;
  // Cover neighbours ("ancestors" / "children" in the Hasse diagram).
  std::vector<ElementId> parents(ElementId id) const;
  std::vector<ElementId> children(ElementId id) const;

  // Covers only, elements in canonical order.
  OrderSpec to_spec() const;

  // Drops every relation between two elements that are neither maximal nor
  // minimal. Extremal relations of every element are kept.
  FiniteOrder without_saddle_relations() const;

 private:
  void compute_covers();

  std::vector<std::string> names_;
  std::vector<char> greater_;
  std::vector<ElementPair> covers_;
};

enum class Role { Repeller, Saddle, Attractor };

std::string_view to_string(Role role);

struct RoleMap {
  std::vector<Role> roles;
  // Saddle generation, 0 for repellers and attractors.
  std::vector<int> generations;
  // Repeller directly covering an attractor with nothing in between.
  std::vector<ElementPair> north_south;

  Role role(ElementId id) const { return roles[index(id)]; }
  int generation(ElementId id) const { return generations[index(id)]; }
  bool is_extremal(ElementId id) const { return role(id) != Role::Saddle; }
  std::vector<ElementId> with_role(Role role) const;
};

RoleMap classify(const FiniteOrder& order);

struct ConnectivityEntry {
  ElementId element{};
  bool maximal = false;
  bool passed = true;
  // Components of the comparability graph on the strict down-set (maximal)
  // or up-set (minimal); filled only on failure.
  std::vector<std::vector<ElementId>> components;
};

struct ConnectivityReport {
  std::vector<ConnectivityEntry> entries;

  bool passed() const;
  const ConnectivityEntry* find(ElementId id) const;
};

ConnectivityReport check_connectivity(const FiniteOrder& order);

// Connected components of the comparability graph induced on `subset`.
std::vector<std::vector<ElementId>> comparability_components(const FiniteOrder& order,
                                                             std::span<const ElementId> subset);

}  // namespace smale
