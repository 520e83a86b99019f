#pragma once

#include <map>
#include <string>
#include <vector>

#include "smale/bands.hpp"
#include "smale/domains.hpp"
#include "smale/surgery.hpp"

namespace smale {

struct SaddleDomain {
  ElementId saddle{};
  // Profile as first traced, before any repair surgery.
  LengthProfile traced_profile;
  RepairLog repairs;
  std::vector<SurgeryRecord> surgeries;
  DomainSpec spec;
};

struct HandleRecord {
  ElementId greater{};
  ElementId lesser{};
  std::vector<std::string> steps;
};

struct SurfaceComponent {
  std::vector<ElementId> elements;
  long long euler_characteristic = 0;
  std::size_t genus = 0;
  bool north_south = false;
};

struct RealizationCertificate {
  FiniteOrder order;
  MatchingStrategy strategy = MatchingStrategy::FirstFit;
  bool cycles_supplied = false;
  std::size_t balance_splices = 0;
  CycleAssignment assignment;
  BandGluing gluing;
  BoundaryCycles boundaries;
  std::map<ElementId, SaddleDomain> domains;
  std::vector<ElementPair> north_south;
  std::vector<HandleRecord> handles;

  std::size_t vertices = 0;  // V: attractors + repellers
  std::size_t edges = 0;     // E: glued band pairs
  std::size_t handle_count = 0;
  long long domain_euler_sum = 0;
  long long euler_characteristic = 0;
  std::size_t genus = 0;  // sum over components
  std::vector<SurfaceComponent> components;
  std::vector<std::string> notes;

  bool connected() const { return components.size() == 1; }
};

// Euler characteristic of one domain: 2 - 2g - s.
long long domain_euler(const DomainSpec& spec);

// Requires every saddle with boundary cycles to have a domain. H = 0.
RealizationCertificate assemble(const FiniteOrder& order, const CycleAssignment& assignment, const BandGluing& gluing,
                                const BoundaryCycles& boundaries, std::map<ElementId, SaddleDomain> domains);

// One handle per saddle-saddle cover pair of `order`.
RealizationCertificate add_saddle_handles(RealizationCertificate certificate, const FiniteOrder& order);

struct Plug {
  ElementId element{};
  Role role = Role::Saddle;
  std::vector<ElementId> entries;  // ancestors
  std::vector<ElementId> exits;    // children
};

enum class GluingKind { Transverse, AxiomB };

std::string_view to_string(GluingKind kind);

struct ScheduledGluing {
  ElementId from{};
  std::size_t exit_component = 0;
  ElementId to{};
  std::size_t entry_component = 0;
  GluingKind kind = GluingKind::Transverse;
};

struct PlugPlan {
  std::vector<Plug> plugs;
  std::vector<ScheduledGluing> schedule;
};

PlugPlan plan_plugs(const FiniteOrder& order);

}  // namespace smale
