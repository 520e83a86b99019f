#include "smale/assembly.hpp"

#include <algorithm>
#include <numeric>

#include "smale/error.hpp"

namespace smale {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void compute_components(RealizationCertificate& cert) {
  const FiniteOrder& order = cert.order;
  DisjointSets sets(order.size());
  for (const auto& [owner, word] : cert.assignment.cycles) {
    for (const auto& t : word) {
      sets.unite(index(owner), index(t.left));
      sets.unite(index(owner), index(t.right));
      sets.unite(index(owner), index(t.mediator));
    }
  }
  for (const auto& [hi, lo] : cert.north_south) sets.unite(index(hi), index(lo));
  for (const auto& h : cert.handles) sets.unite(index(h.greater), index(h.lesser));

  std::map<std::size_t, SurfaceComponent> by_root;
  for (ElementId id : order.elements()) {
    SurfaceComponent& c = by_root[sets.find(index(id))];
    c.elements.push_back(id);
    if (order.is_maximal(id) || order.is_minimal(id)) {
      c.euler_characteristic += 1;
    } else if (auto it = cert.domains.find(id); it != cert.domains.end()) {
      c.euler_characteristic += domain_euler(it->second.spec);
    }
  }
  for (const auto& p : cert.gluing.pairs) by_root[sets.find(index(p.attractor_band.owner))].euler_characteristic -= 1;
  for (const auto& h : cert.handles) by_root[sets.find(index(h.greater))].euler_characteristic -= 2;
  for (const auto& [hi, lo] : cert.north_south) by_root[sets.find(index(hi))].north_south = true;

  cert.components.clear();
  cert.genus = 0;
  for (auto& [root, c] : by_root) {
    if (c.euler_characteristic > 2 || c.euler_characteristic % 2 != 0) {
      raise(ErrorCode::Internal, "component Euler characteristic " + std::to_string(c.euler_characteristic) +
                                     " is not that of a closed orientable surface");
    }
    c.genus = static_cast<std::size_t>((2 - c.euler_characteristic) / 2);
    cert.genus += c.genus;
    cert.components.push_back(std::move(c));
  }
}

void recount(RealizationCertificate& cert) {
  cert.domain_euler_sum = 0;
  for (const auto& [s, d] : cert.domains) cert.domain_euler_sum += domain_euler(d.spec);
  cert.handle_count = cert.handles.size();
  cert.euler_characteristic = cert.domain_euler_sum + static_cast<long long>(cert.vertices) -
                              static_cast<long long>(cert.edges) - 2 * static_cast<long long>(cert.handle_count);
  compute_components(cert);
}

}  // namespace

long long domain_euler(const DomainSpec& spec) {
  return 2 - 2 * static_cast<long long>(spec.genus) - static_cast<long long>(spec.profile.components());
}

RealizationCertificate assemble(const FiniteOrder& order, const CycleAssignment& assignment, const BandGluing& gluing,
                                const BoundaryCycles& boundaries, std::map<ElementId, SaddleDomain> domains) {
  RealizationCertificate cert;
  cert.order = order;
  cert.assignment = assignment;
  cert.gluing = gluing;
  cert.boundaries = boundaries;
  cert.domains = std::move(domains);
  const RoleMap roles = classify(order);
  cert.north_south = roles.north_south;

  for (const auto& [s, cycles] : boundaries) {
    auto it = cert.domains.find(s);
    if (it == cert.domains.end()) raise(ErrorCode::PreconditionViolated, "saddle '" + order.name(s) + "' has no domain");
    if (it->second.spec.profile.lengths() != boundary_profile(cycles)) {
      raise(ErrorCode::PreconditionViolated, "domain of '" + order.name(s) + "' does not match its boundary cycles");
    }
  }
  for (ElementId id : order.elements()) {
    if (roles.role(id) == Role::Saddle && !boundaries.count(id)) {
      raise(ErrorCode::PreconditionViolated, "saddle '" + order.name(id) + "' has no boundary cycles");
    }
  }

  cert.vertices = roles.with_role(Role::Repeller).size() + roles.with_role(Role::Attractor).size();
  cert.edges = gluing.pairs.size();
  for (const auto& [hi, lo] : cert.north_south) {
    cert.notes.push_back("north-south pair " + order.name(hi) + " > " + order.name(lo) +
                         " realized as a separate sphere with one source and one sink");
  }
  recount(cert);
  if (!cert.connected()) {
    cert.notes.push_back("assembled surface has " + std::to_string(cert.components.size()) + " components");
  }
  return cert;
}

RealizationCertificate add_saddle_handles(RealizationCertificate cert, const FiniteOrder& order) {
  const RoleMap roles = classify(order);
  const std::size_t components_before = cert.components.size();
  cert.order = order;
  for (const auto& [hi, lo] : order.cover_pairs()) {
    if (roles.role(hi) != Role::Saddle || roles.role(lo) != Role::Saddle) continue;
    HandleRecord h;
    h.greater = hi;
    h.lesser = lo;
    h.steps = {
        "attracting DA at " + order.name(hi) + ", remove a disk around the new sink",
        "repelling DA at " + order.name(lo) + ", remove a disk around the new source",
        "glue the exit annulus of " + order.name(hi) + " to the entrance annulus of " + order.name(lo) +
            " with transverse free separatrices",
    };
    cert.handles.push_back(std::move(h));
  }
  recount(cert);
  if (!cert.handles.empty()) {
    cert.notes.push_back("handles added for saddle cover pairs only; transitive saddle relations follow from the "
                         "lambda-lemma");
  }
  if (cert.components.size() != components_before) {
    cert.notes.push_back("handles merged the surface into " + std::to_string(cert.components.size()) + " components");
  }
  return cert;
}

std::string_view to_string(GluingKind kind) {
  switch (kind) {
    case GluingKind::Transverse: return "transverse";
    case GluingKind::AxiomB: return "axiom-b";
  }
  return "unknown";
}

PlugPlan plan_plugs(const FiniteOrder& order) {
  const RoleMap roles = classify(order);
  PlugPlan plan;
  for (ElementId id : order.elements()) {
    plan.plugs.push_back({id, roles.role(id), order.parents(id), order.children(id)});
  }
  for (const auto& [hi, lo] : order.cover_pairs()) {
    const Plug& from = plan.plugs[index(hi)];
    const Plug& to = plan.plugs[index(lo)];
    ScheduledGluing g;
    g.from = hi;
    g.exit_component = static_cast<std::size_t>(std::find(from.exits.begin(), from.exits.end(), lo) - from.exits.begin());
    g.to = lo;
    g.entry_component =
        static_cast<std::size_t>(std::find(to.entries.begin(), to.entries.end(), hi) - to.entries.begin());
    g.kind = roles.role(hi) == Role::Saddle && roles.role(lo) == Role::Saddle ? GluingKind::Transverse
                                                                              : GluingKind::AxiomB;
    plan.schedule.push_back(g);
  }
  return plan;
}

}  // namespace smale
