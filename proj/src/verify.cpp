#include "smale/verify.hpp"

#include <algorithm>

#include "smale/error.hpp"

namespace smale {

namespace {

class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    report_.checks.push_back(name);
    if (!ok) report_.failures.push_back(detail.empty() ? name : name + ": " + detail);
  }
  void check_all(const std::string& name, const std::vector<std::string>& problems) {
    report_.checks.push_back(name);
    for (const auto& p : problems) report_.failures.push_back(name + ": " + p);
  }

 private:
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_certificate(const RealizationCertificate& cert) {
  VerificationReport report;
  Checker c(report);
  const FiniteOrder& order = cert.order;
  const FiniteOrder stripped = order.without_saddle_relations();
  const RoleMap roles = classify(order);

  c.check("connectivity", check_connectivity(order).passed());
  c.check_all("cycle-conditions", check_cycle_conditions(stripped, cert.assignment));

  const StarLedger star = verify_star(cert.assignment, stripped);
  c.check("star-balance", star.passed);

  try {
    const BoundaryReport boundary = verify_boundary_cycles(cert.gluing, cert.boundaries, cert.assignment, stripped);
    c.check_all("boundary-axioms", boundary.violations);
    c.check("boundary-retrace", trace_boundary_cycles(cert.assignment, stripped, cert.gluing) == cert.boundaries,
            "stored boundary cycles differ from a fresh trace");
  } catch (const Error& e) {
    c.check("boundary-axioms", false, e.what());
  }

  c.check("edge-identity", 2 * cert.gluing.pairs.size() == cert.assignment.total_bands(),
          "2E = " + std::to_string(2 * cert.gluing.pairs.size()) + " but total bands = " +
              std::to_string(cert.assignment.total_bands()));

  std::vector<std::string> domain_problems;
  long long euler_sum = 0;
  for (ElementId s : roles.with_role(Role::Saddle)) {
    auto it = cert.domains.find(s);
    if (it == cert.domains.end()) {
      domain_problems.push_back("saddle " + order.name(s) + " has no domain");
      continue;
    }
    const SaddleDomain& d = it->second;
    auto b = cert.boundaries.find(s);
    if (b == cert.boundaries.end() || boundary_profile(b->second) != d.spec.profile.lengths()) {
      domain_problems.push_back("domain of " + order.name(s) + " does not match its boundary cycles");
    }
    const Constructibility verdict = check_constructible(d.spec.profile);
    if (verdict.verdict != Verdict::Constructible || !verdict.spec || !(*verdict.spec == d.spec)) {
      domain_problems.push_back("domain of " + order.name(s) + " is not the catalog's constructible spec");
    }
    LengthProfile replay = d.traced_profile;
    for (const auto& step : d.repairs.steps) {
      if (!(step.before == replay)) domain_problems.push_back("repair log of " + order.name(s) + " does not chain");
      replay = step.after;
    }
    if (!(replay == d.spec.profile)) domain_problems.push_back("repair log of " + order.name(s) + " ends elsewhere");
    if (d.surgeries.size() != d.repairs.steps.size()) {
      domain_problems.push_back("repair steps of " + order.name(s) + " lack surgeries");
    }
    euler_sum += domain_euler(d.spec);
  }
  if (cert.domains.size() != roles.with_role(Role::Saddle).size()) domain_problems.push_back("extra domains");
  c.check_all("domains", domain_problems);

  std::size_t saddle_covers = 0;
  for (const auto& [hi, lo] : order.cover_pairs()) {
    if (roles.role(hi) == Role::Saddle && roles.role(lo) == Role::Saddle) ++saddle_covers;
  }
  const std::size_t vertices = roles.with_role(Role::Repeller).size() + roles.with_role(Role::Attractor).size();
  c.check("vertex-count", cert.vertices == vertices);
  c.check("edge-count", cert.edges == cert.gluing.pairs.size());
  c.check("handle-count", cert.handle_count == saddle_covers && cert.handles.size() == saddle_covers);
  c.check("domain-euler-sum", cert.domain_euler_sum == euler_sum);

  const long long chi = euler_sum + static_cast<long long>(vertices) - static_cast<long long>(cert.gluing.pairs.size()) -
                        2 * static_cast<long long>(saddle_covers);
  c.check("euler-formula", cert.euler_characteristic == chi,
          "stored " + std::to_string(cert.euler_characteristic) + ", recomputed " + std::to_string(chi));
  c.check("euler-parity", chi % 2 == 0);

  long long component_chi = 0;
  std::size_t genus = 0;
  std::vector<ElementId> covered;
  bool components_ok = true;
  for (const auto& comp : cert.components) {
    component_chi += comp.euler_characteristic;
    genus += comp.genus;
    components_ok = components_ok && comp.euler_characteristic <= 2 && comp.euler_characteristic % 2 == 0 &&
                    static_cast<long long>(comp.genus) == (2 - comp.euler_characteristic) / 2;
    covered.insert(covered.end(), comp.elements.begin(), comp.elements.end());
  }
  std::sort(covered.begin(), covered.end());
  components_ok = components_ok && covered == order.elements() && component_chi == chi;
  c.check("components", components_ok);
  c.check("genus", cert.genus == genus && (!cert.connected() || 2 * static_cast<long long>(genus) == 2 - chi));
  c.check("north-south", cert.north_south == roles.north_south);
  return report;
}

}  // namespace smale
