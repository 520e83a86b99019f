#include "smale/pipeline.hpp"

#include "smale/surgery.hpp"

namespace smale {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

RealizeOutcome realize(const FiniteOrder& order, const RealizeOptions& options) {
  ConnectivityReport connectivity = check_connectivity(order);
  if (!connectivity.passed()) {
    std::string failing;
    for (const auto& e : connectivity.entries) {
      if (e.passed) continue;
      if (!failing.empty()) failing += ", ";
      failing += order.name(e.element);
    }
    return Refusal{"connectivity", "connectivity condition fails at " + failing, std::move(connectivity)};
  }

  const FiniteOrder stripped = order.without_saddle_relations();

  CycleAssignment initial;
  if (options.cycles) {
    const auto violations = check_cycle_conditions(stripped, *options.cycles);
    if (!violations.empty()) raise(ErrorCode::PreconditionViolated, "supplied cycles: " + join(violations));
    initial = *options.cycles;
  } else {
    initial = build_initial_cycles(stripped);
  }

  BalanceResult balanced = balance_cycles(initial, stripped);
  GluingResult glued = glue_bands(balanced.assignment, stripped, options.strategy);

  BandComplex complex{balanced.assignment, glued.gluing};
  std::map<ElementId, SaddleDomain> domains;
  for (const auto& [saddle, cycles] : glued.boundaries) {
    SaddleDomain domain;
    domain.saddle = saddle;
    domain.traced_profile = LengthProfile(boundary_profile(cycles));
    RepairResult repaired = repair_profile(domain.traced_profile);
    for (const RepairStep& step : repaired.log.steps) {
      domain.surgeries.push_back(apply_repair_step(complex, stripped, saddle, step));
    }
    domain.repairs = std::move(repaired.log);
    Constructibility verdict = check_constructible(repaired.profile);
    if (verdict.verdict != Verdict::Constructible || !verdict.spec) {
      raise(ErrorCode::Internal, "repaired profile " + to_string(repaired.profile) + " is not constructible");
    }
    domain.spec = *verdict.spec;
    domains.emplace(saddle, std::move(domain));
  }

  BoundaryCycles boundaries = trace_boundary_cycles(complex.assignment, stripped, complex.gluing);
  RealizationCertificate cert = assemble(stripped, complex.assignment, complex.gluing, boundaries, std::move(domains));
  cert = add_saddle_handles(std::move(cert), order);
  cert.strategy = options.strategy;
  cert.cycles_supplied = options.cycles.has_value();
  cert.balance_splices = balanced.splices.size();
  return cert;
}

}  // namespace smale
