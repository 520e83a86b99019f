// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "instances.hpp"
#include "posets.hpp"
#include "random_cycles.hpp"
#include "smale/gradient.hpp"
#include "smale/obstruction.hpp"
#include "smale/pipeline.hpp"
#include "smale/verify.hpp"

using namespace smale;
using namespace smale::testing;

namespace {

// Collects the first few failure messages of one criterion.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::ostringstream first;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  const bool ok = t.failures == 0 && t.cases > 0;
  if (!ok) ++failed_criteria;
  std::printf("%s %d %s (%zu checks", ok ? "PASS" : "FAIL", number, title.c_str(), t.cases);
  if (t.failures) std::printf(", %zu failed: %s", t.failures, t.first.str().c_str());
  std::printf(")\n");
  std::fflush(stdout);
}

std::optional<RealizationCertificate> certificate_of(const RealizeOutcome& outcome) {
  if (const auto* c = std::get_if<RealizationCertificate>(&outcome)) return *c;
  return std::nullopt;
}

bool all_domains_have(const RealizationCertificate& c, std::vector<std::size_t> lengths) {
  if (c.domains.size() != 2) return false;
  for (const auto& [saddle, dom] : c.domains) {
    if (dom.spec.profile.lengths() != lengths) return false;
  }
  return true;
}

LengthProfile random_profile(std::mt19937& rng) {
  const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  std::vector<std::size_t> n;
  for (std::size_t i = 0; i < s; ++i) n.push_back(2 * std::uniform_int_distribution<std::size_t>(1, 12)(rng));
  return LengthProfile(std::move(n));
}

void check_embeddings(Tally& t, const LevelGraph& graph, const std::string& label) {
  if (graph.edges.empty() || !graph.connected()) return;
  const auto embeddings = enumerate_embeddings(graph, {graph.edges.size(), 1});
  const Multigraph primal = graph.shape();
  t.check(embeddings.size() == rotation_system_count(graph), label + ": not every rotation system enumerated");
  for (const Embedding& e : embeddings) {
    const long long v = static_cast<long long>(graph.vertices.size());
    const long long edges = static_cast<long long>(graph.edges.size());
    const long long f = static_cast<long long>(e.faces.size());
    const long long chi = v - edges + f;
    t.check(chi <= 2 && chi % 2 == 0 && chi == 2 - 2 * static_cast<long long>(e.genus),
            label + ": V-E+F=" + std::to_string(chi) + " genus " + std::to_string(e.genus));
    t.check(isomorphic(dual_of_dual(graph, e), primal), label + ": dual of dual differs");
  }
}

}  // namespace

int main() {
  const FiniteOrder d = diamond();

  criterion(1, "sphere example", [&](Tally& t) {
    const auto c = certificate_of(realize(d, {MatchingStrategy::FirstFit, sphere_cycles(d)}));
    t.check(c.has_value(), "refused");
    if (!c) return;
    t.check(c->euler_characteristic == 2, "chi " + std::to_string(c->euler_characteristic));
    t.check(c->genus == 0, "genus " + std::to_string(c->genus));
    t.check(all_domains_have(*c, {2}), "domain profiles");
    t.check(c->edges == 2, "E " + std::to_string(c->edges));
    t.check(c->vertices == 2, "V " + std::to_string(c->vertices));
  });

  criterion(2, "torus example", [&](Tally& t) {
    const auto c = certificate_of(realize(d, {MatchingStrategy::FirstFit, torus_cycles(d)}));
    t.check(c.has_value(), "refused");
    if (!c) return;
    t.check(c->euler_characteristic == 0, "chi " + std::to_string(c->euler_characteristic));
    t.check(c->genus == 1, "genus " + std::to_string(c->genus));
    t.check(all_domains_have(*c, {4}), "domain profiles");
    t.check(c->edges == 4, "E " + std::to_string(c->edges));
  });

  criterion(3, "connectivity necessity", [&](Tally& t) {
    const auto impossible = realize(impossible_order());
    const auto* refusal = std::get_if<Refusal>(&impossible);
    t.check(refusal && refusal->stage == "connectivity", "impossibleorder not refused at connectivity");
    const ViolationReport left = check_necessary(obstruction_left());
    t.check(left.fires(Rule::Connectivity), "left: connectivity");
    t.check(left.fires(Rule::ChainDepth), "left: repeller chain consequence");
    t.check(check_necessary(obstruction_middle()).fires(Rule::R2), "middle: R2");
    t.check(check_necessary(obstruction_right()).fires(Rule::R1), "right: R1");
    for (const FiniteOrder& o : {obstruction_left(), obstruction_middle(), obstruction_right()}) {
      t.check(std::holds_alternative<Refusal>(realize(o)), "obstruction order realized");
    }
  });

  std::vector<RealizationCertificate> certificates;
  criterion(4, "sufficiency over all orders with at most 6 elements", [&](Tally& t) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const Relation& gt : unlabelled_posets(n)) {
        FiniteOrder o;
        if (!realizable_shape(spec_of(gt), &o)) continue;
        const std::string label = canonical_form(gt);
        const auto c = certificate_of(realize(o));
        t.check(c.has_value(), "refused " + label);
        if (!c) continue;
        const VerificationReport r = verify_certificate(*c);
        t.check(r.passed(), "verification " + label + (r.failures.empty() ? "" : ": " + r.failures.front()));
        certificates.push_back(*c);
      }
    }
  });

  criterion(5, "constructibility arithmetic", [&](Tally& t) {
    t.check(check_constructible(LengthProfile({6, 10})).verdict == Verdict::Excluded, "(6,10) accepted");
    for (std::size_t fours = 0; fours < 6; ++fours) {
      std::vector<std::size_t> n{10, 6};
      n.insert(n.end(), fours, 4);
      t.check(check_constructible(LengthProfile(n)).verdict != Verdict::Constructible,
              "exceptional family with " + std::to_string(fours) + " fours accepted");
    }
    std::mt19937 rng(1000);
    std::size_t accepted = 0;
    for (int i = 0; i < 1000; ++i) {
      const LengthProfile p = random_profile(rng);
      const auto& n = p.lengths();
      const bool primitive = n == std::vector<std::size_t>{2} || n == std::vector<std::size_t>{4};
      const bool has_two = std::find(n.begin(), n.end(), std::size_t{2}) != n.end();
      const bool expected = primitive || (!has_two && p.congruence_class() == 0 && !is_exceptional(p));
      const bool constructible = check_constructible(p).verdict == Verdict::Constructible;
      t.check(constructible == expected, "verdict on " + to_string(p));
      accepted += constructible;

      const RepairResult r = repair_profile(p);
      const auto twos = static_cast<std::size_t>(std::count(n.begin(), n.end(), std::size_t{2}));
      t.check(check_constructible(r.profile).verdict == Verdict::Constructible, "repair of " + to_string(p));
      t.check(r.log.splits() <= 3, "splits for " + to_string(p));
      t.check(r.log.lengthenings() <= twos + 1, "lengthenings for " + to_string(p));
    }
    t.check(accepted > 0, "no random profile was constructible");
  });

  criterion(6, "balancing", [&](Tally& t) {
    std::mt19937 rng(500);
    int exercised = 0;
    while (exercised < 500) {
      FiniteOrder o;
      if (!realizable_shape(random_order_spec(rng, 7, 0.4), &o)) continue;
      CycleAssignment a = build_initial_cycles(o);
      const int injections = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int k = 0; k < injections; ++k) inject_imbalance(a, o, rng);
      if (!check_cycle_conditions(o, a).empty()) {
        t.check(false, "injection broke conditions 1/2");
        continue;
      }
      const std::size_t deficit = star_deficit(a, o);
      const BalanceResult b = balance_cycles(a, o);
      t.check(verify_star(b.assignment, o).passed, "balance condition after balancing");
      t.check(b.splices.size() == deficit,
              "splices " + std::to_string(b.splices.size()) + " vs deficit " + std::to_string(deficit));
      ++exercised;
    }
  });

  criterion(7, "band-gluing oracle", [&](Tally& t) {
    const std::vector<std::pair<std::string, FiniteOrder>> orders{
        {"diamond", d},
        {"three-chain", three_chain()},
        {"one saddle, two attractors", load({"A", "s", "w1", "w2"}, {{"A", "s"}, {"s", "w1"}, {"s", "w2"}})},
        {"two-repellers", two_repellers()},
    };
    for (const auto& [name, o] : orders) {
      for (const CycleAssignment& a : balanced_assignments(o, 10)) {
        const auto oracle = axiom_satisfying_matchings(a, o);
        try {
          const GluingResult g = glue_bands(a, o);
          BandGluing sorted = g.gluing;
          std::sort(sorted.pairs.begin(), sorted.pairs.end(),
                    [](const GluedPair& x, const GluedPair& y) { return x.attractor_band < y.attractor_band; });
          t.check(std::find(oracle.begin(), oracle.end(), sorted) != oracle.end(), name + ": matching not in oracle");
          t.check(verify_boundary_cycles(g.gluing, g.boundaries, a, o).passed, name + ": partition/axioms");
        } catch (const Error& e) {
          t.check(oracle.empty(), name + ": glue failed although a matching exists: " + e.what());
        }
      }
    }
  });

  criterion(8, "gradient-like verdicts and duality", [&](Tally& t) {
    const GradientVerdict dv = check_gradient_like(d);
    t.check(dv.realizable && dv.witness && dv.witness->embedding.genus == 1, "diamond not realizable at genus 1");
    if (dv.witness) {
      t.check(isomorphic(dv.witness->dual, dv.graphs.lowest.shape()), "diamond witness dual");
      t.check(isomorphic(dual_of_dual(dv.graphs.highest, dv.witness->embedding), dv.graphs.highest.shape()),
              "diamond witness involution");
    }
    for (const auto& [name, o] : std::vector<std::pair<std::string, FiniteOrder>>{{"three-chain", three_chain()},
                                                                                 {"two-repellers", two_repellers()}}) {
      const GradientVerdict v = check_gradient_like(o);
      t.check(!v.realizable, name + " realizable");
      t.check(v.max_genus == v.graphs.highest.edges.size(), name + " genus bound");
    }
    check_embeddings(t, dv.graphs.highest, "diamond highest");
  });

  criterion(9, "Euler consistency", [&](Tally& t) {
    // Every embedding of every connected level graph of the small orders.
    for (std::size_t n = 2; n <= 6; ++n) {
      for (const Relation& gt : unlabelled_posets(n)) {
        FiniteOrder o;
        if (!realizable_shape(spec_of(gt), &o)) continue;
        try {
          const LevelGraphs g = level_graphs(o);
          check_embeddings(t, g.highest, canonical_form(gt) + " highest");
          check_embeddings(t, g.lowest, canonical_form(gt) + " lowest");
        } catch (const Error&) {
        }
      }
    }
    t.check(!certificates.empty(), "no certificates from the sufficiency suite");
    for (const auto& c : certificates) {
      t.check(c.euler_characteristic <= 2 && c.euler_characteristic % 2 == 0,
              "certificate chi " + std::to_string(c.euler_characteristic));
      for (const auto& comp : c.components) {
        t.check(comp.euler_characteristic <= 2 && comp.euler_characteristic % 2 == 0, "component chi");
      }
    }
  });

  return failed_criteria == 0 ? 0 : 1;
}
