#include "smale/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "smale/error.hpp"

namespace smale {

namespace {

// Corner t of a boundary cycle lies between sequence[2t+1] and sequence[2t+2];
// even t at a repeller, odd t at an attractor. A self-transition inserted
// right after the corner's beginning band keeps the chain intact.
struct Corner {
  ElementId owner{};
  std::size_t position = 0;
};

Corner corner_of(const BoundaryCycle& cycle, std::size_t t) {
  const auto& seq = cycle.sequence;
  const BandRef& begin = (t % 2 == 0) ? seq[2 * t + 1] : seq[2 * t + 2];
  return {begin.owner, begin.index + 1};
}

std::vector<BandRef> insert_bands(BandComplex& complex, ElementId owner, std::size_t position,
                                  const std::vector<Transition>& bands) {
  CyclicWord& word = complex.assignment.cycles[owner];
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(position), bands.begin(), bands.end());
  auto shift = [&](BandRef& ref) {
    if (ref.owner == owner && ref.index >= position) ref.index += bands.size();
  };
  for (auto& p : complex.gluing.pairs) {
    shift(p.attractor_band);
    shift(p.repeller_band);
  }
  std::vector<BandRef> out;
  for (std::size_t i = 0; i < bands.size(); ++i) out.push_back({owner, position + i});
  return out;
}

std::map<ElementId, std::vector<std::size_t>> profiles(const BandComplex& complex, const FiniteOrder& order) {
  std::map<ElementId, std::vector<std::size_t>> out;
  for (const auto& [s, cycles] : trace_boundary_cycles(complex.assignment, order, complex.gluing)) {
    out[s] = boundary_profile(cycles);
  }
  return out;
}

// Inserts `count` self-transitions at a repeller corner and an attractor
// corner and glues them by `pairing`.
SurgeryRecord graft(BandComplex& complex, ElementId saddle, const Corner& up, const Corner& down,
                    const std::vector<std::size_t>& pairing) {
  const std::size_t count = pairing.size();
  const std::vector<Transition> at_repeller(count, Transition{saddle, down.owner, saddle});
  const std::vector<Transition> at_attractor(count, Transition{saddle, up.owner, saddle});
  const auto rep = insert_bands(complex, up.owner, up.position, at_repeller);
  const auto att = insert_bands(complex, down.owner, down.position, at_attractor);
  SurgeryRecord record;
  record.saddle = saddle;
  for (std::size_t i = 0; i < count; ++i) {
    record.inserted.push_back({att[pairing[i]], rep[i]});
    complex.gluing.pairs.push_back(record.inserted.back());
  }
  std::sort(complex.gluing.pairs.begin(), complex.gluing.pairs.end(),
            [](const GluedPair& a, const GluedPair& b) { return a.attractor_band < b.attractor_band; });
  return record;
}

}  // namespace

SurgeryRecord apply_repair_step(BandComplex& complex, const FiniteOrder& order, ElementId saddle,
                                const RepairStep& step) {
  const auto boundaries = trace_boundary_cycles(complex.assignment, order, complex.gluing);
  auto it = boundaries.find(saddle);
  if (it == boundaries.end()) raise(ErrorCode::Internal, "saddle '" + order.name(saddle) + "' has no boundary");
  const BoundaryCycle* target = nullptr;
  for (const auto& c : it->second) {
    if (c.length() == step.cycle_length) {
      target = &c;
      break;
    }
  }
  if (!target) raise(ErrorCode::Internal, "no boundary cycle of length " + std::to_string(step.cycle_length));

  auto expected = profiles(complex, order);
  expected[saddle] = step.after.lengths();

  const std::size_t n = target->length();
  // Candidate (repeller corner, attractor corner) pairs and pairings.
  std::vector<std::pair<std::size_t, std::size_t>> corner_pairs;
  std::vector<std::vector<std::size_t>> pairings;
  if (step.trick == RepairTrick::Lengthen) {
    for (std::size_t t = 0; t < n; t += 2) {
      corner_pairs.emplace_back(t, (t + 1) % n);
      corner_pairs.emplace_back(t, (t + n - 1) % n);
    }
    std::vector<std::size_t> perm{0, 1, 2, 3};
    do {
      pairings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (std::size_t t = 0; t < n; t += 2) {
      corner_pairs.emplace_back(t, (t + 3) % n);
      corner_pairs.emplace_back(t, (t + n - 3) % n);
    }
    pairings.push_back({0});
  }

  for (const auto& [rc, ac] : corner_pairs) {
    for (const auto& pairing : pairings) {
      BandComplex trial = complex;
      SurgeryRecord record = graft(trial, saddle, corner_of(*target, rc), corner_of(*target, ac), pairing);
      if (profiles(trial, order) != expected) continue;
      record.trick = step.trick;
      record.cycle_length = step.cycle_length;
      complex = std::move(trial);
      return record;
    }
  }
  raise(ErrorCode::Internal, std::string(to_string(step.trick)) + " surgery found no realization on '" +
                                 order.name(saddle) + "'");
}

}  // namespace smale
