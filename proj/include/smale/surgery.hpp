#pragma once

#include <vector>

#include "smale/bands.hpp"
#include "smale/domains.hpp"

namespace smale {

// Cycles plus a complete band gluing; boundary cycles are derived by tracing.
struct BandComplex {
  CycleAssignment assignment;
  BandGluing gluing;
};

struct SurgeryRecord {
  ElementId saddle{};
  RepairTrick trick = RepairTrick::Lengthen;
  std::size_t cycle_length = 0;
  // Newly inserted self-transition bands, as pairs glued to each other.
  std::vector<GluedPair> inserted;
};

// Inserts self-transition bands of `saddle` into corners of one of its
// boundary cycles of length `step.cycle_length` and glues them so that the
// saddle's profile becomes `step.after`; every other saddle keeps its
// boundary cycles. Lengthen adds four glued pairs inside one corner pair,
// SplitCycle one pair joining corners three arcs apart.
SurgeryRecord apply_repair_step(BandComplex& complex, const FiniteOrder& order, ElementId saddle,
                                const RepairStep& step);

}  // namespace smale
