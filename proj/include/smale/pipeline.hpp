#pragma once

#include <optional>
#include <string>
#include <variant>

#include "smale/assembly.hpp"
#include "smale/error.hpp"

namespace smale {

struct RealizeOptions {
  MatchingStrategy strategy = MatchingStrategy::FirstFit;
  // Externally chosen cycles; validated against the conditions and balanced.
  std::optional<CycleAssignment> cycles;
};

// A principled refusal: the order is not realizable by this construction.
struct Refusal {
  std::string stage;
  std::string reason;
  ConnectivityReport connectivity;
};

using RealizeOutcome = std::variant<RealizationCertificate, Refusal>;

// Connectivity -> strip saddle relations -> cycles -> balance -> glue ->
// repair and surgery per saddle -> domains -> assemble -> handles.
// Invalid supplied cycles throw PreconditionViolated.
RealizeOutcome realize(const FiniteOrder& order, const RealizeOptions& options = {});

}  // namespace smale
