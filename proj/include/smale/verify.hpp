#pragma once

#include <string>
#include <vector>

#include "smale/assembly.hpp"

namespace smale {

struct VerificationReport {
  // Names of the checks that ran, in order.
  std::vector<std::string> checks;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Recomputes every typed invariant of a certificate from its raw data:
// cycle conditions and (*), boundary-cycle axioms, retraced boundaries,
// constructibility of each domain, the E-identity, counts, chi and genus.
VerificationReport verify_certificate(const RealizationCertificate& certificate);

}  // namespace smale
