#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smale {

// Multiset of boundary-circle lengths of a domain, kept sorted ascending.
class LengthProfile {
 public:
  LengthProfile() = default;
  // Throws InvalidArgument unless non-empty with every entry even and >= 2.
  explicit LengthProfile(std::vector<std::size_t> lengths);

  const std::vector<std::size_t>& lengths() const { return lengths_; }
  std::size_t components() const { return lengths_.size(); }
  std::size_t total() const;
  // (sum - 4 s) mod 8
  std::size_t congruence_class() const;

  bool operator==(const LengthProfile&) const = default;

 private:
  std::vector<std::size_t> lengths_;
};

std::string to_string(const LengthProfile& profile);

enum class RecipeKind { PrimitiveHorseshoe, PrimitiveFixedSaddle, PseudoAnosovDA };

std::string_view to_string(RecipeKind kind);

struct Recipe {
  RecipeKind kind = RecipeKind::PrimitiveHorseshoe;
  // Prongs of each opened singularity (n_i / 2 for entries >= 6).
  std::vector<std::size_t> singularity_prongs;
  // Length-4 boundaries obtained by DA at regular fixed saddles.
  std::size_t saddle_da_count = 0;

  bool operator==(const Recipe&) const = default;
};

struct DomainSpec {
  LengthProfile profile;
  std::size_t genus = 0;
  Recipe recipe;

  bool operator==(const DomainSpec&) const = default;
};

enum class Verdict { Constructible, Excluded, NotCovered };

std::string_view to_string(Verdict verdict);

struct Constructibility {
  Verdict verdict = Verdict::NotCovered;
  std::optional<DomainSpec> spec;
  std::string reason;
};

// The (10, 6, 4, 4, ...) family, compared as a multiset.
bool is_exceptional(const LengthProfile& profile);

Constructibility check_constructible(const LengthProfile& profile);

// 0 for primitives, 1 + sum(n_i/2 - 2)/4 otherwise. Throws NonIntegralGenus.
std::size_t domain_genus(const DomainSpec& spec);

enum class RepairTrick { Lengthen, SplitCycle };

std::string_view to_string(RepairTrick trick);

struct RepairStep {
  RepairTrick trick = RepairTrick::Lengthen;
  // Length of the boundary cycle acted on. Lengthen turns it into length + 8;
  // SplitCycle turns it into (4, length - 2).
  std::size_t cycle_length = 0;
  LengthProfile before;
  LengthProfile after;
};

struct RepairLog {
  std::vector<RepairStep> steps;

  std::size_t splits() const;
  std::size_t lengthenings() const;
};

struct RepairResult {
  LengthProfile profile;
  RepairLog log;
};

// Total; returns the input unchanged when it is already constructible.
RepairResult repair_profile(const LengthProfile& profile);

}  // namespace smale
