#include "smale/domains.hpp"

#include <algorithm>
#include <numeric>

#include "smale/error.hpp"

namespace smale {

LengthProfile::LengthProfile(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) raise(ErrorCode::InvalidArgument, "length profile is empty");
  for (std::size_t n : lengths_) {
    if (n < 2 || n % 2 != 0) raise(ErrorCode::InvalidArgument, "boundary length " + std::to_string(n) + " is not even and positive");
  }
  std::sort(lengths_.begin(), lengths_.end());
}

std::size_t LengthProfile::total() const { return std::accumulate(lengths_.begin(), lengths_.end(), std::size_t{0}); }

std::size_t LengthProfile::congruence_class() const {
  // total and 4s are both even; add a multiple of 8 to stay unsigned.
  return (total() + 8 * components() - 4 * components()) % 8;
}

std::string to_string(const LengthProfile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.lengths().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(profile.lengths()[i]);
  }
  return out + ")";
}

std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::PrimitiveHorseshoe: return "primitive-horseshoe";
    case RecipeKind::PrimitiveFixedSaddle: return "primitive-fixed-saddle";
    case RecipeKind::PseudoAnosovDA: return "pseudo-anosov-da";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Constructible: return "constructible";
    case Verdict::Excluded: return "excluded";
    case Verdict::NotCovered: return "not-covered";
  }
  return "unknown";
}

std::string_view to_string(RepairTrick trick) {
  switch (trick) {
    case RepairTrick::Lengthen: return "lengthen";
    case RepairTrick::SplitCycle: return "split-cycle";
  }
  return "unknown";
}

bool is_exceptional(const LengthProfile& profile) {
  const auto& n = profile.lengths();
  const auto tens = std::count(n.begin(), n.end(), std::size_t{10});
  const auto sixes = std::count(n.begin(), n.end(), std::size_t{6});
  const auto fours = std::count(n.begin(), n.end(), std::size_t{4});
  return tens == 1 && sixes == 1 && static_cast<std::size_t>(tens + sixes + fours) == n.size();
}

Constructibility check_constructible(const LengthProfile& profile) {
  Constructibility out;
  const auto& n = profile.lengths();
  if (n == std::vector<std::size_t>{2}) {
    out.verdict = Verdict::Constructible;
    out.spec = DomainSpec{profile, 0, {RecipeKind::PrimitiveHorseshoe, {}, 0}};
    return out;
  }
  if (n == std::vector<std::size_t>{4}) {
    out.verdict = Verdict::Constructible;
    out.spec = DomainSpec{profile, 0, {RecipeKind::PrimitiveFixedSaddle, {}, 0}};
    return out;
  }
  if (std::find(n.begin(), n.end(), std::size_t{2}) != n.end()) {
    out.reason = "length-2 boundary outside the horseshoe primitive";
    return out;
  }
  if (profile.congruence_class() != 0) {
    out.reason = "sum of lengths is not 4s mod 8";
    return out;
  }
  if (is_exceptional(profile)) {
    out.verdict = Verdict::Excluded;
    out.reason = "exceptional (10,6,4,...) family";
    return out;
  }
  Recipe recipe{RecipeKind::PseudoAnosovDA, {}, 0};
  for (std::size_t len : n) {
    if (len == 4) {
      ++recipe.saddle_da_count;
    } else {
      recipe.singularity_prongs.push_back(len / 2);
    }
  }
  DomainSpec spec{profile, 0, recipe};
  spec.genus = domain_genus(spec);
  out.verdict = Verdict::Constructible;
  out.spec = std::move(spec);
  return out;
}

std::size_t domain_genus(const DomainSpec& spec) {
  if (spec.recipe.kind != RecipeKind::PseudoAnosovDA) return 0;
  // Euler-Poincare for the singular foliation: sum(P_i - 2) = 4g - 4.
  std::size_t excess = 0;
  for (std::size_t len : spec.profile.lengths()) {
    if (len < 4) raise(ErrorCode::NonIntegralGenus, "length-2 boundary in a pseudo-Anosov recipe");
    excess += len / 2 - 2;
  }
  if (excess % 4 != 0) raise(ErrorCode::NonIntegralGenus, "profile " + to_string(spec.profile) + " has no integral genus");
  return 1 + excess / 4;
}

std::size_t RepairLog::splits() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(),
                                                [](const RepairStep& s) { return s.trick == RepairTrick::SplitCycle; }));
}

std::size_t RepairLog::lengthenings() const { return steps.size() - splits(); }

RepairResult repair_profile(const LengthProfile& profile) {
  RepairResult result{profile, {}};
  if (check_constructible(profile).verdict == Verdict::Constructible) return result;

  auto apply = [&](RepairTrick trick, std::size_t length) {
    std::vector<std::size_t> next = result.profile.lengths();
    next.erase(std::find(next.begin(), next.end(), length));
    if (trick == RepairTrick::Lengthen) {
      next.push_back(length + 8);
    } else {
      next.push_back(4);
      next.push_back(length - 2);
    }
    RepairStep step{trick, length, result.profile, LengthProfile(std::move(next))};
    result.profile = step.after;
    result.log.steps.push_back(std::move(step));
  };

  // 2 -> 10 keeps the class mod 8.
  while (std::find(result.profile.lengths().begin(), result.profile.lengths().end(), std::size_t{2}) !=
         result.profile.lengths().end()) {
    apply(RepairTrick::Lengthen, 2);
  }
  // Each split moves (sum - 4s) by -2 mod 8; the largest entry is >= 6
  // whenever the class is non-zero.
  while (result.profile.congruence_class() != 0) {
    const std::size_t largest = result.profile.lengths().back();
    if (largest < 6) raise(ErrorCode::Internal, "no splittable boundary in " + to_string(result.profile));
    apply(RepairTrick::SplitCycle, largest);
  }
  if (is_exceptional(result.profile)) apply(RepairTrick::Lengthen, 6);

  if (check_constructible(result.profile).verdict != Verdict::Constructible) {
    raise(ErrorCode::Internal, "repair left " + to_string(result.profile) + " unconstructible");
  }
  return result;
}

}  // namespace smale
