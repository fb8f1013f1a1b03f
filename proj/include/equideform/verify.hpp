#pragma once

// Self-verification: brute-force and cross-module checks of every invariant
// the library relies on, run over the built-in catalog.

#include "equideform/dimensions.hpp"

#include <string>
#include <vector>

namespace equideform {

enum class VerifyScope { Fast, Full };

struct CheckResult {
  std::string family;
  std::string subject;
  bool passed = true;
  std::string detail;
};

struct VerifySummary {
  std::vector<CheckResult> checks;

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  bool ok() const noexcept { return failed() == 0; }
};

struct VerifyOptions {
  VerifyScope scope = VerifyScope::Fast;
  HomologyLimits limits;
  PsiOptions psi;
};

/// Check families, in run order.
const std::vector<std::string> &verify_families();

VerifySummary verify_suite(const VerifyOptions &options);

/// Single families, exposed for the acceptance suite.
std::vector<CheckResult> verify_shapiro(std::size_t max_order, const HomologyLimits &limits);
std::vector<CheckResult> verify_h1_abelianization(std::size_t max_order,
                                                  const HomologyLimits &limits);
std::vector<CheckResult> verify_h2_closed_form(VerifyScope scope, const HomologyLimits &limits);
/// Route A against route B and the coinvariants tail, over a fixed list of
/// (group, p, subgroups) configurations with |G| <= max_order.
std::vector<CheckResult> verify_exactness(std::size_t max_order, const HomologyLimits &limits,
                                          const PsiOptions &psi = {});
std::vector<CheckResult> verify_tame_consistency();

/// The configurations behind verify_exactness.
struct SubgroupConfiguration {
  std::string group_name;
  std::uint32_t p;
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
  std::string label;
};

std::vector<SubgroupConfiguration> exactness_configurations(std::size_t max_order);

} // namespace equideform
