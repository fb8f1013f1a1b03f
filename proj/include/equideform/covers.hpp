#pragma once

// Ramification data for a Galois cover X -> Y = X/G described combinatorially:
// a characteristic, the group, the genus of Y and one entry per branch point.

#include "equideform/groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equideform {

/// Orders e_0 >= e_1 >= ... >= e_n >= 2 of the nontrivial groups in the
/// lower ramification filtration at a point above the branch point, and the
/// decomposition group G_0 at that point.
struct BranchPoint {
  std::vector<std::uint64_t> filtration;
  Subgroup decomposition;

  /// Some e_i with i >= 1 is present.
  bool is_wild() const noexcept { return filtration.size() >= 2; }
};

struct RamifiedCover {
  std::uint32_t p;
  FiniteGroup group;
  std::uint64_t quotient_genus;
  std::vector<BranchPoint> branch_points;
};

struct Violation {
  std::string code;
  std::string message;
};

/// Every broken invariant, in a fixed order. Empty means valid.
std::vector<Violation> validate_cover(const RamifiedCover &c);

/// Throws InvalidCover with the first violation.
void require_valid(const RamifiedCover &c);

/// Where the sum over ramification groups starts.
enum class IndexStart { FromE0, FromE1 };

const char *index_start_name(IndexStart s) noexcept;

/// deg R = sum_k (|G| / e_0^(k)) * sum_i (e_i^(k) - 1).
std::uint64_t ramification_divisor_degree(const RamifiedCover &c,
                                          IndexStart start = IndexStart::FromE0);

/// Riemann-Hurwitz: 2 g_X - 2 = |G| (2 g_Y - 2) + deg R, deg R from e_0.
std::uint64_t genus_via_riemann_hurwitz(const RamifiedCover &c);

struct OrdinarityDiagnosis {
  bool compatible = true;
  std::vector<std::string> reasons;
};

/// Whether the data can come from an ordinary curve with a p-group action:
/// no e_2 term, elementary abelian decomposition groups, |G| a power of p.
OrdinarityDiagnosis ordinarity_check(const RamifiedCover &c);

struct CanonicalPlusA {
  std::int64_t dimension;                // g_Y - 1 + r + s
  std::vector<std::uint64_t> coefficients; // lambda_i: 1 tame, 2 wild
  std::size_t wild_points;               // s
};

/// l(K + A) on Y for A = sum lambda_i b_i. Throws NoBranchPoints when r = 0.
CanonicalPlusA ell_K_plus_A(const RamifiedCover &c);

} // namespace equideform
