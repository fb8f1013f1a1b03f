#pragma once

// Dimension counts for covariants of holomorphic 2-differentials.
//
// For an ordinary curve with a p-group action the coefficient module that
// matters is ker Phi, where Phi sums the coordinates of the permutation
// modules F_p[G/G_i], one per branch point. Its long exact homology sequence
//
//   H_2(sum) -psi1-> H_2(G,k) -> H_1(ker Phi) -> H_1(sum) -psi2-> H_1(G,k)
//            -> (ker Phi)_G -> (sum)_G -> k -> 0
//
// gives dim H_1(G, ker Phi) = dim coker psi1 + dim ker psi2. All homology is
// taken with F_p coefficients, so the sequence is exact as written.

#include "equideform/covers.hpp"
#include "equideform/homology.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equideform {

enum class ImAlphaConvention {
  PaperCeilingFromE1,   // 3g-3 + sum ceil(2 sum_{i>=1} (e_i-1)/e_0)
  ClassicalFloorFromE0, // 3g-3 + sum floor(2 sum_{i>=0} (e_i-1)/e_0)
};

const char *convention_name(ImAlphaConvention c) noexcept;

struct ImAlphaResult {
  std::int64_t value = 0;
  ImAlphaConvention convention = ImAlphaConvention::PaperCeilingFromE1;
  std::vector<std::int64_t> local_terms;
  /// Riemann-Roch gives the count only when K_Y + D has positive degree.
  bool nonspecial = true;
  std::vector<std::string> diagnostics;
};

ImAlphaResult dim_im_alpha(const RamifiedCover &c, ImAlphaConvention convention);

struct Psi1Data {
  std::size_t source_dim = 0; // sum_i dim H_2(G_i, k)
  std::size_t target_dim = 0; // dim H_2(G, k)
  std::size_t rank = 0;
  std::size_t cokernel = 0;
};

struct Psi2Data {
  std::size_t source_dim = 0; // sum_i dim H_1(G_i, k)
  std::size_t target_dim = 0; // dim H_1(G, k)
  std::size_t rank = 0;
  std::size_t kernel = 0;
  /// dim of the intersection of the G_i with [G,G], tensored with k. Only
  /// filled in when G is elementary abelian.
  std::optional<std::size_t> group_theoretic_kernel;
};

/// dim H_2(-, Z) (x) F_p for G and each G_i; nullopt past the integral cap.
struct HopfModeH2 {
  std::optional<std::size_t> group;
  std::vector<std::optional<std::size_t>> subgroups;
};

struct PsiReport {
  Psi1Data psi1;
  Psi2Data psi2;
  HopfModeH2 hopf;
  std::vector<std::string> diagnostics;
};

struct PsiOptions {
  /// Homology degree used for psi1. Anything but 2 is a deliberate fault,
  /// used by negative-control tests of the verification suite.
  std::size_t psi1_degree = 2;
};

PsiReport psi_report(const FiniteGroup &g, std::uint32_t p, std::span<const Subgroup> subgroups,
                     const HomologyLimits &limits = {}, const PsiOptions &options = {});

struct H1KerPhi {
  std::size_t route_a = 0; // coker psi1 + ker psi2
  std::size_t route_b = 0; // H_1 of the kernel module directly
};

H1KerPhi dim_h1_ker_phi(const FiniteGroup &g, std::uint32_t p, std::span<const Subgroup> subgroups,
                        const HomologyLimits &limits = {});

struct Covariants {
  std::int64_t exact = 0;
  std::int64_t paper_plus1 = 0;
  std::int64_t paper_minus1 = 0;
};

/// Throws NoBranchPoints, NotPGroup, NotOrdinaryCompatible, SizeCapExceeded.
Covariants dim_covariants_ordinary(const RamifiedCover &c, const HomologyLimits &limits = {});

/// coker psi1 - (dim G/[G,G] (x) k - 1).
std::int64_t corollary_delta(const FiniteGroup &g, std::uint32_t p,
                             std::span<const Subgroup> subgroups, const HomologyLimits &limits = {});

std::vector<Subgroup> decomposition_groups(const RamifiedCover &c);

/// Everything at once, for the ordinary-covariants report.
struct DimensionReport {
  ImAlphaResult im_alpha;
  std::uint64_t degree_r_from_e0 = 0;
  std::uint64_t degree_r_from_e1 = 0;
  std::uint64_t genus_x = 0;
  std::int64_t ell_k_plus_a = 0;
  std::vector<std::uint64_t> a_coefficients;
  OrdinarityDiagnosis ordinarity;

  PsiReport psi;
  H1KerPhi h1_ker_phi;
  std::size_t h1_trivial = 0;   // dim H_1(G, k)
  std::size_t ker_phi_dim = 0;
  std::size_t ker_phi_coinvariants = 0;
  Covariants covariants;
  std::int64_t corollary_delta = 0;
  /// Hopf-mode delta, defined when every G_i has order p (then the Hopf-mode
  /// coker psi1 is all of H_2(G, Z) (x) k).
  std::optional<std::int64_t> corollary_delta_hopf;
  std::vector<std::string> diagnostics;
};

DimensionReport ordinary_report(const RamifiedCover &c, ImAlphaConvention convention,
                                const HomologyLimits &limits = {});

} // namespace equideform
