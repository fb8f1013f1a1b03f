#include "equideform/dimensions.hpp"

#include "equideform/error.hpp"

namespace equideform {

namespace {

std::vector<ModuleMorphism> summation_components(const FiniteGroup &g, std::uint32_t p,
                                                 std::span<const Subgroup> subgroups) {
  const auto k = trivial_module(g, p);
  std::vector<ModuleMorphism> parts;
  for (const auto &h : subgroups) {
    if (!(h.parent() == g)) throw Error(ErrorKind::NotSubgroup, "subgroup of a different group");
    auto perm = permutation_module(h, p);
    const std::size_t dim = perm.dim();
    parts.emplace_back(std::move(perm), k, PrimeFieldMatrix(1, dim, p, std::vector<std::uint32_t>(dim, 1)));
  }
  return parts;
}

std::optional<std::size_t> hopf_or_skip(const FiniteGroup &g, std::uint32_t p,
                                        const HomologyLimits &limits, const std::string &label,
                                        std::vector<std::string> &diagnostics) {
  try {
    return integral_h2_p_rank(g, p, limits);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::SizeCapExceeded) throw;
    diagnostics.push_back("hopf-mode H2 of " + label + " skipped: " + e.what());
    return std::nullopt;
  }
}

void require_ordinary_inputs(const RamifiedCover &c) {
  if (c.branch_points.empty())
    throw Error(ErrorKind::NoBranchPoints, "the covariants count needs at least one branch point");
  require_valid(c);
  if (!is_p_power(c.group.order(), c.p))
    throw Error(ErrorKind::NotPGroup, "|G| = " + std::to_string(c.group.order()) +
                                          " is not a power of p = " + std::to_string(c.p));
  const auto d = ordinarity_check(c);
  if (!d.compatible) throw Error(ErrorKind::NotOrdinaryCompatible, d.reasons.front());
}

struct OrdinaryPieces {
  PsiReport psi;
  std::size_t h1_trivial = 0;
  std::size_t ker_phi_dim = 0;
  std::size_t ker_phi_h1 = 0;
  std::size_t ker_phi_coinvariants = 0;
  Covariants covariants;
};

OrdinaryPieces compute_ordinary(const RamifiedCover &c, const HomologyLimits &limits) {
  require_ordinary_inputs(c);
  const auto subgroups = decomposition_groups(c);
  OrdinaryPieces out;
  out.psi = psi_report(c.group, c.p, subgroups, limits);
  out.h1_trivial = out.psi.psi2.target_dim;
  const auto ker = kernel_module(build_phi_morphism(c.group, c.p, subgroups));
  out.ker_phi_dim = ker.dim();
  out.ker_phi_h1 = homology_dim(ker, 1, limits);
  out.ker_phi_coinvariants = coinvariants_dim(ker);

  const auto r = static_cast<std::int64_t>(c.branch_points.size());
  const auto gy = static_cast<std::int64_t>(c.quotient_genus);
  out.covariants.exact = static_cast<std::int64_t>(out.ker_phi_h1) + 3 * gy - 3 + 2 * r -
                         static_cast<std::int64_t>(out.ker_phi_coinvariants);
  std::int64_t log_sum = 0;
  for (const auto &h : subgroups) log_sum += static_cast<std::int64_t>(*log_p(h.order(), c.p));
  const auto ab = static_cast<std::int64_t>(abelianization_p_rank(c.group, c.p));
  out.covariants.paper_plus1 =
      static_cast<std::int64_t>(out.psi.psi1.cokernel) + 3 * gy - 3 + r + log_sum - ab + 1;
  out.covariants.paper_minus1 = out.covariants.paper_plus1 - 2;
  return out;
}

} // namespace

const char *convention_name(ImAlphaConvention c) noexcept {
  return c == ImAlphaConvention::PaperCeilingFromE1 ? "paper_ceiling_from_e1"
                                                    : "classical_floor_from_e0";
}

std::vector<Subgroup> decomposition_groups(const RamifiedCover &c) {
  std::vector<Subgroup> out;
  for (const auto &b : c.branch_points) out.push_back(b.decomposition);
  return out;
}

ImAlphaResult dim_im_alpha(const RamifiedCover &c, ImAlphaConvention convention) {
  require_valid(c);
  ImAlphaResult r;
  r.convention = convention;
  const auto gy = static_cast<std::int64_t>(c.quotient_genus);
  std::int64_t deg_d = 0;
  for (const auto &b : c.branch_points) {
    const auto e0 = static_cast<std::int64_t>(b.filtration[0]);
    std::int64_t sum = 0;
    const std::size_t first = convention == ImAlphaConvention::PaperCeilingFromE1 ? 1 : 0;
    for (std::size_t i = first; i < b.filtration.size(); ++i)
      sum += static_cast<std::int64_t>(b.filtration[i]) - 1;
    // 2 * sum / e0 rounded up or down; numerator is nonnegative.
    const std::int64_t local = convention == ImAlphaConvention::PaperCeilingFromE1
                                   ? (2 * sum + e0 - 1) / e0
                                   : (2 * sum) / e0;
    r.local_terms.push_back(local);
    deg_d += local;
  }
  r.value = 3 * gy - 3 + deg_d;
  if (2 * gy - 2 + deg_d <= 0) {
    r.nonspecial = false;
    r.diagnostics.push_back("nonspecial hypothesis violated: deg(K_Y + D) = " +
                            std::to_string(2 * gy - 2 + deg_d) +
                            " <= 0, the Riemann-Roch count may be wrong");
  }
  return r;
}

PsiReport psi_report(const FiniteGroup &g, std::uint32_t p, std::span<const Subgroup> subgroups,
                     const HomologyLimits &limits, const PsiOptions &options) {
  if (subgroups.empty())
    throw Error(ErrorKind::EmptySubgroupList, "psi maps need at least one subgroup");
  require_prime(p);
  const auto parts = summation_components(g, p, subgroups);
  PsiReport out;

  const auto h1 = induced_homology_map_rank(parts, 1, limits);
  out.psi2 = {h1.source_dim, h1.target_dim, h1.rank, h1.source_dim - h1.rank, std::nullopt};
  const auto h2 = induced_homology_map_rank(parts, options.psi1_degree, limits);
  out.psi1 = {h2.source_dim, h2.target_dim, h2.rank, h2.target_dim - h2.rank};

  if (is_elementary_abelian(whole_group(g), p)) {
    const auto comm = commutator_subgroup(g);
    std::vector<Element> common;
    for (auto x : comm.members()) {
      bool everywhere = true;
      for (const auto &h : subgroups) everywhere = everywhere && h.contains(x);
      if (everywhere) common.push_back(x);
    }
    out.psi2.group_theoretic_kernel =
        abelianization_p_rank(Subgroup(g, std::move(common)).as_group(), p);
    if (*out.psi2.group_theoretic_kernel != out.psi2.kernel)
      out.diagnostics.push_back("group-theoretic ker psi2 (common part of the G_i and [G,G]) = " +
                                std::to_string(*out.psi2.group_theoretic_kernel) +
                                " differs from the linear-algebra value " +
                                std::to_string(out.psi2.kernel));
  }

  out.hopf.group = hopf_or_skip(g, p, limits, "G", out.diagnostics);
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    out.hopf.subgroups.push_back(
        hopf_or_skip(subgroups[i].as_group(), p, limits, "G_" + std::to_string(i + 1), out.diagnostics));
  return out;
}

H1KerPhi dim_h1_ker_phi(const FiniteGroup &g, std::uint32_t p, std::span<const Subgroup> subgroups,
                        const HomologyLimits &limits) {
  const auto psi = psi_report(g, p, subgroups, limits);
  const auto ker = kernel_module(build_phi_morphism(g, p, subgroups));
  return {psi.psi1.cokernel + psi.psi2.kernel, homology_dim(ker, 1, limits)};
}

Covariants dim_covariants_ordinary(const RamifiedCover &c, const HomologyLimits &limits) {
  return compute_ordinary(c, limits).covariants;
}

std::int64_t corollary_delta(const FiniteGroup &g, std::uint32_t p,
                             std::span<const Subgroup> subgroups, const HomologyLimits &limits) {
  const auto psi = psi_report(g, p, subgroups, limits);
  return static_cast<std::int64_t>(psi.psi1.cokernel) -
         (static_cast<std::int64_t>(abelianization_p_rank(g, p)) - 1);
}

DimensionReport ordinary_report(const RamifiedCover &c, ImAlphaConvention convention,
                                const HomologyLimits &limits) {
  DimensionReport rep;
  rep.im_alpha = dim_im_alpha(c, convention);
  rep.degree_r_from_e0 = ramification_divisor_degree(c, IndexStart::FromE0);
  rep.degree_r_from_e1 = ramification_divisor_degree(c, IndexStart::FromE1);
  rep.genus_x = genus_via_riemann_hurwitz(c);
  rep.ordinarity = ordinarity_check(c);

  auto pieces = compute_ordinary(c, limits);
  const auto ell = ell_K_plus_A(c);
  rep.ell_k_plus_a = ell.dimension;
  rep.a_coefficients = ell.coefficients;

  rep.psi = std::move(pieces.psi);
  rep.h1_trivial = pieces.h1_trivial;
  rep.h1_ker_phi = {rep.psi.psi1.cokernel + rep.psi.psi2.kernel, pieces.ker_phi_h1};
  rep.ker_phi_dim = pieces.ker_phi_dim;
  rep.ker_phi_coinvariants = pieces.ker_phi_coinvariants;
  rep.covariants = pieces.covariants;
  const auto ab = static_cast<std::int64_t>(abelianization_p_rank(c.group, c.p));
  rep.corollary_delta = static_cast<std::int64_t>(rep.psi.psi1.cokernel) - (ab - 1);

  bool all_order_p = true;
  for (const auto &b : c.branch_points) all_order_p = all_order_p && b.decomposition.order() == c.p;
  if (all_order_p && rep.psi.hopf.group)
    rep.corollary_delta_hopf = static_cast<std::int64_t>(*rep.psi.hopf.group) - (ab - 1);

  auto &diag = rep.diagnostics;
  diag.insert(diag.end(), rep.im_alpha.diagnostics.begin(), rep.im_alpha.diagnostics.end());
  diag.insert(diag.end(), rep.psi.diagnostics.begin(), rep.psi.diagnostics.end());
  if (rep.h1_ker_phi.route_a != rep.h1_ker_phi.route_b)
    diag.push_back("exactness violated: coker psi1 + ker psi2 = " +
                   std::to_string(rep.h1_ker_phi.route_a) + " but H1(G, ker Phi) = " +
                   std::to_string(rep.h1_ker_phi.route_b));
  const auto r = c.branch_points.size();
  if (rep.ker_phi_coinvariants != rep.h1_trivial - rep.psi.psi2.rank + r - 1)
    diag.push_back("tail identity violated for (ker Phi)_G");
  if (rep.covariants.exact != rep.covariants.paper_plus1)
    diag.push_back("closed form with +1 disagrees with the exact-sequence count");
  if (!rep.corollary_delta_hopf)
    diag.push_back("hopf-mode corollary_delta needs every G_i of order p and a hopf-mode H2 of G");
  diag.push_back("corollary_delta presumes p > 3 and an ordinary realization of the data; "
                 "neither is checked");
  if (c.p <= 3) diag.push_back("p <= 3: corollary_delta is outside the range where it should vanish");
  return rep;
}

} // namespace equideform
