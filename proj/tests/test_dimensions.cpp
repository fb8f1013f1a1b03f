#include "equideform/catalog.hpp"
#include "equideform/dimensions.hpp"
#include "equideform/verify.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace equideform;

namespace {

Subgroup gen(const FiniteGroup &g, Element x) {
  const std::vector<Element> gens{x};
  return subgroup_generated(g, gens);
}

RamifiedCover cp_cover(std::uint32_t p, std::size_t r) {
  const auto g = build_group(GroupSpec::cyclic(p));
  RamifiedCover c{p, g, 2, {}};
  for (std::size_t i = 0; i < r; ++i) c.branch_points.push_back({{p, p}, whole_group(g)});
  return c;
}

// psi ranks straight from the naive oracle: H_n of a sum is the sum, so the
// rank of the assembled Phi is what the oracle computes on the assembled map.
std::pair<std::size_t, std::size_t> oracle_psi(const FiniteGroup &g, std::uint32_t p,
                                               const std::vector<Subgroup> &subs) {
  const auto phi = build_phi_morphism(g, p, subs);
  const oracle::NaiveBar k(trivial_module(g, p)), sum(phi.source());
  const auto psi1_rank = oracle::induced_rank(phi, 2);
  const auto psi2_rank = oracle::induced_rank(phi, 1);
  return {k.homology(2) - psi1_rank, sum.homology(1) - psi2_rank};
}

} // namespace

TEST_CASE("dim_im_alpha examples") {
  const auto c5 = catalog_group("C5");
  for (auto conv : {ImAlphaConvention::PaperCeilingFromE1, ImAlphaConvention::ClassicalFloorFromE0})
    CHECK(dim_im_alpha({5, c5, 2, {}}, conv).value == 3);
  const RamifiedCover one{5, c5, 2, {{{5, 5}, whole_group(c5)}}};
  CHECK(dim_im_alpha(one, ImAlphaConvention::PaperCeilingFromE1).value == 5);
  CHECK(dim_im_alpha(one, ImAlphaConvention::ClassicalFloorFromE0).value == 3 + 16 / 5);

  for (std::uint64_t e : {3u, 5u, 7u}) {
    const auto g = build_group(GroupSpec::cyclic(e));
    const RamifiedCover tame{2, g, 3, {{{e}, whole_group(g)}, {{e}, whole_group(g)}}};
    CHECK(dim_im_alpha(tame, ImAlphaConvention::ClassicalFloorFromE0).value == 8);
  }
}

TEST_CASE("dim_im_alpha flags special divisors") {
  const auto c2 = catalog_group("C2");
  // g_Y = 0 with deg D = 2: deg(K_Y + D) = 0.
  const BranchPoint w{{2, 2}, whole_group(c2)};
  const auto r = dim_im_alpha({2, c2, 0, {w, w, w}}, ImAlphaConvention::PaperCeilingFromE1);
  CHECK(r.local_terms == std::vector<std::int64_t>{1, 1, 1});
  CHECK(r.nonspecial);
  const auto c3 = catalog_group("C3");
  const auto tame = dim_im_alpha({2, c3, 1, {{{3}, whole_group(c3)}}}, ImAlphaConvention::PaperCeilingFromE1);
  CHECK_FALSE(tame.nonspecial);
  REQUIRE_FALSE(tame.diagnostics.empty());
  CHECK(tame.diagnostics.front().find("nonspecial hypothesis violated") != std::string::npos);
}

TEST_CASE("psi_report examples") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto g = build_group(GroupSpec::cyclic(p));
    const std::vector<Subgroup> one{whole_group(g)};
    const auto r = psi_report(g, p, one);
    CHECK(r.psi2.kernel == 0);
    CHECK(r.psi1.cokernel == 0);
    CHECK(oracle_psi(g, p, one) == std::pair<std::size_t, std::size_t>{0, 0});
  }
  const auto v4 = catalog_group("V4");
  const std::vector<Subgroup> lines{gen(v4, 2), gen(v4, 1)};
  const auto r = psi_report(v4, 2, lines);
  CHECK(r.psi1.target_dim == 3);
  CHECK(r.psi1.rank == 2);
  CHECK(r.psi1.cokernel == 1);
  CHECK(r.psi2.kernel == 0);
  CHECK(oracle_psi(v4, 2, lines) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(r.psi2.group_theoretic_kernel == 0);
  CHECK(r.hopf.group == 1);
  CHECK(r.hopf.subgroups == std::vector<std::optional<std::size_t>>{0, 0});

  const std::vector<Subgroup> twice{gen(v4, 1), gen(v4, 1)};
  const auto t = psi_report(v4, 2, twice);
  CHECK(t.psi2.source_dim == 2);
  CHECK(t.psi2.rank == 1);
  CHECK(t.psi2.kernel == 1);
  CHECK(oracle_psi(v4, 2, twice).second == 1);

  CHECK(error_kind([&] { psi_report(v4, 2, std::vector<Subgroup>{}); }) == ErrorKind::EmptySubgroupList);
}

TEST_CASE("dim_h1_ker_phi examples") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto g = build_group(GroupSpec::cyclic(p));
    const std::vector<Subgroup> one{whole_group(g)}, two{whole_group(g), whole_group(g)};
    const auto a = dim_h1_ker_phi(g, p, one);
    CHECK(a.route_a == 0);
    CHECK(a.route_b == 0);
    const auto b = dim_h1_ker_phi(g, p, two);
    CHECK(b.route_a == 1);
    CHECK(b.route_b == 1);
    CHECK(oracle::NaiveBar(kernel_module(build_phi_morphism(g, p, two))).homology(1) == 1);
  }
  const auto v4 = catalog_group("V4");
  const std::vector<Subgroup> lines{gen(v4, 2), gen(v4, 1)};
  const auto h = dim_h1_ker_phi(v4, 2, lines);
  CHECK(h.route_a == 1);
  CHECK(h.route_b == 1);
  CHECK(oracle::NaiveBar(kernel_module(build_phi_morphism(v4, 2, lines))).homology(1) == 1);
}

TEST_CASE("worked ordinary covers") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    const auto one = dim_covariants_ordinary(cp_cover(p, 1));
    CHECK(one.exact == 5);
    CHECK(one.paper_plus1 == 5);
    CHECK(one.paper_minus1 == 3);
    const auto two = dim_covariants_ordinary(cp_cover(p, 2));
    CHECK(two.exact == 7);
    CHECK(two.paper_plus1 == 7);
    // Oracle: ker Phi is the trivial line, so H1 = 1 and the coinvariants are 1.
    const auto g = build_group(GroupSpec::cyclic(p));
    const std::vector<Subgroup> subs{whole_group(g), whole_group(g)};
    const auto ker = kernel_module(build_phi_morphism(g, p, subs));
    const auto h1 = static_cast<std::int64_t>(oracle::NaiveBar(ker).homology(1));
    const auto coinv = static_cast<std::int64_t>(oracle::coinvariants(ker));
    CHECK(h1 + 3 * 2 - 3 + 2 * 2 - coinv == 7);
  }
  auto deep = cp_cover(3, 1);
  deep.branch_points[0].filtration = {3, 3, 3};
  CHECK(error_kind([&] { dim_covariants_ordinary(deep); }) == ErrorKind::NotOrdinaryCompatible);
  CHECK(error_kind([&] { dim_covariants_ordinary(cp_cover(3, 0)); }) == ErrorKind::NoBranchPoints);
  const auto c3 = catalog_group("C3");
  CHECK(error_kind([&] { dim_covariants_ordinary({2, c3, 2, {{{3}, whole_group(c3)}}}); }) ==
        ErrorKind::NotPGroup);
}

TEST_CASE("corollary_delta examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto g = build_group(GroupSpec::cyclic(p));
    const std::vector<Subgroup> one{whole_group(g)}, two{whole_group(g), whole_group(g)};
    CHECK(corollary_delta(g, p, one) == 0);
    CHECK(corollary_delta(g, p, two) == 0);
  }
  const auto v4 = catalog_group("V4");
  const std::vector<Subgroup> lines{gen(v4, 2), gen(v4, 1)};
  CHECK(corollary_delta(v4, 2, lines) == 0);
}

TEST_CASE("exactness and tail identity over many configurations") {
  const auto configs = exactness_configurations(8);
  CHECK(configs.size() >= 20);
  std::size_t checked = 0;
  for (const auto &cfg : configs) {
    CAPTURE(cfg.label);
    const auto h = dim_h1_ker_phi(cfg.group, cfg.p, cfg.subgroups);
    CHECK(h.route_a == h.route_b);
    const auto psi = psi_report(cfg.group, cfg.p, cfg.subgroups);
    const auto ker = kernel_module(build_phi_morphism(cfg.group, cfg.p, cfg.subgroups));
    CHECK(coinvariants_dim(ker) == psi.psi2.target_dim - psi.psi2.rank + cfg.subgroups.size() - 1);
    CHECK(coinvariants_dim(ker) == oracle::coinvariants(ker));
    if (psi.psi2.group_theoretic_kernel && cfg.subgroups.size() == 1)
      CHECK(*psi.psi2.group_theoretic_kernel == psi.psi2.kernel);
    ++checked;
  }
  CHECK(checked == configs.size());
}

TEST_CASE("ordinary report invariants") {
  const auto e8 = catalog_group("E8");
  RamifiedCover c{2, e8, 2, {{{2, 2}, gen(e8, 4)}, {{2, 2}, gen(e8, 2)}, {{2, 2}, gen(e8, 1)}}};
  const auto rep = ordinary_report(c, ImAlphaConvention::PaperCeilingFromE1);
  CHECK(rep.covariants.exact == rep.covariants.paper_plus1);
  CHECK(rep.covariants.paper_plus1 - rep.covariants.paper_minus1 == 2);
  CHECK(rep.h1_ker_phi.route_a == rep.h1_ker_phi.route_b);
  CHECK(rep.genus_x == genus_via_riemann_hurwitz(c));
  CHECK(rep.corollary_delta_hopf.has_value());
  CHECK(rep.ker_phi_dim == 4 + 4 + 4 - 1);

  // Larger decomposition groups: no hopf-mode delta.
  RamifiedCover big{2, e8, 2, {{{4, 4}, subgroup_generated(e8, std::vector<Element>{1, 2})}}};
  const auto b = ordinary_report(big, ImAlphaConvention::ClassicalFloorFromE0);
  CHECK_FALSE(b.corollary_delta_hopf.has_value());
  CHECK(b.covariants.exact == b.covariants.paper_plus1);
}

TEST_CASE("negative control: psi1 in the wrong degree breaks route equality") {
  PsiOptions broken;
  broken.psi1_degree = 1;
  const auto checks = verify_exactness(8, {}, broken);
  const auto failures = std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed; });
  CHECK(failures > 0);
  const auto good = verify_exactness(8, {});
  CHECK(std::all_of(good.begin(), good.end(), [](const CheckResult &c) { return c.passed; }));
}

TEST_CASE("fast verification suite passes") {
  const auto s = verify_suite({});
  CHECK(s.ok());
  CHECK(s.checks.size() > 100);
  for (const auto &family : verify_families()) {
    const auto n = std::count_if(s.checks.begin(), s.checks.end(), [&](const CheckResult &c) { return c.family == family; });
    CAPTURE(family);
    CHECK(n > 0);
  }
}
