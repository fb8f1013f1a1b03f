#include "equideform/catalog.hpp"
#include "equideform/covers.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace equideform;

namespace {

Subgroup gen(const FiniteGroup &g, std::vector<Element> gens) { return subgroup_generated(g, gens); }

bool has_code(const std::vector<Violation> &v, const std::string &code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation &x) { return x.code == code; });
}

} // namespace

TEST_CASE("validate_cover examples") {
  const auto c3 = catalog_group("C3");
  const RamifiedCover ok{3, c3, 2, {{{3, 3}, whole_group(c3)}}};
  CHECK(validate_cover(ok).empty());

  const auto c8 = catalog_group("C8");
  const RamifiedCover up{2, c8, 2, {{{4, 8}, gen(c8, {2})}}};
  const auto v = validate_cover(up);
  REQUIRE(has_code(v, "filtration-not-non-increasing"));
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const Violation &x) { return x.message.find("filtration not non-increasing") != std::string::npos; }));

  const auto c4 = catalog_group("C4");
  const RamifiedCover mismatch{2, c4, 2, {{{4, 4}, gen(c4, {2})}}};
  const auto w = validate_cover(mismatch);
  REQUIRE(has_code(w, "e0-mismatch"));
  CHECK(w.front().message.find("e0 = 4 != |G(b)| = 2") != std::string::npos);
}

TEST_CASE("validate_cover catches each invariant") {
  const auto c6 = catalog_group("C6");
  const auto c3 = catalog_group("C3");
  const auto c2 = catalog_group("C2");
  CHECK(has_code(validate_cover({4, c2, 2, {}}), "characteristic-not-prime"));
  CHECK(has_code(validate_cover({2, c2, 2, {{{}, whole_group(c2)}}}), "empty-filtration"));
  CHECK(has_code(validate_cover({2, c2, 2, {{{2, 1}, whole_group(c2)}}}), "filtration-entry-below-2"));
  CHECK(has_code(validate_cover({2, c2, 2, {{{2}, whole_group(c3)}}}), "decomposition-foreign-group"));
  CHECK(has_code(validate_cover({2, c6, 2, {{{6, 3}, whole_group(c6)}}}), "wild-order-not-p-power"));
  CHECK(has_code(validate_cover({3, c6, 2, {{{6, 9}, whole_group(c6)}}}), "filtration-not-non-increasing"));
  // Tame ramification of order p is impossible.
  CHECK(has_code(validate_cover({2, c2, 2, {{{2}, whole_group(c2)}}}), "tame-part-divisible-by-p"));
  // Wild point of a p-group needs e0 = e1.
  const auto c4 = catalog_group("C4");
  CHECK(has_code(validate_cover({2, c4, 2, {{{4, 2}, whole_group(c4)}}}), "tame-part-divisible-by-p"));
  // C6 in characteristic 3: wild part C3, tame quotient of order 2. One such
  // point alone gives an odd 2 g_X - 2.
  const BranchPoint mixed{{6, 3}, whole_group(c6)};
  CHECK(has_code(validate_cover({3, c6, 2, {mixed}}), "genus-non-integral"));
  CHECK(validate_cover({3, c6, 2, {mixed, mixed}}).empty());
  CHECK(has_code(validate_cover({2, c2, 0, {{{2, 2}, whole_group(c2)}}}), "genus-too-small"));
  // 2 g_X - 2 = 3 (2 - 2) + 2.
  CHECK(validate_cover({2, c3, 1, {{{3}, whole_group(c3)}}}).empty());
}

TEST_CASE("ramification divisor degree") {
  const auto c3 = catalog_group("C3");
  CHECK(ramification_divisor_degree({3, c3, 2, {}}) == 0);
  const RamifiedCover one{3, c3, 2, {{{3, 3}, whole_group(c3)}}};
  CHECK(ramification_divisor_degree(one, IndexStart::FromE0) == 4);
  CHECK(ramification_divisor_degree(one, IndexStart::FromE1) == 2);
  // Non-maximal decomposition groups contribute |G|/e0 points each.
  const auto v4 = catalog_group("V4");
  const RamifiedCover lines{2, v4, 2, {{{2, 2}, gen(v4, {1})}, {{2, 2}, gen(v4, {2})}}};
  CHECK(ramification_divisor_degree(lines) == 8);
}

TEST_CASE("Riemann-Hurwitz genus") {
  const auto c2 = catalog_group("C2");
  const auto c3 = catalog_group("C3");
  CHECK(genus_via_riemann_hurwitz({2, c2, 2, {}}) == 3);
  CHECK(genus_via_riemann_hurwitz({3, c3, 2, {{{3, 3}, whole_group(c3)}}}) == 6);
  CHECK(error_kind([&] { genus_via_riemann_hurwitz({2, c2, 0, {{{2, 2}, whole_group(c2)}}}); }) ==
        ErrorKind::InvalidCover);
  try {
    genus_via_riemann_hurwitz({2, c2, 0, {{{2, 2}, whole_group(c2)}}});
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("genus-too-small") != std::string::npos);
  }
}

TEST_CASE("ordinarity check") {
  const auto c3 = catalog_group("C3");
  CHECK(ordinarity_check({3, c3, 2, {{{3, 3}, whole_group(c3)}}}).compatible);
  const auto deep = ordinarity_check({3, c3, 2, {{{3, 3, 3}, whole_group(c3)}}});
  CHECK_FALSE(deep.compatible);
  CHECK(deep.reasons.front().find("e2 != 0") != std::string::npos);
  const auto c4 = catalog_group("C4");
  const auto cyc = ordinarity_check({2, c4, 2, {{{4, 4}, whole_group(c4)}}});
  CHECK_FALSE(cyc.compatible);
  CHECK(cyc.reasons.front().find("not elementary abelian") != std::string::npos);
  const auto c6 = catalog_group("C6");
  const BranchPoint mixed{{6, 3}, whole_group(c6)};
  CHECK_FALSE(ordinarity_check({3, c6, 2, {mixed, mixed}}).compatible);
}

TEST_CASE("l(K + A)") {
  const auto c6 = catalog_group("C6");
  const RamifiedCover mixed{2, c6, 2, {{{2, 2}, gen(c6, {3})}, {{3}, gen(c6, {2})}}};
  const auto a = ell_K_plus_A(mixed);
  CHECK(a.dimension == 4);
  CHECK(a.coefficients == std::vector<std::uint64_t>{2, 1});
  CHECK(a.wild_points == 1);
  const auto c2 = catalog_group("C2");
  const BranchPoint w{{2, 2}, whole_group(c2)};
  CHECK(ell_K_plus_A({2, c2, 0, {w, w, w}}).dimension == 5);
  CHECK(error_kind([&] { ell_K_plus_A({2, c2, 2, {}}); }) == ErrorKind::NoBranchPoints);
}
