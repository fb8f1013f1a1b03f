#include "equideform/catalog.hpp"
#include "equideform/groups.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace equideform;

TEST_CASE("build_group examples") {
  const auto c4 = build_group(GroupSpec::cyclic(4));
  CHECK(c4.order() == 4);
  CHECK(c4.element_order(1) == 4);
  const auto v4 = build_group(GroupSpec::elementary_abelian(2, 2));
  CHECK(v4.order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  // Latin square without associativity: a loop of order 5.
  CayleyTable broken{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(error_kind([&] { FiniteGroup::from_table(broken); }) == ErrorKind::InvalidTable);
  CHECK(error_kind([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorKind::InvalidTable);
  CHECK(error_kind([] { FiniteGroup::from_table({{1, 0}, {0, 1}}); }) == ErrorKind::InvalidTable);
  CHECK(error_kind([] { build_group(GroupSpec::cyclic(65)); }) == ErrorKind::SizeCapExceeded);
  CHECK(build_group(GroupSpec::cyclic(65), 65).order() == 65);
}

TEST_CASE("products are lexicographic, first factor most significant") {
  const auto g = build_group(GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(2)}));
  // Element 2*a + b is (a, b).
  CHECK(g.multiply(2, 1) == 3);
  CHECK(g.multiply(6, 2) == 0);
  CHECK(g.element_order(2) == 4);
}

TEST_CASE("subgroup_generated examples") {
  const auto c6 = build_group(GroupSpec::cyclic(6));
  const std::vector<Element> two{2};
  const auto h = subgroup_generated(c6, two);
  CHECK(std::vector<Element>(h.members().begin(), h.members().end()) == std::vector<Element>{0, 2, 4});
  const auto v4 = build_group(GroupSpec::elementary_abelian(2, 2));
  const std::vector<Element> one{1};
  CHECK(subgroup_generated(v4, one).order() == 2);
  CHECK(subgroup_generated(v4, std::vector<Element>{}).order() == 1);
  CHECK(error_kind([&] { subgroup_generated(v4, std::vector<Element>{9}); }) == ErrorKind::IndexOutOfRange);
  CHECK(error_kind([&] { Subgroup(v4, {0, 1, 2}); }) == ErrorKind::NotSubgroup);
}

TEST_CASE("commutator subgroups match brute force") {
  const auto d8 = catalog_group("D8");
  const auto q8 = catalog_group("Q8");
  CHECK(commutator_subgroup(d8).order() == 2);
  CHECK(commutator_subgroup(d8).contains(2)); // r^2
  CHECK(commutator_subgroup(q8).order() == 2);
  CHECK(commutator_subgroup(q8).contains(1)); // -1
  for (const auto &e : builtin_catalog()) {
    const auto g = build_group(e.spec);
    const auto c = commutator_subgroup(g);
    const auto brute = oracle::commutators(g);
    CHECK(std::set<Element>(c.members().begin(), c.members().end()) == brute);
    if (g.is_abelian()) CHECK(c.order() == 1);
    CHECK(is_normal(c));
  }
}

TEST_CASE("abelianization p-rank") {
  CHECK(abelianization_p_rank(build_group(GroupSpec::elementary_abelian(3, 2)), 3) == 2);
  CHECK(abelianization_p_rank(build_group(GroupSpec::elementary_abelian(2, 4)), 2) == 4);
  CHECK(abelianization_p_rank(build_group(GroupSpec::cyclic(4)), 2) == 1);
  CHECK(abelianization_p_rank(catalog_group("D8"), 2) == 2);
  for (const auto &e : builtin_catalog())
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto g = build_group(e.spec);
      CHECK(abelianization_p_rank(g, p) == oracle::abelianization_p_rank(g, p));
    }
}

TEST_CASE("group laws and subgroup lattice on the catalog") {
  for (const auto &e : builtin_catalog()) {
    const auto g = build_group(e.spec);
    CAPTURE(e.name);
    CHECK(g.order() == e.spec.implied_order());
    const auto n = g.order();
    for (Element a = 0; a < n; ++a) {
      CHECK(g.multiply(0, a) == a);
      CHECK(g.multiply(a, 0) == a);
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    }
    const auto subs = all_subgroups(g);
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == n);
    for (const auto &h : subs) {
      CHECK(n % h.order() == 0);
      for (auto x : h.members())
        for (auto y : h.members()) CHECK(h.contains(g.multiply(x, g.inverse(y))));
    }
  }
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(catalog_group("V4")).size() == 5);
  CHECK(all_subgroups(catalog_group("D8")).size() == 10);
  CHECK(all_subgroups(catalog_group("Q8")).size() == 6);
  CHECK(all_subgroups(catalog_group("S3")).size() == 6);
  CHECK(all_subgroups(catalog_group("E8")).size() == 16);
  CHECK(all_subgroups(catalog_group("E16")).size() == 67);
}

TEST_CASE("p-power helpers") {
  CHECK(is_p_power(1, 2));
  CHECK(is_p_power(8, 2));
  CHECK_FALSE(is_p_power(6, 2));
  CHECK(log_p(27, 3) == 3);
  CHECK_FALSE(log_p(12, 2).has_value());
  CHECK(is_elementary_abelian(whole_group(catalog_group("E8")), 2));
  CHECK_FALSE(is_elementary_abelian(whole_group(catalog_group("C4")), 2));
  CHECK_FALSE(is_elementary_abelian(whole_group(catalog_group("D8")), 2));
  CHECK(is_elementary_abelian(trivial_subgroup(catalog_group("C3")), 3));
}
