#include "equideform/catalog.hpp"
#include "equideform/homology.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace equideform;

namespace {

std::vector<Subgroup> same(const Subgroup &h, std::size_t r) { return std::vector<Subgroup>(r, h); }

} // namespace

TEST_CASE("module construction examples") {
  const auto g = catalog_group("D8");
  const auto whole = permutation_module(whole_group(g), 2);
  CHECK(whole.dim() == 1);
  CHECK(whole.action(5)(0, 0) == 1);
  const auto reg = permutation_module(trivial_subgroup(g), 3);
  CHECK(reg.dim() == 8);
  CHECK(to_dense(reg.action(3)) == to_dense(regular_module(g, 3).action(3)));

  const auto c3 = catalog_group("C3");
  const std::vector<Subgroup> one{whole_group(c3)};
  CHECK(kernel_module(build_phi_morphism(c3, 3, one)).dim() == 0);
  CHECK(error_kind([&] { build_phi_morphism(c3, 3, std::vector<Subgroup>{}); }) == ErrorKind::EmptySubgroupList);
}

TEST_CASE("module axioms on the catalog") {
  for (const auto &e : builtin_catalog()) {
    const auto g = build_group(e.spec);
    if (g.order() > 8) continue;
    for (const auto &h : all_subgroups(g)) {
      const auto m = permutation_module(h, 3);
      CHECK(m.dim() == h.index());
      CHECK(m.action(0) == PrimeFieldMatrix::identity(m.dim(), 3));
      for (Element a = 0; a < g.order(); ++a) {
        CHECK(oracle::rank(to_dense(m.action(a)), 3) == m.dim());
        for (Element b = 0; b < g.order(); ++b) CHECK(m.action(g.multiply(a, b)) == m.action(a) * m.action(b));
      }
      CHECK(coinvariants_dim(m) == 1);
    }
  }
}

TEST_CASE("GModule rejects non-homomorphisms") {
  const auto c2 = catalog_group("C2");
  const auto swap = PrimeFieldMatrix(2, 2, 3, {0, 1, 1, 0});
  const auto bad = PrimeFieldMatrix(2, 2, 3, {1, 1, 0, 1});
  CHECK_FALSE(error_kind([&] { GModule(c2, 3, {PrimeFieldMatrix::identity(2, 3), swap}); }));
  CHECK(error_kind([&] { GModule(c2, 3, {PrimeFieldMatrix::identity(2, 3), bad}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { GModule(c2, 3, {swap, swap}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("phi morphism examples") {
  const auto c2 = catalog_group("C2");
  const auto g = whole_group(c2);
  CHECK(build_phi_morphism(c2, 2, same(g, 1)).matrix() == PrimeFieldMatrix(1, 1, 2, {1}));
  const auto two = build_phi_morphism(c2, 2, same(g, 2));
  CHECK(two.matrix() == PrimeFieldMatrix(1, 2, 2, {1, 1}));
  CHECK(kernel_module(two).dim() == 1);

  const auto v4 = catalog_group("V4");
  const std::vector<Element> gen{1};
  const std::vector<Subgroup> line{subgroup_generated(v4, gen)};
  CHECK(build_phi_morphism(v4, 2, line).matrix() == PrimeFieldMatrix(1, 2, 2, {1, 1}));
}

TEST_CASE("ModuleMorphism checks equivariance") {
  const auto c2 = catalog_group("C2");
  const auto reg = regular_module(c2, 3);
  const auto k = trivial_module(c2, 3);
  CHECK_FALSE(error_kind([&] { ModuleMorphism(reg, k, PrimeFieldMatrix(1, 2, 3, {1, 1})); }));
  CHECK(error_kind([&] { ModuleMorphism(reg, k, PrimeFieldMatrix(1, 2, 3, {1, 0})); }) == ErrorKind::NotEquivariant);
}

TEST_CASE("bar boundary examples") {
  const auto c2 = catalog_group("C2");
  CHECK(bar_boundary(trivial_module(c2, 2), 1).is_zero());
  const auto d1 = bar_boundary(regular_module(c2, 2), 1);
  CHECK(rank_mod_p(d1) == 1);
  // Unnormalized: 2 x 4, rank 1 as well.
  const auto u1 = bar_boundary(regular_module(c2, 2), 1, {}, BarNormalization::Unnormalized);
  CHECK(u1.rows() == 2);
  CHECK(u1.cols() == 4);
  CHECK(oracle::rank(to_dense(u1), 2) == 1);
}

TEST_CASE("boundary squares to zero") {
  for (const char *name : {"C3", "V4", "S3", "D8", "Q8"})
    for (std::uint32_t p : {2u, 3u}) {
      const auto g = catalog_group(name);
      const auto subs = all_subgroups(g);
      for (const auto &m : {trivial_module(g, p), regular_module(g, p), permutation_module(subs[1], p)})
        for (auto kind : {BarNormalization::Normalized, BarNormalization::Unnormalized}) {
          if (kind == BarNormalization::Unnormalized && g.order() * m.dim() > 16) continue;
          CAPTURE(name);
          CHECK((bar_boundary(m, 1, {}, kind) * bar_boundary(m, 2, {}, kind)).is_zero());
          CHECK((bar_boundary(m, 2, {}, kind) * bar_boundary(m, 3, {}, kind)).is_zero());
        }
    }
}

TEST_CASE("homology examples") {
  for (const auto &e : builtin_catalog()) {
    const auto g = build_group(e.spec);
    CHECK(homology_dim(trivial_module(g, 2), 0) == 1);
  }
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto g = build_group(GroupSpec::cyclic(p));
    CHECK(homology_dim(regular_module(g, p), 1) == 0);
    CHECK(homology_dim(regular_module(g, p), 2) == 0);
    CHECK(homology_dim(trivial_module(g, p), 1) == 1);
    CHECK(homology_dim(trivial_module(g, p), 2) == 1);
  }
  CHECK(homology_dim(trivial_module(build_group(GroupSpec::elementary_abelian(3, 2)), 3), 2) == 3);
}

TEST_CASE("catalog homology of the trivial module") {
  struct Row {
    const char *name;
    std::uint32_t p;
    std::size_t h1, h2;
  };
  // H_1 = G^ab (x) k; H_2 by universal coefficients from the Schur multiplier.
  for (const Row &r : {Row{"V4", 2, 2, 3}, Row{"C4", 2, 1, 1}, Row{"Q8", 2, 2, 2}, Row{"D8", 2, 2, 3},
                       Row{"S3", 2, 1, 1}, Row{"S3", 3, 0, 0}, Row{"E8", 2, 3, 6}, Row{"C4xC2", 2, 2, 3},
                       Row{"E9", 3, 2, 3}, Row{"C6", 5, 0, 0}, Row{"E16", 2, 4, 10}, Row{"C4xC4", 2, 2, 3}}) {
    CAPTURE(r.name);
    CAPTURE(r.p);
    const auto m = trivial_module(catalog_group(r.name), r.p);
    CHECK(homology_dim(m, 1) == r.h1);
    CHECK(homology_dim(m, 2) == r.h2);
  }
}

TEST_CASE("homology agrees with the naive unnormalized oracle") {
  for (const char *name : {"C2", "C3", "C4", "V4", "C5", "S3"})
    for (std::uint32_t p : {2u, 3u}) {
      const auto g = catalog_group(name);
      std::vector<GModule> mods{trivial_module(g, p)};
      for (const auto &h : all_subgroups(g)) mods.push_back(permutation_module(h, p));
      const std::vector<Subgroup> two{whole_group(g), all_subgroups(g).front()};
      if (g.order() <= 4) mods.push_back(kernel_module(build_phi_morphism(g, p, two)));
      for (const auto &m : mods) {
        if (g.order() > 4 && m.dim() > 1) continue;
        const oracle::NaiveBar naive(m);
        CAPTURE(name);
        CAPTURE(m.dim());
        for (std::size_t n = 0; n <= 2; ++n) CHECK(homology_dim(m, n) == naive.homology(n));
        CHECK(coinvariants_dim(m) == oracle::coinvariants(m));
      }
    }
  // Order 8, trivial coefficients, degrees 0..2.
  for (const char *name : {"D8", "Q8", "E8", "C8"}) {
    const auto m = trivial_module(catalog_group(name), 2);
    const oracle::NaiveBar naive(m);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(homology_dim(m, n) == naive.homology(n));
  }
}

TEST_CASE("normalized and unnormalized complexes agree") {
  for (const char *name : {"C2", "C3", "V4", "C4"})
    for (std::uint32_t p : {2u, 3u}) {
      const auto g = catalog_group(name);
      for (const auto &h : all_subgroups(g)) {
        const auto m = permutation_module(h, p);
        for (std::size_t n = 0; n <= 2; ++n)
          CHECK(homology_dim(m, n) == homology_dim(m, n, {}, BarNormalization::Unnormalized));
      }
    }
}

TEST_CASE("coinvariants examples") {
  const auto c3 = catalog_group("C3");
  CHECK(coinvariants_dim(trivial_module(c3, 3)) == 1);
  const auto ker = kernel_module(build_phi_morphism(c3, 3, same(whole_group(c3), 2)));
  CHECK(ker.dim() == 1);
  CHECK(coinvariants_dim(ker) == 1);
  CHECK(homology_dim(ker, 1) == 1);
}

TEST_CASE("induced map rank examples") {
  const auto g = catalog_group("V4");
  for (const auto &m : {trivial_module(g, 2), regular_module(g, 2), permutation_module(all_subgroups(g)[1], 2)})
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto id = induced_homology_map_rank(identity_morphism(m), n);
      CHECK(id.rank == homology_dim(m, n));
      CHECK(id.source_dim == id.rank);
      CHECK(induced_homology_map_rank(zero_morphism(m, trivial_module(g, 2)), n).rank == 0);
    }
  for (std::uint32_t p : {2u, 3u}) {
    const auto c = build_group(GroupSpec::cyclic(p));
    const auto phi = build_phi_morphism(c, p, same(whole_group(c), 1));
    const auto r = induced_homology_map_rank(phi, 1);
    CHECK(r.rank == 1);
    CHECK(r.source_dim == 1);
    CHECK(r.target_dim == 1);
  }
}

TEST_CASE("induced map rank agrees with the oracle") {
  for (const char *name : {"C2", "C3", "V4", "C4", "S3"})
    for (std::uint32_t p : {2u, 3u}) {
      const auto g = catalog_group(name);
      const auto subs = all_subgroups(g);
      std::vector<std::vector<Subgroup>> configs{{subs.back()}, {subs.back(), subs.back()}};
      if (subs.size() > 2) configs.push_back({subs[1]});
      if (subs.size() > 3) configs.push_back({subs[1], subs[2]});
      for (const auto &cfg : configs) {
        const auto phi = build_phi_morphism(g, p, cfg);
        if (phi.source().dim() * g.order() > 16) continue;
        CAPTURE(name);
        CAPTURE(p);
        for (std::size_t n : {1u, 2u}) CHECK(induced_homology_map_rank(phi, n).rank == oracle::induced_rank(phi, n));
      }
    }
}

TEST_CASE("componentwise induced rank equals the assembled morphism") {
  const auto g = catalog_group("V4");
  const auto subs = all_subgroups(g);
  const std::vector<Subgroup> cfg{subs[1], subs[2]};
  const auto phi = build_phi_morphism(g, 2, cfg);
  std::vector<ModuleMorphism> parts;
  for (const auto &h : cfg) {
    const std::vector<Subgroup> one{h};
    parts.push_back(build_phi_morphism(g, 2, one));
  }
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK(induced_homology_map_rank(parts, n).rank == induced_homology_map_rank(phi, n).rank);
}

TEST_CASE("Shapiro on small groups") {
  for (const char *name : {"C4", "V4", "S3", "D8", "Q8"})
    for (std::uint32_t p : {2u, 3u})
      for (const auto &h : all_subgroups(catalog_group(name)))
        for (std::size_t n = 0; n <= 2; ++n)
          CHECK(homology_dim(permutation_module(h, p), n) == homology_dim(trivial_module(h.as_group(), p), n));
}

TEST_CASE("hopf-mode H2") {
  struct Row {
    const char *name;
    std::uint32_t p;
    std::size_t value;
  };
  // Schur multipliers: trivial for cyclic groups and Q8, Z/2 for D8 and V4.
  for (const Row &r : {Row{"C2", 2, 0}, Row{"C4", 2, 0}, Row{"V4", 2, 1}, Row{"D8", 2, 1}, Row{"Q8", 2, 0},
                       Row{"E8", 2, 3}, Row{"C4xC2", 2, 1}, Row{"E9", 3, 1}, Row{"S3", 2, 0}, Row{"S3", 3, 0}}) {
    CAPTURE(r.name);
    CHECK(integral_h2_p_rank(catalog_group(r.name), r.p) == r.value);
  }
  CHECK(error_kind([] { integral_h2_p_rank(catalog_group("E16"), 2); }) == ErrorKind::SizeCapExceeded);
}

TEST_CASE("size caps") {
  HomologyLimits tight;
  tight.max_cells = 100;
  const auto m = trivial_module(catalog_group("E8"), 2);
  CHECK(error_kind([&] { homology_dim(m, 2, tight); }) == ErrorKind::SizeCapExceeded);
  CHECK(error_kind([&] { homology_dim(m, 3); }) == ErrorKind::InvalidArgument);
}
