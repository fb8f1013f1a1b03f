#include "equideform/catalog.hpp"

#include <algorithm>
#include <array>

namespace equideform {

GroupSpec dihedral_spec(std::size_t n) {
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = ((b + d) % 2) * n + rot;
    }
  return GroupSpec::explicit_table(std::move(t));
}

GroupSpec quaternion_spec() {
  // Unit u in {1, i, j, k} with sign s is element 2u + s.
  // unit_product[u][v] = (sign, unit) of u*v.
  constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_product{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  CayleyTable t(8, std::vector<Element>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto [s, u] = unit_product[x / 2][y / 2];
      const std::size_t sign = (x % 2 + y % 2 + std::size_t(s)) % 2;
      t[x][y] = 2 * std::size_t(u) + sign;
    }
  return GroupSpec::explicit_table(std::move(t));
}

GroupSpec symmetric3_spec() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CayleyTable t(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupSpec::explicit_table(std::move(t));
}

const std::vector<CatalogEntry> &builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    using S = GroupSpec;
    return std::vector<CatalogEntry>{
        {"C1", "trivial group", S::cyclic(1)},
        {"C2", "cyclic of order 2", S::cyclic(2)},
        {"C3", "cyclic of order 3", S::cyclic(3)},
        {"C4", "cyclic of order 4", S::cyclic(4)},
        {"C5", "cyclic of order 5", S::cyclic(5)},
        {"V4", "Klein four group", S::elementary_abelian(2, 2)},
        {"C6", "cyclic of order 6", S::cyclic(6)},
        {"S3", "symmetric group on three points", symmetric3_spec()},
        {"C7", "cyclic of order 7", S::cyclic(7)},
        {"C8", "cyclic of order 8", S::cyclic(8)},
        {"C4xC2", "abelian of type (4,2)", S::product({S::cyclic(4), S::cyclic(2)})},
        {"E8", "elementary abelian of order 8", S::elementary_abelian(2, 3)},
        {"D8", "dihedral of order 8", dihedral_spec(4)},
        {"Q8", "quaternion of order 8", quaternion_spec()},
        {"C9", "cyclic of order 9", S::cyclic(9)},
        {"E9", "elementary abelian of order 9", S::elementary_abelian(3, 2)},
        {"C16", "cyclic of order 16", S::cyclic(16)},
        {"C4xC4", "abelian of type (4,4)", S::product({S::cyclic(4), S::cyclic(4)})},
        {"E16", "elementary abelian of order 16", S::elementary_abelian(2, 4)},
    };
  }();
  return catalog;
}

std::optional<CatalogEntry> find_catalog_entry(const std::vector<CatalogEntry> &catalog,
                                               std::string_view name) {
  for (const auto &e : catalog)
    if (e.name == name) return e;
  return std::nullopt;
}

} // namespace equideform
