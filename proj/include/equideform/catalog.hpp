#pragma once

#include "equideform/groups.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equideform {

struct CatalogEntry {
  std::string name;
  std::string description;
  GroupSpec spec;
};

/// Dihedral group of order 2n. Element j*n + i is r^i s^j.
GroupSpec dihedral_spec(std::size_t n);
/// Quaternion group of order 8, elements ordered 1, -1, i, -i, j, -j, k, -k.
GroupSpec quaternion_spec();
/// Symmetric group on three points, permutations in lexicographic order.
GroupSpec symmetric3_spec();

/// The built-in group catalog, in a fixed order.
const std::vector<CatalogEntry> &builtin_catalog();

std::optional<CatalogEntry> find_catalog_entry(const std::vector<CatalogEntry> &catalog,
                                               std::string_view name);

} // namespace equideform
