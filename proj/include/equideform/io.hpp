#pragma once

// JSON documents: group catalogs, cover descriptions, homology jobs.
// Schemas live under schemas/ in the source tree.

#include "equideform/catalog.hpp"
#include "equideform/covers.hpp"
#include "equideform/homology.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace equideform::io {

using Json = nlohmann::ordered_json;

inline constexpr const char *kCatalogSchema = "equideform/group-catalog/1";
inline constexpr const char *kCoverSchema = "equideform/cover/1";
inline constexpr const char *kHomologyJobSchema = "equideform/homology-job/1";
inline constexpr const char *kReportSchema = "equideform/report/1";

/// Parses text as JSON; throws Parse naming the position on failure.
Json parse_document(std::string_view text);

std::vector<CatalogEntry> catalog_from_json(const Json &doc);
Json catalog_to_json(const std::vector<CatalogEntry> &catalog);

GroupSpec group_spec_from_json(const Json &node, const std::vector<CatalogEntry> &catalog,
                               const std::string &path = "group");
Json group_spec_to_json(const GroupSpec &spec);

struct CoverDocument {
  std::string name;
  RamifiedCover cover;
};

CoverDocument cover_from_json(const Json &doc, const std::vector<CatalogEntry> &catalog,
                              std::size_t max_order = kDefaultMaxOrder);

struct HomologyJob {
  std::uint32_t p;
  FiniteGroup group;
  GModule module;
  std::string module_description;
  std::vector<std::size_t> degrees;
};

HomologyJob homology_job_from_json(const Json &doc, const std::vector<CatalogEntry> &catalog,
                                   std::size_t max_order = kDefaultMaxOrder);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

} // namespace equideform::io
