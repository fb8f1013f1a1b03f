#include "equideform/io.hpp"

#include "equideform/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace equideform::io {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw Error(ErrorKind::Parse, "field '" + path + "': " + what);
}

const Json &field(const Json &obj, const char *key, const std::string &path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string &path, const std::string &key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string &path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::uint64_t as_uint(const Json &node, const std::string &path) {
  if (!node.is_number_integer() || node.is_number_float()) fail(path, "expected a non-negative integer");
  if (node.is_number_unsigned()) return node.get<std::uint64_t>();
  const auto v = node.get<std::int64_t>();
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> as_uint_array(const Json &node, const std::string &path) {
  if (!node.is_array()) fail(path, "expected an array of integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(as_uint(node[i], index_path(path, i)));
  return out;
}

std::string as_string(const Json &node, const std::string &path) {
  if (!node.is_string()) fail(path, "expected a string");
  return node.get<std::string>();
}

void check_schema(const Json &doc, const char *expected) {
  if (!doc.is_object()) fail("", "document must be a JSON object");
  if (const auto it = doc.find("schema"); it != doc.end())
    if (as_string(*it, "schema") != expected)
      fail("schema", "expected \"" + std::string(expected) + "\"");
}

std::vector<Element> as_elements(const Json &node, const std::string &path) {
  const auto raw = as_uint_array(node, path);
  return {raw.begin(), raw.end()};
}

GModule module_from_json(const Json &node, const FiniteGroup &g, std::uint32_t p,
                         const std::string &path, std::string &description) {
  const auto kind = as_string(field(node, "kind", path), join(path, "kind"));
  if (kind == "trivial") {
    description += "trivial";
    return trivial_module(g, p);
  }
  if (kind == "regular") {
    description += "regular";
    return regular_module(g, p);
  }
  if (kind == "permutation") {
    const auto gens = as_elements(field(node, "generators", path), join(path, "generators"));
    const auto h = subgroup_generated(g, gens);
    description += "permutation(|H|=" + std::to_string(h.order()) + ")";
    return permutation_module(h, p);
  }
  if (kind == "direct_sum") {
    const auto &parts = field(node, "parts", path);
    if (!parts.is_array() || parts.empty()) fail(join(path, "parts"), "expected a non-empty array");
    std::vector<GModule> mods;
    description += "direct_sum(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) description += ",";
      mods.push_back(module_from_json(parts[i], g, p, index_path(join(path, "parts"), i), description));
    }
    description += ")";
    return direct_sum(mods);
  }
  if (kind == "kernel_of_summation") {
    const auto &subs = field(node, "subgroups", path);
    if (!subs.is_array()) fail(join(path, "subgroups"), "expected an array of generator lists");
    std::vector<Subgroup> hs;
    for (std::size_t i = 0; i < subs.size(); ++i)
      hs.push_back(subgroup_generated(g, as_elements(subs[i], index_path(join(path, "subgroups"), i))));
    description += "kernel_of_summation(r=" + std::to_string(hs.size()) + ")";
    return kernel_module(build_phi_morphism(g, p, hs));
  }
  fail(join(path, "kind"), "unknown module kind \"" + kind + "\"");
}

} // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, std::string("not valid JSON: ") + e.what());
  }
}

GroupSpec group_spec_from_json(const Json &node, const std::vector<CatalogEntry> &catalog,
                               const std::string &path) {
  if (node.is_string()) {
    const auto name = node.get<std::string>();
    const auto entry = find_catalog_entry(catalog, name);
    if (!entry) fail(path, "unknown catalog group \"" + name + "\"");
    return entry->spec;
  }
  const auto kind = as_string(field(node, "kind", path), join(path, "kind"));
  if (kind == "catalog") return group_spec_from_json(field(node, "name", path), catalog, join(path, "name"));
  if (kind == "cyclic") return GroupSpec::cyclic(as_uint(field(node, "order", path), join(path, "order")));
  if (kind == "elementary_abelian")
    return GroupSpec::elementary_abelian(as_uint(field(node, "prime", path), join(path, "prime")),
                                         as_uint(field(node, "rank", path), join(path, "rank")));
  if (kind == "product") {
    const auto &factors = field(node, "factors", path);
    if (!factors.is_array()) fail(join(path, "factors"), "expected an array of group specs");
    std::vector<GroupSpec> specs;
    for (std::size_t i = 0; i < factors.size(); ++i)
      specs.push_back(group_spec_from_json(factors[i], catalog, index_path(join(path, "factors"), i)));
    return GroupSpec::product(std::move(specs));
  }
  if (kind == "table") {
    const auto &rows = field(node, "table", path);
    if (!rows.is_array()) fail(join(path, "table"), "expected an array of rows");
    CayleyTable t;
    for (std::size_t i = 0; i < rows.size(); ++i)
      t.push_back(as_elements(rows[i], index_path(join(path, "table"), i)));
    return GroupSpec::explicit_table(std::move(t));
  }
  fail(join(path, "kind"), "unknown group kind \"" + kind + "\"");
}

Json group_spec_to_json(const GroupSpec &spec) {
  Json j;
  switch (spec.kind) {
  case GroupSpec::Kind::Cyclic:
    j["kind"] = "cyclic";
    j["order"] = spec.n;
    break;
  case GroupSpec::Kind::ElementaryAbelian:
    j["kind"] = "elementary_abelian";
    j["prime"] = spec.n;
    j["rank"] = spec.rank;
    break;
  case GroupSpec::Kind::Product: {
    j["kind"] = "product";
    j["factors"] = Json::array();
    for (const auto &f : spec.factors) j["factors"].push_back(group_spec_to_json(f));
    break;
  }
  case GroupSpec::Kind::Table:
    j["kind"] = "table";
    j["table"] = spec.table;
    break;
  }
  return j;
}

std::vector<CatalogEntry> catalog_from_json(const Json &doc) {
  check_schema(doc, kCatalogSchema);
  const auto &groups = field(doc, "groups", "");
  if (!groups.is_array()) fail("groups", "expected an array");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto path = index_path("groups", i);
    CatalogEntry e;
    e.name = as_string(field(groups[i], "name", path), join(path, "name"));
    if (const auto it = groups[i].find("description"); it != groups[i].end())
      e.description = as_string(*it, join(path, "description"));
    // Entries may refer to earlier entries by name.
    e.spec = group_spec_from_json(field(groups[i], "spec", path), out, join(path, "spec"));
    out.push_back(std::move(e));
  }
  return out;
}

Json catalog_to_json(const std::vector<CatalogEntry> &catalog) {
  Json doc;
  doc["schema"] = kCatalogSchema;
  doc["groups"] = Json::array();
  for (const auto &e : catalog) {
    Json g;
    g["name"] = e.name;
    g["description"] = e.description;
    g["spec"] = group_spec_to_json(e.spec);
    doc["groups"].push_back(std::move(g));
  }
  return doc;
}

CoverDocument cover_from_json(const Json &doc, const std::vector<CatalogEntry> &catalog,
                              std::size_t max_order) {
  check_schema(doc, kCoverSchema);
  CoverDocument out{"", {0, build_group(GroupSpec::cyclic(1)), 0, {}}};
  if (const auto it = doc.find("name"); it != doc.end()) out.name = as_string(*it, "name");
  const auto p = as_uint(field(doc, "characteristic", ""), "characteristic");
  if (p > kMaxPrime) fail("characteristic", "larger than " + std::to_string(kMaxPrime));
  out.cover.p = static_cast<std::uint32_t>(p);
  out.cover.group = build_group(group_spec_from_json(field(doc, "group", ""), catalog, "group"), max_order);
  out.cover.quotient_genus = as_uint(field(doc, "quotient_genus", ""), "quotient_genus");
  const auto &points = field(doc, "branch_points", "");
  if (!points.is_array()) fail("branch_points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto path = index_path("branch_points", i);
    auto filtration = as_uint_array(field(points[i], "filtration", path), join(path, "filtration"));
    const auto gens = as_elements(field(points[i], "decomposition", path), join(path, "decomposition"));
    out.cover.branch_points.push_back({std::move(filtration), subgroup_generated(out.cover.group, gens)});
  }
  return out;
}

HomologyJob homology_job_from_json(const Json &doc, const std::vector<CatalogEntry> &catalog,
                                   std::size_t max_order) {
  check_schema(doc, kHomologyJobSchema);
  const auto p64 = as_uint(field(doc, "characteristic", ""), "characteristic");
  require_prime(p64);
  const auto p = static_cast<std::uint32_t>(p64);
  auto g = build_group(group_spec_from_json(field(doc, "group", ""), catalog, "group"), max_order);
  std::string description;
  auto m = module_from_json(field(doc, "module", ""), g, p, "module", description);
  std::vector<std::size_t> degrees{0, 1, 2};
  if (const auto it = doc.find("degrees"); it != doc.end()) {
    const auto d = as_uint_array(*it, "degrees");
    degrees.assign(d.begin(), d.end());
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (degrees[i] > 2) fail(index_path("degrees", i), "degree must be 0, 1 or 2");
  }
  return {p, std::move(g), std::move(m), std::move(description), std::move(degrees)};
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

} // namespace equideform::io
