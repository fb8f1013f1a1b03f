#include "equideform/cli.hpp"

#include "equideform/error.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace equideform::cli {

using io::Json;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string base_name(const std::string &path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

Json optional_to_json(const std::optional<std::size_t> &v) { return v ? Json(*v) : Json(nullptr); }

Json conventions(const JobSpec &job) {
  Json c;
  c["homology_coefficients"] = "F_p";
  c["bar_complex"] = "normalized";
  c["right_action"] = "m.g = g^-1 m";
  c["hopf_mode_h2"] = "p-divisible invariant factors of the integral normalized d3";
  c["im_alpha"] = convention_name(job.convention);
  c["riemann_hurwitz_index_start"] = index_start_name(IndexStart::FromE0);
  c["covariants_exact"] = "H1(ker Phi) + 3g_Y - 3 + 2r - dim (ker Phi)_G";
  c["summands"] = "one k[G/G_i] per branch point";
  return c;
}

Json limits_json(const JobSpec &job) {
  Json l;
  l["max_order"] = job.max_order;
  l["max_order_source"] = limit_source_name(job.max_order_source);
  l["max_cells"] = job.limits.max_cells;
  l["max_integral_entries"] = job.limits.max_integral_entries;
  return l;
}

Json strings_json(const std::vector<std::string> &v) {
  Json a = Json::array();
  for (const auto &s : v) a.push_back(s);
  return a;
}

Json cover_summary(const io::CoverDocument &doc) {
  Json j;
  j["name"] = doc.name;
  j["characteristic"] = doc.cover.p;
  j["group_order"] = doc.cover.group.order();
  j["quotient_genus"] = doc.cover.quotient_genus;
  j["branch_points"] = doc.cover.branch_points.size();
  Json subs = Json::array();
  for (const auto &b : doc.cover.branch_points) subs.push_back(b.decomposition.order());
  j["decomposition_orders"] = subs;
  return j;
}

struct Loaded {
  std::string name;
  std::string digest;
  Json doc;
};

Loaded load_input(const JobSpec &job) {
  if (job.input_path.empty()) throw Error(ErrorKind::Parse, "--input is required for this command");
  const auto text = read_file(job.input_path);
  return {base_name(job.input_path), io::sha256_hex(text), io::parse_document(text)};
}

std::vector<CatalogEntry> load_catalog(const JobSpec &job) {
  if (!job.catalog_path) return builtin_catalog();
  return io::catalog_from_json(io::parse_document(read_file(*job.catalog_path)));
}

Json run_dim_im_alpha(const JobSpec &job, const Json &doc, std::vector<std::string> &diag) {
  const auto cover = io::cover_from_json(doc, load_catalog(job), job.max_order);
  const auto r = dim_im_alpha(cover.cover, job.convention);
  Json j;
  j["cover"] = cover_summary(cover);
  j["dim_im_alpha"] = r.value;
  j["local_terms"] = r.local_terms;
  j["nonspecial"] = r.nonspecial;
  j["degree_r_from_e0"] = ramification_divisor_degree(cover.cover, IndexStart::FromE0);
  j["degree_r_from_e1"] = ramification_divisor_degree(cover.cover, IndexStart::FromE1);
  j["genus_x"] = genus_via_riemann_hurwitz(cover.cover);
  diag.insert(diag.end(), r.diagnostics.begin(), r.diagnostics.end());
  return j;
}

Json run_ordinary(const JobSpec &job, const Json &doc, std::vector<std::string> &diag) {
  const auto cover = io::cover_from_json(doc, load_catalog(job), job.max_order);
  const auto rep = ordinary_report(cover.cover, job.convention, job.limits);
  Json j;
  j["cover"] = cover_summary(cover);
  const auto body = dimension_report_to_json(rep);
  for (const auto &[k, v] : body.items()) j[k] = v;
  diag.insert(diag.end(), rep.diagnostics.begin(), rep.diagnostics.end());
  return j;
}

Json run_homology(const JobSpec &job, const Json &doc) {
  auto h = io::homology_job_from_json(doc, load_catalog(job), job.max_order);
  if (job.degree) {
    if (*job.degree > 2) throw Error(ErrorKind::InvalidArgument, "--degree must be 0, 1 or 2");
    h.degrees = {*job.degree};
  }
  Json j;
  j["characteristic"] = h.p;
  j["group_order"] = h.group.order();
  j["module"] = h.module_description;
  j["module_dim"] = h.module.dim();
  Json dims;
  for (auto n : h.degrees) dims["H" + std::to_string(n)] = homology_dim(h.module, n, job.limits);
  j["homology"] = dims;
  return j;
}

Json run_psi(const JobSpec &job, const Json &doc, std::vector<std::string> &diag) {
  const auto cover = io::cover_from_json(doc, load_catalog(job), job.max_order);
  require_valid(cover.cover);
  const auto subs = decomposition_groups(cover.cover);
  const auto rep = psi_report(cover.cover.group, cover.cover.p, subs, job.limits);
  Json j;
  j["cover"] = cover_summary(cover);
  j["psi"] = psi_report_to_json(rep);
  j["corollary_delta"] = static_cast<std::int64_t>(rep.psi1.cokernel) -
                         (static_cast<std::int64_t>(abelianization_p_rank(cover.cover.group, cover.cover.p)) - 1);
  diag.insert(diag.end(), rep.diagnostics.begin(), rep.diagnostics.end());
  return j;
}

Json run_verify(const JobSpec &job, bool &ok) {
  VerifyOptions opt;
  opt.scope = job.scope;
  opt.limits = job.limits;
  const auto s = verify_suite(opt);
  ok = s.ok();
  Json j;
  j["scope"] = job.scope == VerifyScope::Fast ? "fast" : "full";
  j["checks_run"] = s.checks.size();
  j["passed"] = s.passed();
  j["failed"] = s.failed();
  Json fam;
  for (const auto &name : verify_families()) {
    std::size_t run = 0, pass = 0;
    for (const auto &c : s.checks)
      if (c.family == name) {
        ++run;
        pass += c.passed ? 1 : 0;
      }
    fam[name] = {{"run", run}, {"passed", pass}, {"failed", run - pass}};
  }
  j["families"] = fam;
  Json failures = Json::array();
  for (const auto &c : s.checks)
    if (!c.passed) failures.push_back({{"family", c.family}, {"subject", c.subject}, {"detail", c.detail}});
  j["failures"] = failures;
  return j;
}

// Flattening for CSV and text output.
void flatten(const Json &node, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out) {
  if (node.is_object()) {
    for (const auto &[k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (node.is_array()) {
    const bool scalars = std::all_of(node.begin(), node.end(), [](const Json &x) { return x.is_primitive(); });
    if (!scalars) {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (i) joined += node[i].is_string() ? " | " : ";";
      joined += node[i].is_string() ? node[i].get<std::string>() : node[i].dump();
    }
    out.emplace_back(prefix, joined);
    return;
  }
  if (node.is_null()) out.emplace_back(prefix, "");
  else if (node.is_string()) out.emplace_back(prefix, node.get<std::string>());
  else out.emplace_back(prefix, node.dump());
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

} // namespace

const char *command_name(Command c) noexcept {
  switch (c) {
  case Command::DimImAlpha: return "dim-im-alpha";
  case Command::OrdinaryCovariants: return "ordinary-covariants";
  case Command::Homology: return "homology";
  case Command::PsiReport: return "psi-report";
  case Command::Verify: return "verify";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (auto c : {Command::DimImAlpha, Command::OrdinaryCovariants, Command::Homology, Command::PsiReport,
                 Command::Verify})
    if (name == command_name(c)) return c;
  return std::nullopt;
}

const char *limit_source_name(LimitSource s) noexcept {
  switch (s) {
  case LimitSource::Default: return "default";
  case LimitSource::Env: return "env";
  case LimitSource::Flag: return "flag";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::Parse: return kExitMalformed;
  case ErrorKind::SizeCapExceeded: return kExitSizeCap;
  default: return kExitInvalid;
  }
}

void resolve_max_order(JobSpec &job, std::optional<std::size_t> flag, const char *env_value) {
  if (flag) {
    job.max_order = *flag;
    job.max_order_source = LimitSource::Flag;
    return;
  }
  if (env_value && *env_value) {
    const std::string_view s(env_value);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw Error(ErrorKind::InvalidArgument,
                  std::string(kMaxOrderEnv) + " must be a positive integer, got '" + env_value + "'");
    job.max_order = v;
    job.max_order_source = LimitSource::Env;
    return;
  }
  job.max_order = kDefaultMaxOrder;
  job.max_order_source = LimitSource::Default;
}

Json psi_report_to_json(const PsiReport &rep) {
  Json j;
  j["psi1"] = {{"source_dim", rep.psi1.source_dim},
               {"target_dim", rep.psi1.target_dim},
               {"rank", rep.psi1.rank},
               {"cokernel", rep.psi1.cokernel}};
  j["psi2"] = {{"source_dim", rep.psi2.source_dim},
               {"target_dim", rep.psi2.target_dim},
               {"rank", rep.psi2.rank},
               {"kernel", rep.psi2.kernel},
               {"group_theoretic_kernel", optional_to_json(rep.psi2.group_theoretic_kernel)}};
  Json subs = Json::array();
  for (const auto &s : rep.hopf.subgroups) subs.push_back(optional_to_json(s));
  j["hopf_h2"] = {{"group", optional_to_json(rep.hopf.group)}, {"subgroups", subs}};
  return j;
}

Json dimension_report_to_json(const DimensionReport &rep) {
  Json j;
  j["dim_im_alpha"] = rep.im_alpha.value;
  j["im_alpha_local_terms"] = rep.im_alpha.local_terms;
  j["nonspecial"] = rep.im_alpha.nonspecial;
  j["degree_r_from_e0"] = rep.degree_r_from_e0;
  j["degree_r_from_e1"] = rep.degree_r_from_e1;
  j["genus_x"] = rep.genus_x;
  j["ell_k_plus_a"] = rep.ell_k_plus_a;
  j["a_coefficients"] = rep.a_coefficients;
  j["ordinary_compatible"] = rep.ordinarity.compatible;
  j["psi"] = psi_report_to_json(rep.psi);
  j["h1_trivial"] = rep.h1_trivial;
  j["h1_ker_phi"] = {{"route_a", rep.h1_ker_phi.route_a}, {"route_b", rep.h1_ker_phi.route_b}};
  j["ker_phi_dim"] = rep.ker_phi_dim;
  j["ker_phi_coinvariants"] = rep.ker_phi_coinvariants;
  j["covariants"] = {{"exact", rep.covariants.exact},
                     {"paper_plus1", rep.covariants.paper_plus1},
                     {"paper_minus1", rep.covariants.paper_minus1}};
  j["corollary_delta"] = rep.corollary_delta;
  j["corollary_delta_hopf"] = rep.corollary_delta_hopf ? Json(*rep.corollary_delta_hopf) : Json(nullptr);
  return j;
}

std::string render(const Json &report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(report, "", flat);
  std::string out;
  if (format == Format::Text) {
    for (const auto &[k, v] : flat) out += k + " = " + v + "\n";
    return out;
  }
  for (std::size_t i = 0; i < flat.size(); ++i) out += (i ? "," : "") + csv_field(flat[i].first);
  out += "\n";
  for (std::size_t i = 0; i < flat.size(); ++i) out += (i ? "," : "") + csv_field(flat[i].second);
  return out + "\n";
}

int run_job(const JobSpec &job, std::ostream &out, std::ostream &err) {
  try {
    Json report;
    report["schema"] = io::kReportSchema;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = command_name(job.command);

    std::vector<std::string> diag;
    Json result;
    bool verify_ok = true;
    if (job.command == Command::Verify) {
      report["input"] = nullptr;
      report["conventions"] = conventions(job);
      report["limits"] = limits_json(job);
      result = run_verify(job, verify_ok);
    } else {
      const auto in = load_input(job);
      report["input"] = {{"name", in.name}, {"sha256", in.digest}};
      report["conventions"] = conventions(job);
      report["limits"] = limits_json(job);
      switch (job.command) {
      case Command::DimImAlpha: result = run_dim_im_alpha(job, in.doc, diag); break;
      case Command::OrdinaryCovariants: result = run_ordinary(job, in.doc, diag); break;
      case Command::Homology: result = run_homology(job, in.doc); break;
      case Command::PsiReport: result = run_psi(job, in.doc, diag); break;
      case Command::Verify: break;
      }
    }
    if (job.degree && job.command != Command::Homology)
      diag.push_back("--degree only applies to the homology command and was ignored");
    report["result"] = std::move(result);
    report["diagnostics"] = strings_json(diag);
    out << render(report, job.format);
    return verify_ok ? kExitOk : kExitVerifyFailed;
  } catch (const Error &e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

} // namespace equideform::cli
