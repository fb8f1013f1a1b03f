// Python bindings. Reports cross the boundary as JSON text; the package
// __init__ turns them into dicts.

#include "equideform/catalog.hpp"
#include "equideform/cli.hpp"
#include "equideform/dimensions.hpp"
#include "equideform/error.hpp"
#include "equideform/io.hpp"
#include "equideform/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace equideform;

namespace {

FiniteGroup group_from_json(const std::string &spec, std::size_t max_order) {
  return build_group(io::group_spec_from_json(io::parse_document(spec), builtin_catalog()), max_order);
}

std::vector<Subgroup> subgroups_from(const FiniteGroup &g, const std::vector<std::vector<Element>> &gens) {
  std::vector<Subgroup> out;
  for (const auto &gs : gens) out.push_back(subgroup_generated(g, gs));
  return out;
}

ImAlphaConvention convention_from(const std::string &name) {
  if (name == "paper") return ImAlphaConvention::PaperCeilingFromE1;
  if (name == "classical") return ImAlphaConvention::ClassicalFloorFromE0;
  throw Error(ErrorKind::InvalidArgument, "convention must be 'paper' or 'classical'");
}

RamifiedCover cover_from(const std::string &text) {
  return io::cover_from_json(io::parse_document(text), builtin_catalog()).cover;
}

} // namespace

PYBIND11_MODULE(_equideform, m) {
  m.doc() = "Covariant dimension counts for curves with automorphisms";
  m.attr("__version__") = cli::kToolVersion;

  py::register_exception<Error>(m, "EquideformError", PyExc_ValueError);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto &e : builtin_catalog()) names.push_back(e.name);
    return names;
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("from_spec", &group_from_json, py::arg("spec_json"), py::arg("max_order") = kDefaultMaxOrder)
      .def_static("from_table", &FiniteGroup::from_table, py::arg("table"), py::arg("max_order") = kDefaultMaxOrder)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", &FiniteGroup::table)
      .def("subgroups", [](const FiniteGroup &g) {
        std::vector<std::vector<Element>> out;
        for (const auto &h : all_subgroups(g)) out.emplace_back(h.members().begin(), h.members().end());
        return out;
      })
      .def("subgroup_generated", [](const FiniteGroup &g, const std::vector<Element> &gens) {
        const auto h = subgroup_generated(g, gens);
        return std::vector<Element>(h.members().begin(), h.members().end());
      })
      .def("commutator_subgroup", [](const FiniteGroup &g) {
        const auto h = commutator_subgroup(g);
        return std::vector<Element>(h.members().begin(), h.members().end());
      })
      .def("abelianization_p_rank", &abelianization_p_rank);

  py::class_<GModule>(m, "GModule")
      .def_static("trivial", &trivial_module)
      .def_static("regular", &regular_module)
      .def_static("permutation", [](const FiniteGroup &g, const std::vector<Element> &gens, std::uint32_t p) {
        return permutation_module(subgroup_generated(g, gens), p);
      }, py::arg("group"), py::arg("generators"), py::arg("p"))
      .def_static("kernel_of_summation",
                  [](const FiniteGroup &g, std::uint32_t p, const std::vector<std::vector<Element>> &gens) {
                    return kernel_module(build_phi_morphism(g, p, subgroups_from(g, gens)));
                  }, py::arg("group"), py::arg("p"), py::arg("subgroup_generators"))
      .def_property_readonly("dim", &GModule::dim)
      .def_property_readonly("prime", &GModule::prime)
      .def("homology_dim", [](const GModule &mod, std::size_t n) { return homology_dim(mod, n); })
      .def("coinvariants_dim", &coinvariants_dim);

  m.def("rank_mod_p", [](const std::vector<std::vector<std::int64_t>> &rows, std::uint32_t p) {
    std::vector<std::int64_t> flat;
    for (const auto &r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return rank_mod_p(PrimeFieldMatrix::from_integers(rows.size(), rows.empty() ? 0 : rows[0].size(), p, flat));
  });
  m.def("smith_normal_form", [](const std::vector<std::vector<std::int64_t>> &rows) {
    std::vector<std::int64_t> flat;
    for (const auto &r : rows) flat.insert(flat.end(), r.begin(), r.end());
    std::vector<std::string> out;
    for (const auto &d : smith_normal_form(IntegerMatrix(rows.size(), rows.empty() ? 0 : rows[0].size(), flat)))
      out.push_back(d.str());
    return out;
  });

  m.def("_psi_report", [](const FiniteGroup &g, std::uint32_t p, const std::vector<std::vector<Element>> &gens) {
    return cli::psi_report_to_json(psi_report(g, p, subgroups_from(g, gens))).dump();
  });
  m.def("_dim_im_alpha", [](const std::string &cover, const std::string &convention) {
    const auto r = dim_im_alpha(cover_from(cover), convention_from(convention));
    return py::make_tuple(r.value, r.nonspecial, r.diagnostics);
  });
  m.def("_ordinary_report", [](const std::string &cover, const std::string &convention) {
    return cli::dimension_report_to_json(ordinary_report(cover_from(cover), convention_from(convention))).dump();
  });
  m.def("_validate_cover", [](const std::string &cover) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &v : validate_cover(cover_from(cover))) out.emplace_back(v.code, v.message);
    return out;
  });

  m.def("run_job", [](const std::string &command, const std::string &input, const std::string &convention,
                      const std::string &format, std::optional<std::size_t> max_order,
                      std::optional<std::size_t> degree, const std::string &scope) {
    cli::JobSpec job;
    const auto cmd = cli::parse_command(command);
    if (!cmd) throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
    job.command = *cmd;
    job.input_path = input;
    job.convention = convention_from(convention);
    job.format = format == "csv" ? cli::Format::Csv : format == "text" ? cli::Format::Text : cli::Format::Json;
    if (max_order) {
      job.max_order = *max_order;
      job.max_order_source = cli::LimitSource::Flag;
    }
    job.degree = degree;
    job.scope = scope == "full" ? VerifyScope::Full : VerifyScope::Fast;
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run_job(job, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("command"), py::arg("input") = "", py::arg("convention") = "paper", py::arg("format") = "json",
     py::arg("max_order") = py::none(), py::arg("degree") = py::none(), py::arg("scope") = "fast");
}
