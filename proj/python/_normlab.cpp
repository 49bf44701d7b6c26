#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normlab/catalog.hpp"
#include "normlab/commands.hpp"
#include "normlab/error.hpp"
#include "normlab/limits.hpp"
#include "normlab/report.hpp"
#include "normlab/scan.hpp"
#include "normlab/structure.hpp"

namespace py = pybind11;
using namespace normlab;

namespace {

Group group_from_strings(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const std::string& s : gens) perms.push_back(parse_cycles(degree, s));
  return Group::from_generators(degree, std::move(perms));
}

std::vector<std::string> generator_list(const Group& g) {
  std::vector<std::string> out;
  for (const Perm& p : g.generators()) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> report_strings(const std::vector<VerdictReport>& reports) {
  std::vector<std::string> out;
  for (const VerdictReport& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_normlab, m) {
  m.doc() = "Permutation groups and maximal-normalizer checks";
  m.attr("__version__") = tool_version();

  py::register_exception<Error>(m, "NormlabError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def(py::init(&group_from_strings), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("generators", &generator_list)
      .def("order", &Group::order)
      .def("contains", [](const Group& g, const std::string& p) { return g.contains(parse_cycles(g.degree(), p)); })
      .def("orbit", &Group::orbit, py::arg("point"))
      .def("is_solvable", [](const Group& g) { return is_solvable(g); })
      .def("is_nilpotent", [](const Group& g) { return is_nilpotent(g); })
      .def("fitting_order", [](const Group& g) { return fitting_subgroup(g).order(); })
      .def("center_order", [](const Group& g) { return center(g).order(); })
      .def("fingerprint", [](const Group& g) { return fingerprint(g); })
      .def("__repr__", [](const Group& g) {
        return "<Group degree=" + std::to_string(g.degree()) + " order=" + std::to_string(g.order()) + ">";
      });

  m.def(
      "build",
      [](const std::string& spec, const std::string& selector) {
        BuiltGroup b = build(parse_spec(spec), parse_selector(selector));
        std::optional<Group> h;
        if (b.subgroup) h = b.subgroup->group();
        return py::make_tuple(b.group, h);
      },
      py::arg("spec"), py::arg("selector") = "");

  m.def(
      "analyze",
      [](const std::string& spec, const std::string& selector) {
        return analyze_group(build(parse_spec(spec), parse_selector(selector)));
      },
      py::arg("spec"), py::arg("selector") = "");

  m.def(
      "verify",
      [](const std::string& theorem, const std::string& group, const std::string& subgroup, const std::string& kernel,
         const std::string& mode) {
        return report_strings(verify_by_name(VerifyRequest{theorem, group, subgroup, kernel, parse_modes(mode, false)}));
      },
      py::arg("theorem"), py::arg("group"), py::arg("subgroup") = "", py::arg("kernel") = "",
      py::arg("mode") = "fit-normal");

  m.def(
      "scan",
      [](const std::vector<std::string>& groups, const std::string& sweep, std::uint64_t max_order,
         const std::string& theorems, const std::string& mode, unsigned jobs) {
        const std::vector<GroupSpec> specs = resolve_scan_specs(groups, sweep);
        ScanOptions options;
        options.max_order = max_order;
        options.theorems = parse_theorem_list(theorems);
        options.modes = parse_modes(mode, true);
        options.jobs = std::max(1u, jobs);
        if (max_order > limits::subgroup_scan_bound()) limits::set_subgroup_scan_bound(max_order);
        ReportDocument doc;
        {
          py::gil_scoped_release release;
          ScanResult result = scan(specs, options);
          doc.reports = std::move(result.reports);
          doc.stats = std::move(result.stats);
        }
        doc.tool_version = tool_version();
        doc.invocation = {"python", "scan"};
        doc.summary = tally(doc.reports);
        return to_json(doc, -1);
      },
      py::arg("groups") = std::vector<std::string>{}, py::arg("sweep") = "", py::arg("max_order") = 2500,
      py::arg("theorems") = "", py::arg("mode") = "both", py::arg("jobs") = 1);

  m.def("set_enumeration_bound", &limits::set_enumeration_bound, py::arg("bound"));
  m.def("theorem_names", &theorem_names);
}
