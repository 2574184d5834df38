#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlm/explorer.hpp"
#include "dlm/io.hpp"
#include "dlm/parser.hpp"
#include "dlm/reduce.hpp"
#include "dlm/scenario.hpp"
#include "dlm/update.hpp"

namespace py = pybind11;
using namespace dlm;

namespace {

Signature make_signature(const std::vector<std::string>& agents, const std::vector<std::string>& props) {
  std::vector<AgentId> as;
  std::vector<PropId> ps;
  for (const auto& a : agents) as.push_back({a});
  for (const auto& p : props) ps.push_back({p});
  return {as, ps};
}

std::vector<std::string> agent_names(const Signature& s) {
  std::vector<std::string> out;
  for (const auto& a : s.agents()) out.push_back(a.name);
  return out;
}

std::vector<std::string> prop_names(const Signature& s) {
  std::vector<std::string> out;
  for (const auto& p : s.props()) out.push_back(p.name);
  return out;
}

std::string model_json(const PointedModel& pm) { return model_to_json(pm).dump(); }

}  // namespace

PYBIND11_MODULE(dlm, m) {
  m.doc() = "Model checking for the dynamic logic of misdirection";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Signature>(m, "Signature")
      .def(py::init(&make_signature), py::arg("agents"), py::arg("props"))
      .def_property_readonly("agents", &agent_names)
      .def_property_readonly("props", &prop_names);

  py::class_<Formula>(m, "Formula")
      .def("render", [](const Formula& f) { return render(f); })
      .def("is_static", [](const Formula& f) { return is_static(f); })
      .def("dynamic_depth", [](const Formula& f) { return dynamic_depth(f); })
      .def("size", &Formula::size)
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula(" + render(f) + ")"; });

  py::class_<PointedModel>(m, "PointedModel")
      .def_static("from_json", [](const std::string& text) { return model_from_json(nlohmann::json::parse(text)); })
      .def("to_json", &model_json)
      .def_property_readonly("signature", [](const PointedModel& pm) { return pm.model.signature(); })
      .def_property_readonly("worlds", [](const PointedModel& pm) { return pm.model.worlds(); })
      .def_property_readonly("point", &PointedModel::point_name)
      .def("atoms_at", [](const PointedModel& pm, const std::string& world) {
        std::vector<std::string> out;
        for (const Atom& a : pm.model.atoms_at(pm.model.require_world(world))) out.push_back(to_string(a));
        return out;
      });

  py::class_<PointedAction>(m, "PointedAction").def_readonly("label", &PointedAction::label);

  m.def("parse", [](const std::string& text, const Signature& sig) { return parse(text, sig); }, py::arg("text"),
        py::arg("signature"));
  m.def("parse_action", [](const std::string& text, const Signature& sig) { return parse_action(text, sig); },
        py::arg("text"), py::arg("signature"));
  m.def("satisfies", [](const PointedModel& pm, const Formula& f) { return satisfies(pm, f); });
  m.def("translate", &translate);
  m.def("simplify", &simplify);
  m.def("apply", &apply, "Product update at the point; None if the action is not executable");

  m.def(
      "check_validity",
      [](const Formula& f, const Signature& sig, std::size_t max_worlds, const std::string& frame_class)
          -> std::optional<PointedModel> {
        const ValidityResult r = check_validity(f, make_bounds(max_worlds, sig, frame_class_from_string(frame_class)));
        if (const auto* c = std::get_if<Countermodel>(&r)) return c->model;
        return std::nullopt;
      },
      py::arg("formula"), py::arg("signature"), py::arg("max_worlds") = 2, py::arg("frame_class") = "observational",
      "First countermodel within the bounds, or None if the formula is valid there");
  m.def(
      "find_witness",
      [](const Formula& f, const Signature& sig, std::size_t max_worlds, const std::string& frame_class) {
        return find_witness(f, make_bounds(max_worlds, sig, frame_class_from_string(frame_class)));
      },
      py::arg("formula"), py::arg("signature"), py::arg("max_worlds") = 2, py::arg("frame_class") = "observational");

  m.def("french_drop", [] {
    const ScenarioReport r = run_french_drop();
    py::dict out;
    py::list counts;
    for (const auto& s : r.stages) counts.append(s.model.world_count());
    py::list checks;
    for (const auto& c : r.checks) checks.append(py::make_tuple(c.stage, c.formula, c.holds));
    out["world_counts"] = counts;
    out["checks"] = checks;
    out["ok"] = r.ok();
    return out;
  });
}
