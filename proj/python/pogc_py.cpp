// Python bindings. Pogs cross the boundary as Pog objects or in the native
// text format; results come back as plain dicts shaped like the CLI's JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "pogc/aux_graph.hpp"
#include "pogc/classify.hpp"
#include "pogc/completions.hpp"
#include "pogc/errors.hpp"
#include "pogc/friendly.hpp"
#include "pogc/hardness.hpp"
#include "pogc/interval.hpp"
#include "pogc/json.hpp"
#include "pogc/round.hpp"

namespace py = pybind11;
using namespace pogc;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object outcome(const Pog& p, const Outcome<Pog>& r, const std::string& cls) {
  nlohmann::json j{{"status", r.ok() ? "yes" : "no"}, {"class", cls}};
  if (r.ok())
    j["arcs"] = arcs_to_json(r.value());
  else
    j["certificate"] = certificate_to_json(p, r.certificate());
  return to_py(j);
}

Outcome<Pog> run_class(const Pog& p, const std::string& cls) {
  if (cls == "lt") return complete_via_aux(p);
  if (cls == "quasi-transitive") return complete_via_aux(p, AuxMode::quasi_transitive);
  if (cls == "acyclic-lt") return complete_to_acyclic_lt(p);
  if (cls == "ltlt-friendly") return complete_friendly(p);
  if (cls == "transitive") return complete_to_transitive_tournament(p);
  if (cls == "in-tournament") return complete_to_in_tournament(p);
  if (cls == "strong") return complete_to_strong(p);
  if (cls == "cycle-factor") return complete_to_cycle_factor_bruteforce(p);
  throw py::value_error("unknown class " + cls);
}

std::vector<std::pair<std::string, std::string>> named(const Pog& p, const std::vector<Arc>& as) {
  std::vector<std::pair<std::string, std::string>> out;
  for (Arc a : as) out.emplace_back(p.name(a.tail), p.name(a.head));
  return out;
}

OrderCheck kind_of(const std::string& k) {
  if (k == "round") return OrderCheck::round;
  if (k == "excellent") return OrderCheck::excellent;
  if (k == "nice") return OrderCheck::nice;
  throw py::value_error("unknown ordering kind " + k);
}

}  // namespace

PYBIND11_MODULE(pogc, m) {
  m.doc() = "Completions of partially oriented graphs";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
  py::register_exception<UnsupportedInstance>(m, "UnsupportedInstance", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

  py::class_<Pog>(m, "Pog")
      .def(py::init([](const std::string& text) { return parse_pog(text); }), py::arg("text") = "")
      .def("__len__", &Pog::size)
      .def_property_readonly("names", &Pog::names)
      .def_property_readonly("arcs", [](const Pog& p) { return named(p, p.arcs()); })
      .def_property_readonly("edges", [](const Pog& p) { return named(p, p.edges()); })
      .def("render", [](const Pog& p, bool dot) { return render_pog(p, dot ? Format::dot : Format::native); },
           py::arg("dot") = false)
      .def("__repr__", [](const Pog& p) {
        return "<Pog " + std::to_string(p.size()) + " vertices, " + std::to_string(p.arc_count()) + " arcs, " +
               std::to_string(p.edge_count()) + " edges>";
      });

  m.def("complete", [](const Pog& p, const std::string& cls) { return outcome(p, run_class(p, cls), cls); },
        py::arg("pog"), py::arg("cls") = "lt", "Complete to a class; returns {status, class, arcs|certificate}.");

  m.def(
      "classify",
      [](const Pog& p) {
        auto r = classify(p);
        return py::dict(py::arg("oriented") = r.oriented.holds, py::arg("tournament") = r.tournament.holds,
                        py::arg("local_tournament") = r.local_tournament.holds,
                        py::arg("locally_transitive") = r.locally_transitive.holds,
                        py::arg("in_tournament") = r.in_tournament.holds,
                        py::arg("quasi_transitive") = r.quasi_transitive.holds, py::arg("acyclic") = r.acyclic.holds,
                        py::arg("strong") = r.strong.holds);
      },
      py::arg("pog"));

  m.def(
      "check_ordering",
      [](const Pog& p, const std::vector<std::string>& order, const std::string& kind) {
        Ordering o{OrderKind::cyclic, {}};
        for (const auto& s : order) {
          auto v = p.find(s);
          if (!v) throw py::value_error("unknown vertex " + s);
          o.seq.push_back(*v);
        }
        if (!is_permutation_of(o, p.size())) throw py::value_error("ordering must list every vertex once");
        auto r = check_ordering(p, o, kind_of(kind));
        std::vector<std::string> tuple;
        for (Vertex v : r.tuple) tuple.push_back(p.name(v));
        return py::make_tuple(r.ok, tuple);
      },
      py::arg("pog"), py::arg("order"), py::arg("kind") = "excellent");

  m.def(
      "reduce_3sat",
      [](const std::string& dimacs) { return build_reduction(parse_dimacs(dimacs)).pog; }, py::arg("dimacs"));

  m.def(
      "witness_ordering",
      [](const std::string& dimacs, const std::string& assignment) {
        auto r = build_reduction(parse_dimacs(dimacs));
        Ordering o = assignment_to_ordering(r, parse_assignment(assignment, r.formula.n_vars));
        std::vector<std::string> out;
        for (Vertex v : o.seq) out.push_back(r.pog.name(v));
        return out;
      },
      py::arg("dimacs"), py::arg("assignment"));

  m.def(
      "verify_certificate",
      [](const Pog& p, const std::string& cert_json) {
        return verify_certificate(p, certificate_from_json(p, nlohmann::json::parse(cert_json)));
      },
      py::arg("pog"), py::arg("certificate_json"));
}
