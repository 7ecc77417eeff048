#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topolens/errors.hpp"
#include "topolens/frames.hpp"
#include "topolens/io.hpp"
#include "topolens/powerdomain.hpp"
#include "topolens/properties.hpp"
#include "topolens/suite.hpp"
#include "topolens/symbolic.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace topolens;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.
FinSpace space_of(const std::string& text) { return space_from_json(parse_json(text)); }

std::string py_space_report(const std::string& text) {
  const FinSpace s = space_of(text);
  const SpaceProperties p = property_report(s);
  return json{{"properties", to_json(p)}, {"law_violations", law_violations(p)}}.dump();
}

std::string py_hyperspace(const std::string& text) {
  const FinSpace s = space_of(text);
  const HyperspaceReport r = check_embedding(s);
  json out = to_json(r);
  out["lenses"] = to_json(lenses(s));
  out["quasi_lenses"] = to_json(quasi_lenses(s));
  out["lemma_hypothesis_holds"] = lemma_hypothesis_check(s).holds;
  return out.dump();
}

std::string py_duality(const std::string& text) {
  const FinSpace s = space_of(text);
  return json{{"stone", stone_json(stone_round_trip(s))},
              {"hofmann_mislove", hofmann_mislove_json(hofmann_mislove_report(s))}}
      .dump();
}

std::string py_lattice_report(const std::string& text) {
  const FinLattice l = lattice_from_json(parse_json(text));
  json filters = json::array();
  for (const Filter& f : filters_of(l, FilterKind::kAll)) filters.push_back(to_json(f));
  json out{{"frame", to_json(frame_report(l))},
           {"filters", filters},
           {"temperance", to_json(temperance_report(l))},
           {"waybelow", to_json(waybelow_and_stability(l))}};
  if (frame_report(l).is_frame) out["points"] = space_to_json(points_space(l).space);
  return out.dump();
}

std::string py_suite(std::uint64_t seed, int max_points, int samples, std::vector<std::string> suites) {
  SuiteConfig c;
  c.seed = seed;
  c.max_points = max_points;
  c.samples = samples;
  c.suites = std::set<std::string>(suites.begin(), suites.end());
  return run_suite(c).report.dump();
}

std::string py_examples() { return to_json(cn_counterexample_suite()).dump(); }

std::string py_certificate(const std::string& text) {
  const Certificate cert = Certificate::from_json(parse_json(text));
  const CertificateResult r = certificate_check(backend_from_name(cert.space), cert);
  return json{{"valid", r.valid}, {"detail", r.detail}}.dump();
}

CofinSet cofin_of(bool cofinite, std::vector<CofinSet::Nat> support) {
  return cofinite ? CofinSet::cofinite(std::move(support)) : CofinSet::finite(std::move(support));
}

bool py_quasi_lens(bool q_cofinite, std::vector<CofinSet::Nat> q, bool c_cofinite,
                std::vector<CofinSet::Nat> c) {
  return cn_quasi_lens(cofin_of(q_cofinite, std::move(q)), cofin_of(c_cofinite, std::move(c)))
      .is_quasi_lens;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "topolens C++ core";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("space_report", &py_space_report, py::arg("space_json"));
  m.def("hyperspace", &py_hyperspace, py::arg("space_json"));
  m.def("duality", &py_duality, py::arg("space_json"));
  m.def("lattice_report", &py_lattice_report, py::arg("lattice_json"));
  m.def("run_suite", &py_suite, py::arg("seed"), py::arg("max_points"), py::arg("samples"),
        py::arg("suites"));
  m.def("examples", &py_examples);
  m.def("certificate_check", &py_certificate, py::arg("certificate_json"));
  m.def("cn_quasi_lens", &py_quasi_lens, py::arg("q_cofinite"), py::arg("q"), py::arg("c_cofinite"),
        py::arg("c"));
}
