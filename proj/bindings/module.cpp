// Python module: thin JSON-string bridge over the core. The package
// __init__ wraps these with dict-friendly signatures.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csigma/cases.hpp"
#include "csigma/json_io.hpp"

namespace py = pybind11;
using csigma::Rational;
using csigma::io::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw csigma::SpecError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::string sigma_report(const std::string& space_spec, int first, int last,
                         const std::string& radius, const std::string& inner,
                         const std::string& witness) {
  auto space = csigma::io::space_from_json(parse(space_spec, "space spec"));
  csigma::space::Truncation trunc;
  trunc.outer_radius = csigma::parse_rational(radius);
  if (!inner.empty()) trunc.inner_radius = csigma::parse_rational(inner);
  if (!witness.empty()) trunc.witness_margin = csigma::parse_rational(witness);
  auto window = csigma::sigma::ind_sigma(space, first, last, trunc);
  return csigma::io::sigma_report(window).dump();
}

std::vector<std::string> ball(const std::string& space_spec, const std::string& radius) {
  auto space = csigma::io::space_from_json(parse(space_spec, "space spec"));
  std::vector<std::string> out;
  for (auto id : space.enumerate_ball(csigma::parse_rational(radius)))
    out.push_back(space.label(id).str());
  return out;
}

std::string distance(const std::string& space_spec, int a, int b, const std::string& radius) {
  auto space = csigma::io::space_from_json(parse(space_spec, "space spec"));
  auto ids = space.enumerate_ball(csigma::parse_rational(radius));
  if (a < 0 || b < 0 || a >= static_cast<int>(ids.size()) || b >= static_cast<int>(ids.size()))
    throw csigma::SpecError("point index outside the enumerated ball");
  return space.distance(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]).str();
}

std::string direct_limit(const std::string& seq_json) {
  auto seq = csigma::io::dirseq_from_json(parse(seq_json, "sequence"));
  return csigma::io::limit_json(csigma::dirseq::direct_limit(seq), seq).dump();
}

std::string cardinality_obstruction(const std::string& a_json, const std::string& b_json) {
  auto a = csigma::io::dirseq_from_json(parse(a_json, "sequence"));
  auto b = csigma::io::dirseq_from_json(parse(b_json, "sequence"));
  return csigma::io::obstruction_json(csigma::dirseq::cardinality_obstruction(a, b)).dump();
}

std::string check_equivalence(const std::string& f_json, const std::string& g_json,
                              const std::string& a_json, const std::string& b_json) {
  auto a = csigma::io::dirseq_from_json(parse(a_json, "sequence"));
  auto b = csigma::io::dirseq_from_json(parse(b_json, "sequence"));
  const auto* ca = std::get_if<csigma::dirseq::ConcreteSequence>(&a);
  const auto* cb = std::get_if<csigma::dirseq::ConcreteSequence>(&b);
  if (!ca || !cb) throw csigma::SpecError("equivalence checking needs concrete sequences");
  auto f = csigma::io::morphism_from_json(parse(f_json, "morphism"));
  auto g = csigma::io::morphism_from_json(parse(g_json, "morphism"));
  return csigma::io::equivalence_json(csigma::dirseq::check_equivalence(f, g, *ca, *cb)).dump();
}

std::string oracle_agreement(const std::string& space_spec, int scale, const std::string& radius,
                             const std::string& witness, long long walk_budget) {
  auto space = csigma::io::space_from_json(parse(space_spec, "space spec"));
  csigma::space::Truncation trunc;
  trunc.outer_radius = csigma::parse_rational(radius);
  if (!witness.empty()) trunc.witness_margin = csigma::parse_rational(witness);
  csigma::seqcore::OracleModel guards;
  guards.walk_budget = walk_budget;
  return csigma::io::oracle_agreement_json(
             csigma::sigma::compare_with_oracle(space, scale, trunc, guards))
      .dump();
}

std::string run_cases(const std::string& filter) {
  return csigma::cases::run_all(filter).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "scale-N ends of metric presentations and the direct-sequence calculus";

  py::register_exception<csigma::SpecError>(m, "SpecError");
  py::register_exception<csigma::ThinTruncationError>(m, "ThinTruncationError");
  py::register_exception<csigma::OracleGuardError>(m, "OracleGuardError");

  m.def("sigma_report", &sigma_report, py::arg("space_spec"), py::arg("first"), py::arg("last"),
        py::arg("radius"), py::arg("inner") = "", py::arg("witness") = "",
        "Scale window of end classes with bonding maps and stability, as JSON");
  m.def("ball", &ball, py::arg("space_spec"), py::arg("radius"),
        "Labels of the points within radius of the basepoint, canonical order");
  m.def("distance", &distance, py::arg("space_spec"), py::arg("a"), py::arg("b"),
        py::arg("radius"), "Exact distance between two enumerated points, as 'p/q'");
  m.def("direct_limit", &direct_limit, py::arg("sequence"));
  m.def("cardinality_obstruction", &cardinality_obstruction, py::arg("a"), py::arg("b"));
  m.def("check_equivalence", &check_equivalence, py::arg("f"), py::arg("g"), py::arg("a"),
        py::arg("b"));
  m.def("oracle_agreement", &oracle_agreement, py::arg("space_spec"), py::arg("scale"),
        py::arg("radius"), py::arg("witness") = "", py::arg("walk_budget") = 2000000LL);
  m.def("run_cases", &run_cases, py::arg("filter") = "",
        "Run the built-in reference cases; returns the full report as JSON");
  m.attr("__version__") = "0.1.0";
}
