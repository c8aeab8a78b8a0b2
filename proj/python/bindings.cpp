#include "wallcx/json_io.hpp"
#include "wallcx/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace wallcx;

std::string build_json(const std::string& kind, std::size_t g, long long bound,
                       std::size_t maxdim, std::size_t maxlen) {
  EnumerationBounds b;
  b.coeff_bound = bound;
  b.max_dim = maxdim;
  b.max_seq_len = maxlen;
  return to_json(build_artifact(kind, g, b)).dump(2);
}

std::string homology_json(const std::string& document, long long maxdim) {
  return to_json(homology(load_complex_any(document), false, maxdim)).dump(2);
}

std::string homology_csv_of(const std::string& document, long long maxdim) {
  return homology_to_csv(homology(load_complex_any(document), false, maxdim));
}

std::pair<std::string, int> verify_report(const std::string& suite, std::uint64_t seed,
                                          std::size_t budget) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  const VerificationReport rep = run_suite(suite, opt);
  return {rep.to_text(), rep.exit_code()};
}

long long stable_range_bound(long long g) {
  const long long n = g - 3;
  return n >= 0 ? n / 2 : -((-n + 1) / 2);
}

}  // namespace

PYBIND11_MODULE(_wallcx, m) {
  m.doc() = "bounded Wall-pairing complexes: builders, exact homology, verification suites";

  m.def("version", [] { return std::string(library_version()); },
        "library version string, also stamped into build artifacts");

  m.def("build_json", &build_json, py::arg("kind"), py::arg("g"), py::arg("bound") = 1,
        py::arg("maxdim") = 3, py::arg("maxlen") = 0,
        "construct a bounded complex or poset; returns the stamped artifact as JSON text");

  m.def("homology_json", &homology_json, py::arg("document"), py::arg("maxdim") = -1,
        "exact integer homology of a JSON complex, poset, or build artifact, as JSON text");

  m.def("homology_csv", &homology_csv_of, py::arg("document"), py::arg("maxdim") = -1,
        "same as homology_json but rendered as degree,rank,torsion CSV");

  m.def("verify_report", &verify_report, py::arg("suite"), py::arg("seed") = 0,
        py::arg("budget") = 2, py::call_guard<py::gil_scoped_release>(),
        "run a verification suite; returns (report text, exit code)");

  m.def("suites", [] { return suite_names(); }, "names accepted by verify_report");

  m.def("stable_range", &stable_range_bound, py::arg("g"),
        "largest degree in the stable range for the rank-g model: floor((g - 3) / 2)");
}
