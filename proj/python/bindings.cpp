#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gpslice/almansi.hpp"
#include "gpslice/cli.hpp"
#include "gpslice/json_io.hpp"
#include "gpslice/regular.hpp"

namespace py = pybind11;
using namespace gpslice;

namespace {

std::string dump(const Json& j) { return j.dump(); }

Json poly_list(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::string basis(int p, int q, int degree, bool omit_x0) {
  Json out = Json::array();
  for (const auto& f : gsr_basis(Signature(p, q), degree, omit_x0)) out.push_back(to_json(f.stem()));
  return dump(out);
}

std::string gcr(const std::string& stem) {
  const auto res = gcr_residual(stem_from_json(parse_json(stem)));
  return dump(Json{{"R1", to_json(res.r1)}, {"R2", to_json(res.r2)}});
}

std::string induce_stem(const std::string& stem) {
  return dump(to_json(induce(stem_from_json(parse_json(stem))).ambient()));
}

std::string ab(const std::string& stem) {
  const auto f = induce(stem_from_json(parse_json(stem)));
  const auto d = almansi_ab(f);
  return dump(Json{{"A", to_json(d.a)}, {"B", to_json(d.b)}, {"m", d.m}, {"certified", certify_ab(f, d).all()}});
}

std::string classical(const std::string& poly, int N) {
  return dump(poly_list(classical_almansi(polynomial_from_json(parse_json(poly)), N).components));
}

std::string polymonogenic(const std::string& poly, int N) {
  return dump(poly_list(polymonogenic_almansi(polynomial_from_json(parse_json(poly)), N).components));
}

std::string vekua(int p, int q, const std::string& lambda, int order) {
  return dump(to_json(vekua_jet_basis(p, q, parse_rational(lambda), order)));
}

std::string product(const std::string& a, const std::string& b) {
  return dump(to_json(multivector_from_json(parse_json(a)) * multivector_from_json(parse_json(b))));
}

std::string eval(const std::string& poly, const std::vector<std::string>& point) {
  std::vector<Rational> pt;
  for (const auto& s : point) pt.push_back(parse_rational(s));
  return dump(to_json(evaluate(polynomial_from_json(parse_json(poly)), pt)));
}

std::tuple<int, std::string, std::string> cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"gpslice"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact slice-function computations over rational Clifford polynomials";

  static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      precondition(e.what());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("gsr_basis", &basis, py::arg("p"), py::arg("q"), py::arg("degree"), py::arg("omit_x0") = false);
  m.def("gcr_residual", &gcr, py::arg("stem"));
  m.def("induce", &induce_stem, py::arg("stem"));
  m.def("almansi_ab", &ab, py::arg("stem"));
  m.def("classical_almansi", &classical, py::arg("polynomial"), py::arg("N"));
  m.def("polymonogenic_almansi", &polymonogenic, py::arg("polynomial"), py::arg("N"));
  m.def("vekua_jet_basis", &vekua, py::arg("p"), py::arg("q"), py::arg("lambda_"), py::arg("order"));
  m.def("product", &product, py::arg("a"), py::arg("b"));
  m.def("evaluate", &eval, py::arg("polynomial"), py::arg("point"));
  m.def("run_cli", &cli, py::arg("args"));
}
