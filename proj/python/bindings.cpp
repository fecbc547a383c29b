#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hol/cli.hpp"
#include "hol/identities.hpp"
#include "hol/cartan2d.hpp"
#include "hol/io.hpp"
#include "hol/jets.hpp"
#include "hol/miner.hpp"
#include "hol/ricci3d.hpp"

namespace py = pybind11;

namespace {

using hol::io::Json;

std::string dump(const Json& j) { return j.dump(); }

hol::Rational rational(const std::string& s) { return hol::parse_rational(s); }

std::string rho_json(const std::string& sym3) {
  const hol::Sym3Tensor a = hol::io::sym3_from_json(Json::parse(sym3));
  return dump(hol::io::to_json(hol::rho(a).tensor()));
}

std::string random_sym3_json(int n, std::uint64_t seed, std::int64_t bound) {
  return dump(hol::io::to_json(hol::random_sym3(n, seed, bound)));
}

std::string random_curvature_json(int n, std::uint64_t seed, std::int64_t bound) {
  return dump(hol::io::to_json(hol::random_curvature(n, seed, bound).tensor()));
}

std::string identity_json(const std::string& which, const std::string& tensor) {
  const hol::CurvTensor r(hol::io::tensor_from_json(Json::parse(tensor)));
  if (which == "quad") return dump(hol::io::to_json(hol::pontryagin_quadratic(r)));
  if (which == "cubic") return dump(hol::io::to_json(hol::cubic_identity(r)));
  throw std::invalid_argument("identity must be 'quad' or 'cubic'");
}

bool pontryagin_vanishes(const std::string& tensor, int p) {
  const hol::CurvTensor r(hol::io::tensor_from_json(Json::parse(tensor)));
  return hol::pontryagin_form(r, p).is_zero();
}

std::string validate_json(const std::string& tensor) {
  const auto v = hol::find_curvature_violation(hol::io::tensor_from_json(Json::parse(tensor)));
  if (!v) return dump(Json{{"valid", true}});
  return dump(Json{{"valid", false}, {"invariant", v->invariant}, {"index", v->index}, {"residual", hol::to_string(v->residual)}});
}

std::string census_json(int n, int samples, std::uint64_t seed, std::int64_t bound) {
  return dump(hol::io::to_json(hol::image_rank_census(n, samples, seed, bound)));
}

std::string mine_json(int n, int degree, std::uint64_t seed, int max_samples) {
  hol::MinerConfig c;
  c.n = n;
  c.degree = degree;
  c.seed = seed;
  c.max_samples = max_samples;
  return dump(hol::io::to_json(hol::mine(c)));
}

std::string solve_eigenvalues_json(const std::string& l1, const std::string& l2, const std::string& l3) {
  return dump(hol::io::to_json(hol::solve_from_eigenvalues(rational(l1), rational(l2), rational(l3))));
}

std::string rho2_json(const std::string& sym3) {
  const hol::Sym3Tensor a = hol::io::sym3_from_json(Json::parse(sym3));
  return dump(hol::io::to_json(hol::rho2(a).tensor()));
}

std::string solve_ricci_json(const std::string& tensor) {
  return dump(hol::io::to_json(hol::solve_from_ricci(hol::RicciTensor(hol::io::tensor_from_json(Json::parse(tensor))))));
}

std::string jets_json(int n, int cap) { return dump(hol::io::to_json(hol::jet_report(n, cap))); }

std::string cartan_json(const std::string& alpha, const std::string& beta, const std::string& gamma) {
  return dump(hol::io::to_json(hol::cartan_test({rational(alpha), rational(beta), rational(gamma)})));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hol"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = hol::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tensor laboratory core; tensors cross the boundary as JSON documents.";

  py::register_exception<hol::io::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<hol::InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<hol::VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("curvature_space_dim", &hol::curvature_space_dim, py::arg("n"));
  m.def("sym3_dim", [](int n) { return hol::sym3_dim(n); }, py::arg("n"));
  m.def("random_sym3", &random_sym3_json, py::arg("n"), py::arg("seed"), py::arg("bound") = 10);
  m.def("random_curvature", &random_curvature_json, py::arg("n"), py::arg("seed"), py::arg("bound") = 10);
  m.def("rho", &rho_json, py::arg("sym3"));
  m.def("rho2", &rho2_json, py::arg("sym3"));
  m.def("identity", &identity_json, py::arg("which"), py::arg("tensor"));
  m.def("pontryagin_vanishes", &pontryagin_vanishes, py::arg("tensor"), py::arg("p"));
  m.def("validate", &validate_json, py::arg("tensor"));
  m.def("image_rank_census", &census_json, py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("bound") = 10);
  m.def("mine", &mine_json, py::arg("n"), py::arg("degree"), py::arg("seed") = 1, py::arg("max_samples") = 0);
  m.def("solve_from_eigenvalues", &solve_eigenvalues_json, py::arg("l1"), py::arg("l2"), py::arg("l3"));
  m.def("solve_from_ricci", &solve_ricci_json, py::arg("tensor"));
  m.def("jet_report", &jets_json, py::arg("n"), py::arg("cap"));
  m.def("jet_dim_metric", [](int n, int k) { return hol::jet_dim_metric(n, k).get_str(); });
  m.def("jet_dim_hessian_data", [](int n, int k) { return hol::jet_dim_hessian_data(n, k).get_str(); });
  m.def("cartan_test", &cartan_json, py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("gamma") = "0");
  m.def("run_cli", &run_cli, py::arg("args"));
}
