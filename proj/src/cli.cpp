#include "hol/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hol/identities.hpp"
#include "hol/io.hpp"

namespace hol::cli {

namespace {

using io::Json;

constexpr const char* kVersion = "0.1.0";

struct Globals {
  std::string output = "json";
  bool no_meta = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string render_scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string render_inline(const Json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += is_scalar(arr[i]) ? render_scalar(arr[i]) : render_inline(arr[i]);
  }
  return out + "]";
}

bool flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !std::all_of(e.begin(), e.end(), is_scalar)) return false;
  }
  return true;
}

void print_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << render_scalar(v) << '\n';
      } else if (flat_array(v) && v.size() <= 64) {
        out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << render_inline(v) << '\n';
      } else {
        out << pad << k << ":\n";
        print_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar(e)) {
        out << pad << render_scalar(e) << '\n';
      } else if (flat_array(e) || (e.is_array() && e.empty())) {
        out << pad << render_inline(e) << '\n';
      } else {
        out << pad << "-\n";
        print_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << render_scalar(j) << '\n';
  }
}

void print_jets_text(const Json& j, std::ostream& out) {
  Json header = j;
  header.erase("rows");
  print_text(header, out, 0);
  std::size_t w[4] = {1, 6, 12, 7};
  for (const auto& row : j["rows"]) {
    w[0] = std::max(w[0], std::to_string(row["k"].get<int>()).size());
    w[1] = std::max(w[1], row["metric"].get<std::string>().size());
    w[2] = std::max(w[2], row["hessian_data"].get<std::string>().size());
    w[3] = std::max(w[3], row["deficit"].get<std::string>().size());
  }
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    out << std::right << std::setw(static_cast<int>(w[0])) << a << "  " << std::setw(static_cast<int>(w[1])) << b
        << "  " << std::setw(static_cast<int>(w[2])) << c << "  " << std::setw(static_cast<int>(w[3])) << d << '\n';
  };
  line("k", "metric", "hessian_data", "deficit");
  for (const auto& row : j["rows"]) {
    line(std::to_string(row["k"].get<int>()), row["metric"].get<std::string>(), row["hessian_data"].get<std::string>(),
         row["deficit"].get<std::string>());
  }
}

// Wraps a report body into the output document and returns the exit code.
int emit(const std::string& command, Json body, const Globals& g, std::ostream& out) {
  if (!body.contains("failures")) body["failures"] = Json::array();
  Json doc{{"schema", io::kSchema}, {"command", command}};
  if (!g.no_meta) doc["meta"] = Json{{"version", kVersion}, {"timestamp", utc_timestamp()}};
  for (auto& [k, v] : body.items()) doc[k] = v;
  if (g.output == "text") {
    if (command == "jets") {
      print_jets_text(doc, out);
    } else {
      print_text(doc, out, 0);
    }
  } else {
    out << doc.dump(2) << '\n';
  }
  return doc["failures"].empty() ? 0 : 1;
}

Rational rational_option(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

std::string index_key(const std::vector<int>& idx) {
  std::string k;
  for (std::size_t a = 0; a < idx.size(); ++a) k += (a ? " " : "") + std::to_string(idx[a]);
  return k;
}

// --- subcommands ------------------------------------------------------------

struct RhoArgs {
  int dim = 0;
  std::string in;
  std::string out;
};

Json cmd_rho(const RhoArgs& a) {
  const Sym3Tensor s = io::sym3_from_json(io::read_json_file(a.in));
  if (a.dim != 0 && s.dim() != a.dim) {
    throw io::FormatError("--dim " + std::to_string(a.dim) + " does not match n = " + std::to_string(s.dim()) +
                          " in '" + a.in + "'");
  }
  const CurvTensor r = rho(s);
  Json body{{"n", s.dim()}, {"bianchi_zero", bianchi_residual(r.tensor()).is_zero()}};
  if (!a.out.empty()) {
    io::write_json_file(a.out, io::to_json(r.tensor()));
    body["out"] = a.out;
  } else {
    body["R"] = io::to_json(r.tensor());
  }
  return body;
}

struct CensusArgs {
  int dim = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  std::int64_t bound = 10;
};

struct VerifyArgs {
  std::string identity;
  int dim = 4;
  int seeds = 100;
  int p = 2;
  std::uint64_t seed = 1;
  std::int64_t bound = 10;
  std::string on = "rho";
};

Json cmd_verify(const VerifyArgs& a) {
  if (a.identity != "pontryagin" && a.dim < 4) throw std::invalid_argument("quad and cubic need --dim >= 4");
  Json failures = Json::array();
  int nonzero = 0;
  for (int t = 0; t < a.seeds; ++t) {
    const std::uint64_t s = derive_seed(a.seed, static_cast<std::uint64_t>(t));
    const CurvTensor r = a.on == "rho" ? rho(random_sym3(a.dim, s, a.bound)) : random_curvature(a.dim, s, a.bound);
    std::optional<std::pair<std::vector<int>, Rational>> hit;
    if (a.identity == "quad") {
      hit = first_nonzero(pontryagin_quadratic(r));
    } else if (a.identity == "cubic") {
      hit = first_nonzero(cubic_identity(r));
    } else {
      const AlternatingForm f = pontryagin_form(r, a.p);
      for (std::size_t i = 0; i < f.index_sets().size() && !hit; ++i) {
        if (!is_zero(f.component(i))) hit = std::make_pair(f.index_sets()[i], f.component(i));
      }
    }
    if (!hit) continue;
    ++nonzero;
    if (a.on == "rho") failures.push_back(Json::array({t, index_key(hit->first), to_string(hit->second)}));
  }
  Json body{{"identity", a.identity}, {"dim", a.dim}};
  if (a.identity == "pontryagin") body["p"] = a.p;
  body["on"] = a.on;
  body["seed"] = a.seed;
  body["seeds"] = a.seeds;
  body["all_zero"] = nonzero == 0;
  body["nonzero_samples"] = nonzero;
  if (a.on == "generic" && nonzero == 0) {
    failures.push_back("identity vanished on every generic sample; expected a nonzero witness");
  }
  body["failures"] = std::move(failures);
  return body;
}

struct MineArgs {
  MinerConfig config;
};

Json cmd_mine(const MineArgs& a) {
  const MinedIdentityBasis b = mine(a.config);
  Json body = io::to_json(b);
  std::vector<PatternTerm> terms;
  std::string name;
  if (b.degree == 2) {
    name = "pontryagin_quadratic";
    terms = {{1, {"ijab", "klba"}}};
  } else {
    name = "cubic_identity";
    terms = {{1, {"iajb", "kbcd", "ldac"}}, {-2, {"iajb", "kcad", "ldbc"}}};
  }
  const auto v = pattern_vector(b.patterns, terms);
  const IdentityMembership m = classify(b, v);
  body["known_identity"] = Json{{"name", name},
                                {"vector", io::rational_vector(v)},
                                {"in_image_identities", m.image},
                                {"in_universal_identities", m.universal},
                                {"in_quotient", m.quotient()}};
  Json failures = Json::array();
  for (const auto& f : b.failures) failures.push_back(f);
  body["failures"] = std::move(failures);
  return body;
}

struct Solve3dArgs {
  std::string ricci;
  std::string mode = "exact";
  double tol = 1e-9;
};

Json cmd_solve3d(const Solve3dArgs& a) {
  const Tensor t = io::tensor_from_json(io::read_json_file(a.ricci));
  if (t.dim() != 3 || t.order() != 2) throw io::FormatError("solve3d needs an n = 3, order 2 tensor");
  const RicciTensor r{t};
  if (a.mode == "exact") {
    try {
      return io::to_json(solve_from_ricci(r));
    } catch (const VerificationError& e) {
      return Json{{"mode", "exact"}, {"verified", false}, {"actual", io::to_json(e.actual())}, {"failures", {e.what()}}};
    }
  }
  Matrix<double> m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = t(i, k).get_d();
  }
  const FloatRicciSolution sol = solve_from_ricci_float(m, a.tol);
  Json body = io::to_json(sol);
  body["tol"] = a.tol;
  body["failures"] = Json::array();
  if (!sol.verified) body["failures"].push_back("round-trip residual exceeds tolerance");
  return body;
}

struct JetsArgs {
  int dim = 3;
  int cap = 50;
};

Json cmd_jets(const JetsArgs& a) {
  const JetReport rep = jet_report(a.dim, a.cap);
  Json body = io::to_json(rep);
  Json failures = Json::array();
  for (const auto& f : rep.failures) failures.push_back(f);
  body["failures"] = std::move(failures);
  return body;
}

struct CartanArgs {
  std::string alpha = "0";
  std::string beta = "0";
  std::string gamma = "0";
  int sweep = 0;
  std::uint64_t seed = 1;
};

Json cmd_cartan(const CartanArgs& a) {
  Json body;
  Json failures = Json::array();
  if (a.sweep > 0) {
    const CartanSweep s = cartan_sweep(a.sweep, a.seed);
    body = io::to_json(s);
    for (const auto& f : s.failures) failures.push_back(f);
  } else {
    const CartanReport rep = cartan_test({rational_option(a.alpha), rational_option(a.beta), rational_option(a.gamma)});
    body = io::to_json(rep);
    if (!rep.involutive) failures.push_back("Cartan test fails: g12 != g01 + g02");
  }
  const auto perm = echelon_column_permutation();
  body["echelon_columns"] = perm ? Json(*perm) : Json(nullptr);
  if (!perm) failures.push_back("no parameter-independent echelon column order found");
  body["failures"] = std::move(failures);
  return body;
}

Json cmd_validate(const std::string& in) {
  const Tensor t = io::tensor_from_json(io::read_json_file(in));
  if (t.order() != 4) throw io::FormatError("validate needs an order-4 tensor");
  const auto v = find_curvature_violation(t);
  Json body{{"n", t.dim()}, {"valid", !v}};
  Json failures = Json::array();
  if (v) {
    body["violation"] = Json{{"invariant", v->invariant},
                             {"index", index_key({v->index.begin(), v->index.end()})},
                             {"residual", to_string(v->residual)}};
    failures.push_back("invariant " + v->invariant + " fails");
  }
  body["failures"] = std::move(failures);
  return body;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tensor laboratory for Hessian curvature obstructions", "hol"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-meta", g.no_meta, "Omit the timestamped meta block");
  app.set_version_flag("--version", kVersion);

  RhoArgs rho_args;
  auto* rho_cmd = app.add_subcommand("rho", "Apply rho to an S^3 tensor file");
  rho_cmd->add_option("--dim", rho_args.dim, "Expected dimension")->check(CLI::Range(2, 8));
  rho_cmd->add_option("--in", rho_args.in, "S^3 tensor JSON")->required();
  rho_cmd->add_option("--out", rho_args.out, "Write R here instead of embedding it");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("rank-census", "Exact Jacobian ranks of rho at random points");
  census_cmd->add_option("--dim", census.dim)->check(CLI::Range(2, 8));
  census_cmd->add_option("--samples", census.samples)->check(CLI::PositiveNumber);
  census_cmd->add_option("--seed", census.seed);
  census_cmd->add_option("--bound", census.bound)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that an identity vanishes on rho samples");
  verify_cmd->add_option("--identity", verify.identity)->required()->check(CLI::IsMember({"quad", "cubic", "pontryagin"}));
  verify_cmd->add_option("--dim", verify.dim)->check(CLI::Range(2, 8));
  verify_cmd->add_option("--seeds", verify.seeds, "Number of samples")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--p", verify.p, "Pontryagin degree")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Base seed");
  verify_cmd->add_option("--bound", verify.bound)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--on", verify.on, "Sample source")->check(CLI::IsMember({"rho", "generic"}));

  MineArgs mine_args;
  auto* mine_cmd = app.add_subcommand("mine", "Mine contraction identities of rho's image");
  mine_cmd->add_option("--dim", mine_args.config.n)->check(CLI::Range(4, 8));
  mine_cmd->add_option("--degree", mine_args.config.degree)->check(CLI::Range(2, 3));
  mine_cmd->add_option("--seed", mine_args.config.seed);
  mine_cmd->add_option("--max-samples", mine_args.config.max_samples)->check(CLI::PositiveNumber);
  mine_cmd->add_option("--initial-samples", mine_args.config.initial_samples)->check(CLI::PositiveNumber);
  mine_cmd->add_option("--fresh-samples", mine_args.config.fresh_samples)->check(CLI::NonNegativeNumber);

  Solve3dArgs solve;
  auto* solve_cmd = app.add_subcommand("solve3d", "Find A with prescribed Ricci tensor in dimension 3");
  solve_cmd->add_option("--ricci", solve.ricci, "Ricci tensor JSON (n = 3, order 2)")->required();
  solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"exact", "float"}));
  auto* tol_opt = solve_cmd->add_option("--tol", solve.tol, "Float-mode round-trip tolerance")->check(CLI::PositiveNumber);

  JetsArgs jets;
  auto* jets_cmd = app.add_subcommand("jets", "Jet dimension census");
  jets_cmd->add_option("--dim", jets.dim)->check(CLI::Range(2, 64));
  jets_cmd->add_option("--cap", jets.cap)->check(CLI::Range(1, 100000));

  CartanArgs cartan;
  auto* cartan_cmd = app.add_subcommand("cartan2d", "Symbol ranks and Cartan's test in dimension 2");
  auto* alpha_opt = cartan_cmd->add_option("--alpha", cartan.alpha, "p/q");
  auto* beta_opt = cartan_cmd->add_option("--beta", cartan.beta, "p/q");
  auto* gamma_opt = cartan_cmd->add_option("--gamma", cartan.gamma, "p/q");
  auto* sweep_opt = cartan_cmd->add_option("--sweep", cartan.sweep, "Random parameter triples")->check(CLI::PositiveNumber);
  cartan_cmd->add_option("--seed", cartan.seed);
  for (auto* o : {alpha_opt, beta_opt, gamma_opt}) o->excludes(sweep_opt);

  std::string validate_in;
  auto* validate_cmd = app.add_subcommand("validate", "Check the curvature symmetries of a tensor file");
  validate_cmd->add_option("--in", validate_in, "Order-4 tensor JSON")->required();

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed() && solve.mode == "exact" && tol_opt->count() > 0) {
      throw CLI::ValidationError("--tol only applies to --mode float");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rho_cmd->parsed()) return emit("rho", cmd_rho(rho_args), g, out);
    if (census_cmd->parsed()) {
      return emit("rank-census", io::to_json(image_rank_census(census.dim, census.samples, census.seed, census.bound)),
                  g, out);
    }
    if (verify_cmd->parsed()) return emit("verify", cmd_verify(verify), g, out);
    if (mine_cmd->parsed()) return emit("mine", cmd_mine(mine_args), g, out);
    if (solve_cmd->parsed()) return emit("solve3d", cmd_solve3d(solve), g, out);
    if (jets_cmd->parsed()) return emit("jets", cmd_jets(jets), g, out);
    if (cartan_cmd->parsed()) return emit("cartan2d", cmd_cartan(cartan), g, out);
    if (validate_cmd->parsed()) return emit("validate", cmd_validate(validate_in), g, out);
  } catch (const CLI::ValidationError& e) {
    err << "hol: " << e.what() << '\n';
    return 2;
  } catch (const io::FormatError& e) {
    err << "hol: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "hol: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "hol: internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hol::cli
