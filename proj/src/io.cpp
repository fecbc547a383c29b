#include "hol/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace hol::io {

namespace {

std::string join_indices(std::span<const int> idx) {
  std::string key;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (a) key += ' ';
    key += std::to_string(idx[a]);
  }
  return key;
}

std::vector<int> parse_indices(const std::string& key, int n, int order) {
  std::istringstream in(key);
  std::vector<int> idx;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw FormatError("malformed index key '" + key + "'");
    }
    if (used != tok.size()) throw FormatError("malformed index key '" + key + "'");
    if (v < 0 || v >= n) throw FormatError("index " + tok + " out of range in '" + key + "'");
    idx.push_back(v);
  }
  if (static_cast<int>(idx.size()) != order) {
    throw FormatError("index key '" + key + "' does not have " + std::to_string(order) + " indices");
  }
  return idx;
}

Rational parse_value(const Json& v) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("tensor values must be \"p/q\" strings or integers");
}

struct Header {
  int n;
  int order;
  std::string packing;
};

Header read_header(const Json& j) {
  if (!j.is_object()) throw FormatError("tensor document must be a JSON object");
  for (const char* key : {"n", "order", "entries"}) {
    if (!j.contains(key)) throw FormatError(std::string("tensor document lacks \"") + key + "\"");
  }
  if (!j["n"].is_number_integer() || !j["order"].is_number_integer()) throw FormatError("n and order must be integers");
  Header h{j["n"].get<int>(), j["order"].get<int>(), j.value("packing", std::string("dense"))};
  if (h.n < Tensor::kMinDim || h.n > Tensor::kMaxDim) throw FormatError("n outside [2, 8]");
  if (h.order < 0 || h.order > Tensor::kMaxOrder) throw FormatError("order outside [0, 6]");
  if (h.packing != "dense" && h.packing != "sym3") throw FormatError("packing must be \"dense\" or \"sym3\"");
  if (h.packing == "sym3" && h.order != 3) throw FormatError("sym3 packing needs order 3");
  if (!j["entries"].is_array()) throw FormatError("entries must be an array");
  return h;
}

template <class F>
void for_each_entry(const Json& j, const Header& h, F&& f) {
  std::map<std::vector<int>, Rational> seen;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) throw FormatError("entries must be [\"i j ...\", value] pairs");
    std::vector<int> idx = parse_indices(e[0].get<std::string>(), h.n, h.order);
    if (h.packing == "sym3") std::sort(idx.begin(), idx.end());
    const Rational v = parse_value(e[1]);
    if (!seen.emplace(idx, v).second) throw FormatError("duplicate entry '" + e[0].get<std::string>() + "'");
    f(idx, v);
  }
}

Json optional_double(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Tensor& t) {
  Json entries = Json::array();
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (is_zero(t[f])) continue;
    t.unflatten(f, idx);
    entries.push_back(Json::array({join_indices(idx), to_string(t[f])}));
  }
  return Json{{"n", t.dim()}, {"order", t.order()}, {"packing", "dense"}, {"entries", std::move(entries)}};
}

Json to_json(const Sym3Tensor& a) {
  Json entries = Json::array();
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (is_zero(a[p])) continue;
    const auto m = a.multiset(p);
    entries.push_back(Json::array({join_indices(m), to_string(a[p])}));
  }
  return Json{{"n", a.dim()}, {"order", 3}, {"packing", "sym3"}, {"entries", std::move(entries)}};
}

Tensor tensor_from_json(const Json& j) {
  const Header h = read_header(j);
  Tensor t(h.n, h.order);
  if (h.packing == "sym3") {
    Sym3Tensor a = sym3_from_json(j);
    return a.to_dense();
  }
  for_each_entry(j, h, [&](const std::vector<int>& idx, const Rational& v) { t.at(idx) = v; });
  return t;
}

Sym3Tensor sym3_from_json(const Json& j) {
  const Header h = read_header(j);
  if (h.order != 3) throw FormatError("S^3 tensors have order 3");
  if (h.packing == "dense") {
    try {
      return Sym3Tensor::from_dense(tensor_from_json(j));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  Sym3Tensor a(h.n);
  for_each_entry(j, h, [&](const std::vector<int>& idx, const Rational& v) { a(idx[0], idx[1], idx[2]) = v; });
  return a;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

Json rational_vector(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rational_vector(m.row(r)));
  return out;
}

Json matrix_to_json(const Matrix<double>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Json to_json(const ImageRankReport& r) {
  return Json{{"n", r.n},
              {"dim_s3", r.dim_s3},
              {"dim_curv", r.dim_curv},
              {"seed", r.seed},
              {"samples", r.ranks.size()},
              {"ranks", r.ranks},
              {"max_rank", r.max_rank},
              {"codim", r.codim},
              {"attainment", r.attainment},
              {"low_attainment", r.low_attainment}};
}

Json to_json(const ContractionPattern& p) {
  return Json{{"degree", p.degree}, {"slots", p.partner}, {"notation", p.notation()}};
}

Json to_json(const MinedIdentityBasis& b) {
  Json patterns = Json::array();
  for (const auto& p : b.patterns) patterns.push_back(to_json(p));
  auto vectors = [](const std::vector<std::vector<Rational>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(rational_vector(v));
    return out;
  };
  return Json{{"n", b.n},
              {"degree", b.degree},
              {"seed", b.seed},
              {"pattern_count", b.patterns.size()},
              {"patterns", std::move(patterns)},
              {"rho_samples", b.rho_samples},
              {"generic_samples", b.generic_samples},
              {"rho_rank", b.rho_rank},
              {"generic_rank", b.generic_rank},
              {"stabilized", b.stabilized},
              {"nested", b.nested},
              {"image_identities", vectors(b.image_identities)},
              {"universal_identities", vectors(b.universal_identities)},
              {"quotient", vectors(b.quotient)},
              {"quotient_dim", b.quotient_dim()}};
}

Json to_json(const JetReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"metric", row.metric.get_str()},
                        {"hessian_data", row.hessian_data.get_str()},
                        {"deficit", row.deficit.get_str()}});
  }
  return Json{{"n", r.n},
              {"cap", r.cap},
              {"crossover", r.crossover ? Json(*r.crossover) : Json("none")},
              {"positive_after_crossover", r.positive_after_crossover},
              {"increasing_after_crossover", r.increasing_after_crossover},
              {"growth_exponents",
               Json{{"metric", optional_double(r.metric_exponent)},
                    {"hessian_data", optional_double(r.hessian_data_exponent)},
                    {"deficit", optional_double(r.deficit_exponent)}}},
              {"binomial_closed_form",
               Json{{"agrees", r.binomial_closed_form_agrees},
                    {"first_mismatch_k", r.binomial_closed_form_first_mismatch
                                             ? Json(*r.binomial_closed_form_first_mismatch)
                                             : Json(nullptr)},
                    {"note", "a_{k,n} with C(n+1-i, i) summed from i=1 compared against the summed jet dimensions"}}},
              {"rows", std::move(rows)}};
}

Json to_json(const CartanReport& r) {
  return Json{{"alpha", to_string(r.params.alpha)},
              {"beta", to_string(r.params.beta)},
              {"gamma", to_string(r.params.gamma)},
              {"rank_sigma", r.rank_sigma},
              {"rank_sigma1", r.rank_sigma1},
              {"g01", r.g01},
              {"g02", r.g02},
              {"g12", r.g12},
              {"involutive", r.involutive}};
}

Json to_json(const CartanSweep& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return Json{{"seed", s.seed}, {"count", s.reports.size()}, {"identical", s.identical}, {"reports", std::move(reports)}};
}

Json to_json(const ExactRicciSolution& s) {
  Json lambda = Json::array();
  for (const auto& l : s.eigenvalues) lambda.push_back(to_string(l));
  Json norms = Json::array();
  for (const auto& d : s.frame_norms) norms.push_back(to_string(d));
  return Json{{"mode", "exact"},
              {"eigenvalues", std::move(lambda)},
              {"branch", s.isotropic ? "isotropic" : "main"},
              {"rotation", matrix_to_json(s.rotation)},
              {"frame", matrix_to_json(s.frame)},
              {"frame_norms", std::move(norms)},
              {"A", to_json(s.a)},
              {"verified", s.verified},
              {"residual", "0"}};
}

Json to_json(const FloatRicciSolution& s) {
  Json a = Json::array();
  for (std::size_t p = 0; p < s.a.size(); ++p) {
    const auto m = s.a.multiset(p);
    a.push_back(Json::array({join_indices(m), s.a[p]}));
  }
  return Json{{"mode", "float"},
              {"eigenvalues", s.eigenvalues},
              {"branch", s.isotropic ? "isotropic" : "main"},
              {"rotation", matrix_to_json(s.rotation)},
              {"A", Json{{"n", 3}, {"order", 3}, {"packing", "sym3"}, {"entries", std::move(a)}}},
              {"verified", s.verified},
              {"residual", s.residual}};
}

}  // namespace hol::io
