#include "hol/curvature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include "hol/matrix.hpp"
#include "hol/rng.hpp"

namespace hol {

int curvature_space_dim(int n) {
  if (n < 2) throw std::invalid_argument("curvature space needs n >= 2");
  return n * n * (n * n - 1) / 12;
}

std::optional<InvariantViolation> find_curvature_violation(const Tensor& t) {
  if (t.order() != 4) throw std::invalid_argument("curvature tensors have order 4");
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Rational& r = t(i, j, k, l);
          Rational res = r + t(j, i, k, l);
          if (!is_zero(res)) return InvariantViolation{"antisymmetry_12", {i, j, k, l}, res};
          res = r + t(i, j, l, k);
          if (!is_zero(res)) return InvariantViolation{"antisymmetry_34", {i, j, k, l}, res};
          res = r - t(k, l, i, j);
          if (!is_zero(res)) return InvariantViolation{"pair_exchange", {i, j, k, l}, res};
          res = r + t(j, k, i, l) + t(k, i, j, l);
          if (!is_zero(res)) return InvariantViolation{"bianchi", {i, j, k, l}, res};
        }
      }
    }
  }
  return std::nullopt;
}

InvariantError::InvariantError(InvariantViolation v)
    : std::invalid_argument("curvature invariant '" + v.invariant + "' fails at (" + std::to_string(v.index[0]) +
                            "," + std::to_string(v.index[1]) + "," + std::to_string(v.index[2]) + "," +
                            std::to_string(v.index[3]) + "), residual " + to_string(v.residual)),
      violation_(std::move(v)) {}

CurvTensor::CurvTensor(Tensor t) : t_(std::move(t)) {
  if (auto v = find_curvature_violation(t_)) throw InvariantError(std::move(*v));
}

RicciTensor::RicciTensor(Tensor t) : t_(std::move(t)) {
  if (t_.order() != 2) throw std::invalid_argument("Ricci tensor must have order 2");
  for (int i = 0; i < t_.dim(); ++i) {
    for (int k = i + 1; k < t_.dim(); ++k) {
      if (t_(i, k) != t_(k, i)) throw std::invalid_argument("Ricci tensor must be symmetric");
    }
  }
}

RicciTensor RicciTensor::diagonal(std::span<const Rational> values) {
  Tensor t(static_cast<int>(values.size()), 2);
  for (std::size_t i = 0; i < values.size(); ++i) t(i, i) = values[i];
  return RicciTensor(std::move(t));
}

namespace {

struct PairIndex {
  std::vector<std::pair<int, int>> pairs;  // i < j
  std::map<std::pair<int, int>, int> lookup;

  explicit PairIndex(int n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        lookup[{i, j}] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
    }
  }

  // Pair id and orientation sign of (i, j); sign 0 when i == j.
  std::pair<int, int> locate(int i, int j) const {
    if (i == j) return {-1, 0};
    if (i < j) return {lookup.at({i, j}), 1};
    return {lookup.at({j, i}), -1};
  }
};

// Variables of S^2(Lambda^2): unordered pairs {p <= q} of pair ids.
struct PairSymmetricVars {
  int m;
  explicit PairSymmetricVars(int pair_count) : m(pair_count) {}
  int count() const { return m * (m + 1) / 2; }
  int id(int p, int q) const {
    if (p > q) std::swap(p, q);
    return p * m - p * (p - 1) / 2 + (q - p);
  }
};

}  // namespace

CurvatureBasis::CurvatureBasis(int n) : n_(n) {
  const PairIndex pairs(n);
  const PairSymmetricVars vars(static_cast<int>(pairs.pairs.size()));

  // R_ijkl as (variable, sign); sign 0 means identically zero.
  auto component = [&](int i, int j, int k, int l) -> std::pair<int, int> {
    const auto [p, sp] = pairs.locate(i, j);
    const auto [q, sq] = pairs.locate(k, l);
    if (sp == 0 || sq == 0) return {-1, 0};
    return {vars.id(p, q), sp * sq};
  };

  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::vector<std::pair<int, int>>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          std::map<int, int> coeff;
          for (const auto& [v, s] : {component(i, j, k, l), component(j, k, i, l), component(k, i, j, l)}) {
            if (s != 0) coeff[v] += s;
          }
          std::vector<std::pair<int, int>> row;
          for (const auto& [v, c] : coeff) {
            if (c != 0) row.emplace_back(v, c);
          }
          if (row.empty()) continue;
          if (row.front().second < 0) {
            for (auto& e : row) e.second = -e.second;
          }
          if (seen.insert(row).second) rows.push_back(std::move(row));
        }
      }
    }
  }

  RationalMatrix bianchi(rows.size(), static_cast<std::size_t>(vars.count()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [v, c] : rows[r]) bianchi(r, static_cast<std::size_t>(v)) = c;
  }
  const auto kernel = nullspace(bianchi);

  // Decode variable id -> representative component.
  std::vector<std::array<int, 4>> var_component(static_cast<std::size_t>(vars.count()));
  for (int p = 0; p < vars.m; ++p) {
    for (int q = p; q < vars.m; ++q) {
      const auto [i, j] = pairs.pairs[static_cast<std::size_t>(p)];
      const auto [k, l] = pairs.pairs[static_cast<std::size_t>(q)];
      var_component[static_cast<std::size_t>(vars.id(p, q))] = {i, j, k, l};
    }
  }

  for (const auto& vec : kernel) {
    Tensor t(n, 4);
    BigInt den_lcm = 1;
    for (const auto& c : vec) {
      if (!is_zero(c)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    BasicTensor<CheckedInt> ti(n, 4);
    for (std::size_t v = 0; v < vec.size(); ++v) {
      if (is_zero(vec[v])) continue;
      const auto [i, j, k, l] = var_component[v];
      const Rational scaled = vec[v] * Rational(den_lcm);
      const CheckedInt iv(scaled.get_num().get_si());
      for (const auto& [a, b, c, d, s] : std::initializer_list<std::array<int, 5>>{
               {i, j, k, l, 1}, {j, i, k, l, -1}, {i, j, l, k, -1}, {j, i, l, k, 1},
               {k, l, i, j, 1}, {l, k, i, j, -1}, {k, l, j, i, -1}, {l, k, j, i, 1}}) {
        t(a, b, c, d) = s > 0 ? vec[v] : Rational(-vec[v]);
        ti(a, b, c, d) = s > 0 ? iv : -iv;
      }
    }
    elements_.push_back(std::move(t));
    integer_elements_.push_back(std::move(ti));
  }

  // Free columns of the RREF, in kernel order.
  const Rref e = rref(bianchi);
  std::vector<bool> is_pivot(static_cast<std::size_t>(vars.count()), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t v = 0; v < is_pivot.size(); ++v) {
    if (!is_pivot[v]) components_.push_back(var_component[v]);
  }
}

const CurvatureBasis& CurvatureBasis::for_dim(int n) {
  if (n < 2 || n > Tensor::kMaxDim) throw std::invalid_argument("curvature basis needs 2 <= n <= 8");
  static std::mutex mutex;
  static std::array<std::unique_ptr<CurvatureBasis>, Tensor::kMaxDim + 1> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot.reset(new CurvatureBasis(n));
  return *slot;
}

std::vector<Rational> CurvatureBasis::coordinates(const Tensor& r) const {
  if (r.dim() != n_ || r.order() != 4) throw std::invalid_argument("coordinates need an order-4 tensor of matching dim");
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& [i, j, k, l] : components_) out.push_back(r(i, j, k, l));
  return out;
}

Tensor CurvatureBasis::combine(std::span<const Rational> coefficients) const {
  if (coefficients.size() != elements_.size()) throw std::invalid_argument("coefficient count mismatch");
  Tensor out(n_, 4);
  for (std::size_t m = 0; m < elements_.size(); ++m) {
    if (is_zero(coefficients[m])) continue;
    const Tensor& b = elements_[m];
    for (std::size_t f = 0; f < out.size(); ++f) {
      if (!is_zero(b[f])) out[f] += coefficients[m] * b[f];
    }
  }
  return out;
}

CurvTensor random_curvature(int n, std::uint64_t seed, std::int64_t bound) {
  const auto& basis = CurvatureBasis::for_dim(n);
  std::vector<Rational> c(basis.size());
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = CounterRng(seed, m).uniform_rational(bound);
  return CurvTensor(basis.combine(c));
}

BasicTensor<CheckedInt> random_integer_curvature(int n, std::uint64_t seed, std::int64_t bound) {
  const auto& basis = CurvatureBasis::for_dim(n);
  BasicTensor<CheckedInt> out(n, 4);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    std::uint64_t counter = 0;
    const CheckedInt c = CounterRng(seed, m).uniform_int(-bound, bound, counter);
    const auto& b = basis.integer_elements()[m];
    for (std::size_t f = 0; f < out.size(); ++f) out[f] += c * b[f];
  }
  return out;
}

CurvTensor constant_curvature(int n, const Rational& k) {
  Tensor t(n, 4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      t(i, j, i, j) = k;
      t(i, j, j, i) = -k;
    }
  }
  return CurvTensor(std::move(t));
}

CurvTensor curvature_from_ricci_3d(const RicciTensor& r) {
  if (r.dim() != 3) throw std::invalid_argument("curvature_from_ricci_3d needs n = 3");
  Rational s = 0;
  for (int i = 0; i < 3; ++i) s += r(i, i);
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  Tensor t(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          Rational v = r(i, k) * delta(j, l) - r(i, l) * delta(j, k) + r(j, l) * delta(i, k) - r(j, k) * delta(i, l);
          v -= s / 2 * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k));
          t(i, j, k, l) = v;
        }
      }
    }
  }
  return CurvTensor(std::move(t));
}

RicciTensor ricci(const CurvTensor& r) { return RicciTensor(ricci_contraction(r.tensor())); }

Rational scalar_curvature(const CurvTensor& r) {
  Rational s = 0;
  const int n = r.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += r(i, j, i, j);
  }
  return s;
}

}  // namespace hol
