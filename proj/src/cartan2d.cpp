#include "hol/cartan2d.hpp"

#include <array>
#include <functional>

#include "hol/hessian_map.hpp"
#include "hol/rng.hpp"

namespace hol {

namespace {

// Entry c0 + c1 alpha + c2 beta + c3 gamma.
using Affine = std::array<int, 4>;

constexpr Affine k0{0, 0, 0, 0};
constexpr Affine kAlpha{0, 1, 0, 0};
constexpr Affine kBeta{0, 0, 1, 0};
constexpr Affine kGamma{0, 0, 0, 1};
constexpr Affine c(int v) { return {v, 0, 0, 0}; }

const std::vector<std::vector<Affine>>& sigma_pattern() {
  static const std::vector<std::vector<Affine>> m{
      {c(1), k0, k0, kAlpha, kBeta, kGamma},
      {k0, c(1), k0, c(-1), k0, k0},
      {k0, k0, c(3), k0, c(-1), k0},
  };
  return m;
}

const std::vector<std::vector<Affine>>& sigma1_pattern() {
  static const std::vector<std::vector<Affine>> m{
      {c(1), kAlpha, k0, k0, kBeta, k0, k0, kGamma, k0},
      {k0, c(-1), k0, c(1), k0, k0, k0, k0, k0},
      {k0, k0, k0, k0, c(-1), k0, c(3), k0, k0},
      {k0, c(1), kAlpha, k0, k0, kBeta, k0, k0, kGamma},
      {k0, k0, c(-1), k0, c(1), k0, k0, k0, k0},
      {k0, k0, k0, k0, k0, c(-1), k0, c(3), k0},
  };
  return m;
}

RationalMatrix instantiate(const std::vector<std::vector<Affine>>& pattern, const SymbolParameters& p) {
  RationalMatrix m(pattern.size(), pattern.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const Affine& e = pattern[r][col];
      m(r, col) = Rational(e[0]) + e[1] * p.alpha + e[2] * p.beta + e[3] * p.gamma;
    }
  }
  return m;
}

bool identically_zero(const Affine& e) { return e == k0; }
bool constant_nonzero(const Affine& e) { return e[0] != 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

Rational relation_value(const TwoDSym3& t) {
  return Rational(4, 9) * (3 * t.a * t.c + 3 * t.b * t.d - t.b * t.b - t.c * t.c);
}

}  // namespace

Sym3Tensor to_sym3(const TwoDSym3& t) {
  Sym3Tensor a(2);
  set_monomial(a, 0, 0, 0, t.a);
  set_monomial(a, 0, 0, 1, t.b);
  set_monomial(a, 0, 1, 1, t.c);
  set_monomial(a, 1, 1, 1, t.d);
  return a;
}

TwoDSym3 from_sym3(const Sym3Tensor& a) {
  if (a.dim() != 2) throw std::invalid_argument("TwoDSym3 needs n = 2");
  return {monomial_coefficient(a, 0, 0, 0), monomial_coefficient(a, 0, 0, 1), monomial_coefficient(a, 0, 1, 1),
          monomial_coefficient(a, 1, 1, 1)};
}

Rational scalar_relation_residual(const TwoDSym3& t, const Rational& s) { return s - relation_value(t); }

Rational solve_a(const Rational& b, const Rational& c, const Rational& d, const Rational& s) {
  if (is_zero(c)) throw std::invalid_argument("solve_a needs c != 0");
  return (Rational(9, 4) * s + b * b + c * c - 3 * b * d) / (3 * c);
}

Rational contracted_condition(const Sym3Tensor& a, const Rational& s, int norm_sign, int trace_sign) {
  const int n = a.dim();
  Rational norm = 0;
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int j = 0; j < n; ++j) norm += a(i, x, j) * a(j, i, x);
    }
  }
  Rational trace = 0;
  for (int x = 0; x < n; ++x) {
    Rational t = 0;
    for (int j = 0; j < n; ++j) t += a(j, j, x);
    trace += t * t;
  }
  return s - norm_sign * 2 * norm - trace_sign * 2 * trace;
}

std::vector<std::pair<int, int>> consistent_sign_choices(int samples, std::uint64_t seed) {
  std::vector<std::pair<int, int>> out;
  for (int ns : {1, -1}) {
    for (int ts : {1, -1}) {
      bool ok = true;
      for (int k = 0; k < samples && ok; ++k) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
        const TwoDSym3 t{CounterRng(s, 0).uniform_rational(10), CounterRng(s, 1).uniform_rational(10),
                         CounterRng(s, 2).uniform_rational(10), CounterRng(s, 3).uniform_rational(10)};
        ok = is_zero(contracted_condition(to_sym3(t), relation_value(t), ns, ts));
      }
      if (ok) out.emplace_back(ns, ts);
    }
  }
  return out;
}

RationalMatrix symbol_matrix(const SymbolParameters& p) { return instantiate(sigma_pattern(), p); }

RationalMatrix prolonged_symbol_matrix(const SymbolParameters& p) { return instantiate(sigma1_pattern(), p); }

CartanReport cartan_test(const SymbolParameters& p) {
  CartanReport rep;
  rep.params = p;
  const RationalMatrix sigma = symbol_matrix(p);
  const RationalMatrix sigma1 = prolonged_symbol_matrix(p);
  rep.rank_sigma = rank(sigma);
  rep.rank_sigma1 = rank(sigma1);
  rep.g01 = 3 - static_cast<int>(rank(sigma.select_columns({0, 1, 2})));
  rep.g02 = 6 - static_cast<int>(rep.rank_sigma);
  rep.g12 = 9 - static_cast<int>(rep.rank_sigma1);
  rep.involutive = rep.g12 == rep.g01 + rep.g02;
  return rep;
}

std::optional<std::vector<std::size_t>> echelon_column_permutation() {
  const auto& m = sigma1_pattern();
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> chosen;
  std::vector<bool> used(cols, false);

  // Row r takes a pivot column that is constant nonzero at r and vanishes below r.
  std::function<bool(std::size_t)> place = [&](std::size_t r) {
    if (r == rows) return true;
    for (std::size_t col = 0; col < cols; ++col) {
      if (used[col] || !constant_nonzero(m[r][col])) continue;
      bool below_zero = true;
      for (std::size_t q = r + 1; q < rows; ++q) below_zero = below_zero && identically_zero(m[q][col]);
      if (!below_zero) continue;
      used[col] = true;
      chosen.push_back(col);
      if (place(r + 1)) return true;
      chosen.pop_back();
      used[col] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  for (std::size_t col = 0; col < cols; ++col) {
    if (!used[col]) chosen.push_back(col);
  }
  return chosen;
}

bool is_row_echelon(const RationalMatrix& m) {
  long previous = -1;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    long lead = -1;
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (!is_zero(m(r, col))) {
        lead = static_cast<long>(col);
        break;
      }
    }
    if (lead < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || lead <= previous) return false;
    previous = lead;
  }
  return true;
}

CartanSweep cartan_sweep(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sweep needs at least one sample");
  CartanSweep sweep;
  sweep.seed = seed;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
    const SymbolParameters p{CounterRng(s, 0).uniform_rational(10), CounterRng(s, 1).uniform_rational(10),
                             CounterRng(s, 2).uniform_rational(10)};
    sweep.reports.push_back(cartan_test(p));
    const CartanReport& rep = sweep.reports.back();
    if (!rep.same_ranks(sweep.reports.front())) sweep.identical = false;
    if (!rep.involutive) {
      sweep.failures.push_back("parameter triple " + std::to_string(k) + " is not involutive");
    }
  }
  if (!sweep.identical) sweep.failures.push_back("reports differ across parameter triples");
  return sweep;
}

}  // namespace hol
