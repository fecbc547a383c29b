#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hol/matrix.hpp"
#include "hol/sym3.hpp"

namespace hol {

/// a x^3 + b x^2 y + c x y^2 + d y^3 as an S^3 tensor in dimension 2
/// (monomial convention, see set_monomial()).
struct TwoDSym3 {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  friend bool operator==(const TwoDSym3&, const TwoDSym3&) = default;
};

Sym3Tensor to_sym3(const TwoDSym3& t);
TwoDSym3 from_sym3(const Sym3Tensor& a);

/// (4/9)(3ac + 3bd - b^2 - c^2) = kScalarRelationFactor * scalar_curvature(rho(A)).
inline constexpr int kScalarRelationFactor = -2;

/// s - (4/9)(3ac + 3bd - b^2 - c^2).
Rational scalar_relation_residual(const TwoDSym3& t, const Rational& s);

/// The a solving the scalar relation; throws std::invalid_argument when c = 0.
Rational solve_a(const Rational& b, const Rational& c, const Rational& d, const Rational& s);

/// s - norm_sign * 2 A_iaj A_jia - trace_sign * 2 t_a t_a with t_a = A_jja.
/// The all-plus sign pair is (+1, +1).
Rational contracted_condition(const Sym3Tensor& a, const Rational& s, int norm_sign, int trace_sign);

/// Sign pairs (norm_sign, trace_sign) for which the contracted condition
/// vanishes on every sample whose s solves the scalar relation.
std::vector<std::pair<int, int>> consistent_sign_choices(int samples, std::uint64_t seed);

struct SymbolParameters {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

/// 3x6, basis e^1 (x) v^1..v^3, e^2 (x) v^1..v^3.
RationalMatrix symbol_matrix(const SymbolParameters& p);

/// 6x9, basis e^1e^1, e^1e^2, e^2e^2 each tensored with v^1..v^3.
RationalMatrix prolonged_symbol_matrix(const SymbolParameters& p);

struct CartanReport {
  SymbolParameters params;
  std::size_t rank_sigma = 0;
  std::size_t rank_sigma1 = 0;
  int g01 = 0;  // dim ker of sigma on the e^1 columns
  int g02 = 0;  // 6 - rank sigma
  int g12 = 0;  // 9 - rank sigma_1
  bool involutive = false;  // g12 == g01 + g02

  bool same_ranks(const CartanReport& o) const {
    return rank_sigma == o.rank_sigma && rank_sigma1 == o.rank_sigma1 && g01 == o.g01 && g02 == o.g02 &&
           g12 == o.g12 && involutive == o.involutive;
  }
};

CartanReport cartan_test(const SymbolParameters& p);

/// A column order of sigma_1 that is upper echelon with constant nonzero
/// pivots for every (alpha, beta, gamma); found by search over the entries'
/// affine dependence on the parameters.
std::optional<std::vector<std::size_t>> echelon_column_permutation();

/// Whether m is in row echelon form (each pivot strictly right of the one above,
/// zero rows last).
bool is_row_echelon(const RationalMatrix& m);

struct CartanSweep {
  std::uint64_t seed = 0;
  std::vector<CartanReport> reports;
  bool identical = true;
  std::vector<std::string> failures;
};

/// `count` random parameter triples (bound 10) from `seed`.
CartanSweep cartan_sweep(int count, std::uint64_t seed);

}  // namespace hol
