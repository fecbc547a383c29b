#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hol/tensor.hpp"

namespace hol {

/// dim of the space of algebraic curvature tensors, n^2 (n^2 - 1) / 12.
int curvature_space_dim(int n);

/// First failing curvature symmetry of a raw order-4 tensor.
struct InvariantViolation {
  std::string invariant;  // "antisymmetry_12", "antisymmetry_34", "pair_exchange", "bianchi"
  std::array<int, 4> index;
  Rational residual;
};

std::optional<InvariantViolation> find_curvature_violation(const Tensor& t);

class InvariantError : public std::invalid_argument {
 public:
  explicit InvariantError(InvariantViolation v);
  const InvariantViolation& violation() const { return violation_; }

 private:
  InvariantViolation violation_;
};

/// Algebraic curvature tensor R_ijkl. Construction validates the pair
/// symmetries and the first Bianchi identity exactly.
class CurvTensor {
 public:
  explicit CurvTensor(Tensor t);

  int dim() const { return t_.dim(); }
  const Tensor& tensor() const { return t_; }
  const Rational& operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }

  friend bool operator==(const CurvTensor& a, const CurvTensor& b) { return a.t_ == b.t_; }

 private:
  Tensor t_;
};

/// Symmetric n x n matrix r_ik.
class RicciTensor {
 public:
  explicit RicciTensor(Tensor t);
  static RicciTensor diagonal(std::span<const Rational> values);

  int dim() const { return t_.dim(); }
  const Tensor& tensor() const { return t_; }
  const Rational& operator()(int i, int k) const { return t_(i, k); }

  friend bool operator==(const RicciTensor& a, const RicciTensor& b) { return a.t_ == b.t_; }

 private:
  Tensor t_;
};

/// Exact basis of the algebraic curvature tensors in dimension n: the
/// null space of the cyclic Bianchi sum on pair-symmetric Lambda^2 (x) Lambda^2.
/// Built once per n and cached.
class CurvatureBasis {
 public:
  static const CurvatureBasis& for_dim(int n);

  int dim() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Tensor>& elements() const { return elements_; }

  /// elements() scaled to integer entries (same span, same order).
  const std::vector<BasicTensor<CheckedInt>>& integer_elements() const { return integer_elements_; }

  /// Component (i,j,k,l) read off as coordinate m; element m is 1 there and
  /// every other element is 0 there.
  const std::vector<std::array<int, 4>>& coordinate_components() const { return components_; }

  /// Coordinates of a curvature tensor in this basis.
  std::vector<Rational> coordinates(const Tensor& r) const;

  Tensor combine(std::span<const Rational> coefficients) const;

 private:
  explicit CurvatureBasis(int n);

  int n_;
  std::vector<Tensor> elements_;
  std::vector<BasicTensor<CheckedInt>> integer_elements_;
  std::vector<std::array<int, 4>> components_;
};

/// Random element of the curvature space: uniform rational coefficients
/// (|p|, q <= bound) on the cached basis.
CurvTensor random_curvature(int n, std::uint64_t seed, std::int64_t bound = 10);

/// Integer-valued random curvature tensor (integer coefficients on the
/// integer-scaled basis).
BasicTensor<CheckedInt> random_integer_curvature(int n, std::uint64_t seed, std::int64_t bound);

/// k (delta_ik delta_jl - delta_il delta_jk).
CurvTensor constant_curvature(int n, const Rational& k);

/// In dimension 3 the curvature is determined by the Ricci tensor.
CurvTensor curvature_from_ricci_3d(const RicciTensor& r);

/// r_ik = sum_a R_iaka on a raw order-4 tensor.
template <class T>
BasicTensor<T> ricci_contraction(const BasicTensor<T>& r) {
  if (r.order() != 4) throw std::invalid_argument("ricci contraction needs an order-4 tensor");
  const int n = r.dim();
  BasicTensor<T> out(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      T acc(0);
      for (int a = 0; a < n; ++a) acc += r(i, a, k, a);
      out(i, k) = acc;
    }
  }
  return out;
}

RicciTensor ricci(const CurvTensor& r);

/// s = sum_ij R_ijij.
Rational scalar_curvature(const CurvTensor& r);

}  // namespace hol
