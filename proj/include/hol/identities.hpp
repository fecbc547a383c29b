#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hol/curvature.hpp"

namespace hol {

/// Fully antisymmetric tensor of degree d, stored once per strictly
/// increasing index tuple (bitmask of the index set).
class AlternatingForm {
 public:
  AlternatingForm(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  /// Index sets in lexicographic order.
  const std::vector<std::vector<int>>& index_sets() const { return sets_; }
  const Rational& component(std::size_t set) const { return values_[set]; }
  Rational& component(std::size_t set) { return values_[set]; }

  bool is_zero() const;
  /// Densify; only possible while the degree fits a Tensor (<= 6).
  Tensor to_dense() const;

 private:
  int dim_;
  int degree_;
  std::vector<std::vector<int>> sets_;
  std::vector<Rational> values_;
};

/// First nonzero entry (row-major) of a tensor.
std::optional<std::pair<std::vector<int>, Rational>> first_nonzero(const Tensor& t);

/// alpha(R_ijab R_klba): antisymmetrization over i,j,k,l. Requires n >= 4.
Tensor pontryagin_quadratic(const CurvTensor& r);

/// alpha(R_iajb R_kbcd R_ldac - 2 R_iajb R_kcad R_ldbc). Requires n >= 4.
///
/// Slot maps with all indices lowered (orthonormal frame):
///   term 1: factor 1 = (i,a,j,b), factor 2 = (k,b,c,d), factor 3 = (l,d,a,c)
///   term 2: factor 1 = (i,a,j,b), factor 2 = (k,c,a,d), factor 3 = (l,d,b,c)
Tensor cubic_identity(const CurvTensor& r);

/// Q^p_{i_1..i_2p} = sum_sigma sgn(sigma) R_{i_s1 i_s2 a1 a2} R_{i_s3 i_s4 a2 a3} ... R_{.. a_p a1}.
/// Requires p >= 1 and 2p <= n. Evaluated by dynamic programming over the set
/// of free indices already placed, never expanding the (2p)! sum.
AlternatingForm pontryagin_form(const CurvTensor& r, int p);

/// R_ijkl + R_jkil + R_kijl on any order-4 tensor.
Tensor bianchi_residual(const Tensor& r);

}  // namespace hol
