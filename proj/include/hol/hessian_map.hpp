#pragma once

#include <cstdint>
#include <vector>

#include "hol/curvature.hpp"
#include "hol/matrix.hpp"
#include "hol/sym3.hpp"

namespace hol {

/// The quadratic map from S^3 tensors to curvature tensors,
///   R_ijkl = -sum_a A_ika A_jla + sum_a A_ila A_jka,
/// without validating the result. Works for any scalar type.
template <class T>
BasicTensor<T> rho_raw(const BasicSym3<T>& a) {
  const int n = a.dim();
  const BasicTensor<T> d = a.to_dense();
  BasicTensor<T> r(n, 4);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          T acc(0);
          for (int x = 0; x < n; ++x) acc += d(i, l, x) * d(j, k, x) - d(i, k, x) * d(j, l, x);
          r(i, j, k, l) = acc;
        }
      }
    }
  }
  return r;
}

/// rho(A) as a validated curvature tensor.
CurvTensor rho(const Sym3Tensor& a);

/// Whether rho(cA) == c^2 rho(A) exactly.
bool rho_scaling_check(const Sym3Tensor& a, const Rational& c);

/// Matrix of B -> rho(A+B) - rho(A) - rho(B) (the derivative of rho at A).
/// Rows: coordinates in CurvatureBasis::for_dim(n); columns: packed S^3 basis.
RationalMatrix rho_jacobian(const Sym3Tensor& a);

struct ImageRankReport {
  int n = 0;
  int dim_s3 = 0;
  int dim_curv = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> ranks;
  std::size_t max_rank = 0;
  int codim = 0;                  // dim_curv - max_rank
  double attainment = 0.0;        // fraction of samples reaching max_rank
  bool low_attainment = false;    // attainment below 80%
};

/// Exact Jacobian ranks of rho at `samples` random rational points
/// (sample t uses derive_seed(seed, t), entry bound `bound`).
ImageRankReport image_rank_census(int n, int samples, std::uint64_t seed, std::int64_t bound = 10);

/// ricci(rho(A)).
RicciTensor rho2(const Sym3Tensor& a);

}  // namespace hol
