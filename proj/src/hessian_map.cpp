#include "hol/hessian_map.hpp"

#include <algorithm>

#include "hol/rng.hpp"

namespace hol {

CurvTensor rho(const Sym3Tensor& a) { return CurvTensor(rho_raw(a)); }

bool rho_scaling_check(const Sym3Tensor& a, const Rational& c) {
  Tensor lhs = rho_raw(c * a);
  Tensor rhs = rho_raw(a);
  rhs *= c * c;
  return lhs == rhs;
}

RationalMatrix rho_jacobian(const Sym3Tensor& a) {
  const int n = a.dim();
  const auto& basis = CurvatureBasis::for_dim(n);
  const Tensor ra = rho_raw(a);
  RationalMatrix jac(basis.size(), a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    const Sym3Tensor b = sym3_basis(n, p);
    const Tensor d = rho_raw(a + b) - ra - rho_raw(b);
    jac.set_column(p, basis.coordinates(d));
  }
  return jac;
}

ImageRankReport image_rank_census(int n, int samples, std::uint64_t seed, std::int64_t bound) {
  if (n < 2) throw std::invalid_argument("rank census needs n >= 2");
  if (samples < 1) throw std::invalid_argument("rank census needs samples >= 1");
  ImageRankReport rep;
  rep.n = n;
  rep.dim_s3 = sym3_dim(n);
  rep.dim_curv = curvature_space_dim(n);
  rep.seed = seed;
  for (int t = 0; t < samples; ++t) {
    const Sym3Tensor a = random_sym3(n, derive_seed(seed, static_cast<std::uint64_t>(t)), bound);
    rep.ranks.push_back(rank(rho_jacobian(a)));
  }
  rep.max_rank = *std::max_element(rep.ranks.begin(), rep.ranks.end());
  rep.codim = rep.dim_curv - static_cast<int>(rep.max_rank);
  const auto hits = std::count(rep.ranks.begin(), rep.ranks.end(), rep.max_rank);
  rep.attainment = static_cast<double>(hits) / static_cast<double>(samples);
  rep.low_attainment = rep.attainment < 0.8;
  return rep;
}

RicciTensor rho2(const Sym3Tensor& a) { return RicciTensor(ricci_contraction(rho_raw(a))); }

}  // namespace hol
