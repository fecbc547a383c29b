#include "hol/ricci3d.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

#include "hol/hessian_map.hpp"
#include "hol/rng.hpp"

namespace hol {

namespace {

template <class T>
std::array<T, 4> closed_form(const T& l1, const T& l2, const T& l3) {
  const T a3 = (l1 * l1 + T(16) * l2 - l1 * l2 - T(16) * l3 - T(2) * l1 * l3 + l2 * l3 + l3 * l3) / (T(48) * (l1 - l3));
  const T a1 = (T(8) - T(24) * a3 - l2) / T(24);
  const T b13 = T(3) * a3 + (-l1 + l2 + l3) / T(16);
  const T b31 = T(1) - T(3) * a3 + (l1 - l2 - l3) / T(16);
  return {a1, a3, b13, b31};
}

template <class T>
BasicSym3<T> ansatz_of(const T& a1, const T& a3, const T& b13, const T& b31) {
  BasicSym3<T> a(3);
  set_monomial(a, 0, 0, 0, a1);
  set_monomial(a, 1, 1, 1, T(1));
  set_monomial(a, 2, 2, 2, a3);
  set_monomial(a, 0, 0, 2, b13);
  set_monomial(a, 1, 1, 0, T(1));
  set_monomial(a, 1, 1, 2, T(1));
  set_monomial(a, 2, 2, 0, b31);
  return a;
}

template <class T>
BasicSym3<T> isotropic_of(const T& raw) {
  BasicSym3<T> a(3);
  set_monomial(a, 0, 0, 0, T((T(20) - raw) / T(48)));
  set_monomial(a, 1, 1, 0, T(1));
  set_monomial(a, 2, 2, 0, T((T(4) - raw) / T(16)));
  set_monomial(a, 0, 1, 2, T(1));
  return a;
}

template <class T>
BasicSym3<T> solve_main_branch(const T& l1, const T& l2, const T& l3) {
  const T s(kRicciScale);
  const auto c = closed_form<T>(s * l1, s * l2, s * l3);
  return ansatz_of(c[0], c[1], c[2], c[3]);
}

std::string describe(const Tensor& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim(); ++i) {
    out += i ? ", [" : "[";
    for (int k = 0; k < m.dim(); ++k) out += (k ? ", " : "") + to_string(m(i, k));
    out += "]";
  }
  return out + "]";
}

void check_diagonal(const Sym3Tensor& a, const std::array<Rational, 3>& lambda, const char* branch) {
  const Tensor actual = rho2(a).tensor();
  Tensor expected(3, 2);
  for (int i = 0; i < 3; ++i) expected(i, i) = lambda[static_cast<std::size_t>(i)];
  if (!(actual == expected)) {
    throw VerificationError(std::string(branch) + " branch failed its oracle: rho2(A) = " + describe(actual) +
                                ", expected " + describe(expected),
                            actual);
  }
}

BigInt eval_monic(const std::array<BigInt, 3>& c, const BigInt& y) {
  return ((y + c[2]) * y + c[1]) * y + c[0];
}

// Integer roots of the monic cubic y^3 + c[2] y^2 + c[1] y + c[0], distinct.
std::set<BigInt> integer_roots(const std::array<BigInt, 3>& c) {
  std::set<BigInt> roots;
  BigInt bound = 1;
  for (const auto& v : c) bound = std::max(bound, BigInt(abs(v) + 1));

  auto test = [&](const BigInt& y) {
    if (abs(y) <= bound && eval_monic(c, y) == 0) roots.insert(y);
  };
  auto search = [&](BigInt lo, BigInt hi) {
    if (lo > hi) return;
    const int slo = sgn(eval_monic(c, lo));
    const int shi = sgn(eval_monic(c, hi));
    if (slo == 0) roots.insert(lo);
    if (shi == 0) roots.insert(hi);
    if (slo == 0 || shi == 0 || slo == shi) return;
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      const int sm = sgn(eval_monic(c, mid));
      if (sm == 0) {
        roots.insert(mid);
        return;
      }
      (sm == slo ? lo : hi) = mid;
    }
  };

  // Critical points of the cubic are (-c2 -+ sqrt(D)) / 3, D = c2^2 - 3 c1.
  const BigInt disc = c[2] * c[2] - 3 * c[1];
  if (disc < 0) {
    search(-bound, bound);
    return roots;
  }
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  auto floor_div3 = [](const BigInt& v) {
    BigInt q;
    mpz_fdiv_q_ui(q.get_mpz_t(), v.get_mpz_t(), 3);
    return q;
  };
  const BigInt lo1 = floor_div3(-c[2] - s - 1) - 1;
  const BigInt hi1 = floor_div3(-c[2] - s) + 2;
  const BigInt lo2 = floor_div3(-c[2] + s) - 1;
  const BigInt hi2 = floor_div3(-c[2] + s + 1) + 2;
  for (BigInt y = lo1; y <= hi1; ++y) test(y);
  for (BigInt y = lo2; y <= hi2; ++y) test(y);
  search(-bound, lo1 - 1);
  search(hi1 + 1, lo2 - 1);
  search(hi2 + 1, bound);
  return roots;
}

Rational dot3(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Rational det3(const RationalMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

AnsatzCoefficients ansatz_coefficients(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (l1 == l3) throw std::invalid_argument("closed forms need l1 != l3");
  const auto c = closed_form<Rational>(l1, l2, l3);
  return {c[0], c[1], c[2], c[3]};
}

Sym3Tensor ansatz_tensor(const AnsatzCoefficients& c) { return ansatz_of(c.a1, c.a3, c.b13, c.b31); }

Sym3Tensor isotropic_ansatz(const Rational& raw_lambda) { return isotropic_of(raw_lambda); }

Sym3Tensor solve_isotropic(const Rational& lambda) {
  const Sym3Tensor a = isotropic_of(Rational(kRicciScale * lambda));
  check_diagonal(a, {lambda, lambda, lambda}, "isotropic");
  return a;
}

Sym3Tensor solve_from_eigenvalues(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (l1 == l2 && l2 == l3) return solve_isotropic(l1);
  Sym3Tensor a(3);
  if (l1 == l3) {
    a = solve_main_branch(l1, l3, l2).relabeled({0, 2, 1});
  } else {
    a = solve_main_branch(l1, l2, l3);
  }
  check_diagonal(a, {l1, l2, l3}, "main");
  return a;
}

std::vector<Rational> rational_cubic_roots(const Rational& c2, const Rational& c1, const Rational& c0) {
  BigInt scale = 1;
  for (const Rational* v : {&c2, &c1, &c0}) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v->get_den_mpz_t());
  }
  // y = scale * x turns the cubic into a monic integer one.
  const Rational q(scale);
  std::array<BigInt, 3> c;
  c[2] = Rational(c2 * q).get_num();
  c[1] = Rational(c1 * q * q).get_num();
  c[0] = Rational(c0 * q * q * q).get_num();

  std::vector<BigInt> coeff{c[0], c[1], c[2], BigInt(1)};  // ascending powers
  std::vector<Rational> out;
  for (const BigInt& r : integer_roots(c)) {
    for (;;) {
      // Synthetic division by (y - r).
      std::vector<BigInt> quotient(coeff.size() - 1);
      BigInt carry = 0;
      for (std::size_t d = coeff.size(); d-- > 1;) {
        carry = coeff[d] + carry * r;
        quotient[d - 1] = carry;
      }
      if (coeff[0] + carry * r != 0) break;
      coeff = std::move(quotient);
      Rational x(r, scale);
      x.canonicalize();
      out.push_back(x);
      if (coeff.size() == 1) break;
    }
  }
  if (out.size() != 3) return {};
  std::sort(out.begin(), out.end());
  return out;
}

ExactRicciSolution solve_from_ricci(const RicciTensor& r) {
  if (r.dim() != 3) throw std::invalid_argument("solve_from_ricci needs n = 3");
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) m(i, k) = r(i, k);
  }
  const Rational trace = m(0, 0) + m(1, 1) + m(2, 2);
  const Rational minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                          m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const Rational det = det3(m);
  const auto roots = rational_cubic_roots(-trace, minors, -det);
  if (roots.empty()) throw std::invalid_argument("Ricci tensor has an irrational spectrum; use float mode");

  ExactRicciSolution sol;
  sol.eigenvalues = {roots[0], roots[1], roots[2]};
  sol.frame = RationalMatrix(3, 3);
  std::size_t col = 0;
  for (std::size_t e = 0; e < 3; ++e) {
    if (e > 0 && roots[e] == roots[e - 1]) continue;
    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= roots[e];
    std::vector<std::vector<Rational>> space = nullspace(shifted);
    for (std::size_t v = 0; v < space.size(); ++v) {
      for (std::size_t w = 0; w < v; ++w) {
        const Rational f = dot3(space[v], space[w]) / dot3(space[w], space[w]);
        for (std::size_t i = 0; i < 3; ++i) space[v][i] -= f * space[w][i];
      }
      sol.frame.set_column(col++, space[v]);
    }
  }
  if (col != 3) throw std::logic_error("eigenspaces do not span R^3");
  if (det3(sol.frame) < 0) {
    for (std::size_t i = 0; i < 3; ++i) sol.frame(i, 0) = -sol.frame(i, 0);
  }
  sol.rotation = Matrix<double>(3, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    const auto v = sol.frame.column(a);
    sol.frame_norms[a] = dot3(v, v);
    const double len = std::sqrt(sol.frame_norms[a].get_d());
    for (std::size_t i = 0; i < 3; ++i) sol.rotation(i, a) = v[i].get_d() / len;
  }

  sol.isotropic = roots[0] == roots[2];
  sol.a = solve_from_eigenvalues(roots[0], roots[1], roots[2]);

  // Round trip: r = sum_a (lambda_a / |p_a|^2) p_a p_a^T.
  RationalMatrix back(3, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    const Rational w = sol.eigenvalues[a] / sol.frame_norms[a];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) back(i, k) += w * sol.frame(i, a) * sol.frame(k, a);
    }
  }
  if (!(back == m)) throw VerificationError("frame round trip does not reproduce the Ricci tensor", r.tensor());
  sol.verified = true;
  return sol;
}

FloatRicciSolution solve_from_ricci_float(const Matrix<double>& r, double tol) {
  if (r.rows() != 3 || r.cols() != 3) throw std::invalid_argument("solve_from_ricci needs a 3x3 matrix");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  Eigen::Matrix3d m;
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      m(i, k) = r(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
      scale = std::max(scale, std::abs(m(i, k)));
      if (std::abs(r(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) -
                   r(static_cast<std::size_t>(k), static_cast<std::size_t>(i))) > tol * scale) {
        throw std::invalid_argument("Ricci tensor must be symmetric");
      }
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(m);
  Eigen::Matrix3d q = eig.eigenvectors();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  const Eigen::Vector3d lam = eig.eigenvalues();

  FloatRicciSolution sol;
  sol.rotation = Matrix<double>(3, 3);
  for (int i = 0; i < 3; ++i) {
    sol.eigenvalues[static_cast<std::size_t>(i)] = lam(i);
    for (int a = 0; a < 3; ++a) sol.rotation(static_cast<std::size_t>(i), static_cast<std::size_t>(a)) = q(i, a);
  }
  sol.isotropic = lam(2) - lam(0) <= tol * scale;
  if (sol.isotropic) {
    sol.a = isotropic_of<double>(kRicciScale * lam.mean());
  } else {
    sol.a = solve_main_branch<double>(lam(0), lam(1), lam(2));
  }

  const BasicTensor<double> ric = ricci_contraction(rho_raw(sol.a));
  Eigen::Matrix3d d;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) d(i, k) = ric(i, k);
  }
  sol.residual = (q * d * q.transpose() - m).cwiseAbs().maxCoeff();
  sol.verified = sol.residual <= tol * scale;
  return sol;
}

std::array<Rational, 4> ansatz_ricci_components(const AnsatzCoefficients& c) {
  const Tensor ric = rho2(ansatz_tensor(c)).tensor();
  const Rational s(kRicciScale);
  return {s * ric(0, 0), s * ric(1, 1), s * ric(2, 2), s * ric(0, 2)};
}

bool ansatz_difference_is_affine(int pairs, std::uint64_t seed, int component) {
  auto f = [component](const std::array<Rational, 4>& u) {
    const auto v = ansatz_ricci_components({u[0], u[1], u[2], u[3]});
    return component == 0 ? Rational(v[0] - v[2]) : v[0];
  };
  auto draw = [](std::uint64_t s) {
    std::array<Rational, 4> u;
    for (std::size_t i = 0; i < 4; ++i) u[i] = CounterRng(s, i).uniform_rational(10);
    return u;
  };
  const Rational f0 = f({0, 0, 0, 0});
  for (int t = 0; t < pairs; ++t) {
    const auto x = draw(derive_seed(seed, static_cast<std::uint64_t>(2 * t)));
    const auto y = draw(derive_seed(seed, static_cast<std::uint64_t>(2 * t + 1)));
    std::array<Rational, 4> xy;
    for (std::size_t i = 0; i < 4; ++i) xy[i] = x[i] + y[i];
    if (f(xy) - f(x) - f(y) + f0 != 0) return false;
  }
  return true;
}

}  // namespace hol
