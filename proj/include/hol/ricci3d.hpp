#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hol/curvature.hpp"
#include "hol/matrix.hpp"
#include "hol/sym3.hpp"

namespace hol {

/// Monomials are written in the cubic-form convention of set_monomial().
/// In that convention the closed-form polynomials below produce 72 times the
/// Ricci tensor, so they are evaluated at 72 * lambda ("raw units").
inline constexpr int kRicciScale = 72;

/// A = a1 e1^3 + e2^3 + a3 e3^3 + b13 e1^2 e3 + e2^2 e1 + e2^2 e3 + b31 e3^2 e1.
struct AnsatzCoefficients {
  Rational a1;
  Rational a3;
  Rational b13;
  Rational b31;
};

/// Closed-form coefficients for raw-unit eigenvalues; requires l1 != l3.
AnsatzCoefficients ansatz_coefficients(const Rational& l1, const Rational& l2, const Rational& l3);

Sym3Tensor ansatz_tensor(const AnsatzCoefficients& c);

/// ((20 - L)/48) e1^3 + e2^2 e1 + ((4 - L)/16) e3^2 e1 + e1 e2 e3, L in raw units.
Sym3Tensor isotropic_ansatz(const Rational& raw_lambda);

/// Raised when a constructed A fails its rho2 oracle.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, Tensor actual) : std::runtime_error(what), actual_(std::move(actual)) {}
  /// The rho2 value actually obtained.
  const Tensor& actual() const { return actual_; }

 private:
  Tensor actual_;
};

/// A with rho2(A) = diag(l1, l2, l3) exactly. When l1 == l3 != l2 the frame
/// is relabeled so the closed forms apply; when all three agree the isotropic
/// branch is used. Every result is checked before it is returned.
Sym3Tensor solve_from_eigenvalues(const Rational& l1, const Rational& l2, const Rational& l3);

/// A with rho2(A) = lambda * I, checked by oracle.
Sym3Tensor solve_isotropic(const Rational& lambda);

/// Exact diagonalization of a rational 3x3 Ricci tensor with rational spectrum.
struct ExactRicciSolution {
  std::array<Rational, 3> eigenvalues;  // ascending
  /// Orthogonal but unnormalized eigenframe: column a is an eigenvector for
  /// eigenvalues[a]; frame^T frame = diag(frame_norms). det > 0.
  RationalMatrix frame;
  std::array<Rational, 3> frame_norms;
  Matrix<double> rotation;  // frame with unit columns
  Sym3Tensor a{3};          // in the eigenframe
  bool isotropic = false;
  bool verified = false;
};

/// Throws std::invalid_argument on an irrational spectrum or n != 3.
ExactRicciSolution solve_from_ricci(const RicciTensor& r);

struct FloatRicciSolution {
  std::array<double, 3> eigenvalues;
  Matrix<double> rotation;  // proper orthogonal, columns are eigenvectors
  BasicSym3<double> a{3};   // in the eigenframe
  bool isotropic = false;
  double residual = 0.0;    // max |rotation rho2(A) rotation^T - r|
  bool verified = false;    // residual <= tol * max(1, max |r|)
};

FloatRicciSolution solve_from_ricci_float(const Matrix<double>& r, double tol = 1e-9);

/// Rational roots of x^3 + c2 x^2 + c1 x + c0 with multiplicity, ascending;
/// empty when some root is irrational.
std::vector<Rational> rational_cubic_roots(const Rational& c2, const Rational& c1, const Rational& c0);

/// Raw-unit (alpha, beta, gamma, delta) = 72 (r11, r22, r33, r13) of the ansatz.
std::array<Rational, 4> ansatz_ricci_components(const AnsatzCoefficients& c);

/// Whether u -> alpha(u) - gamma(u) is affine in u = (a1, a3, b13, b31), tested
/// by exact second differences f(x+y) - f(x) - f(y) + f(0) over `pairs` random
/// pairs. `component` selects what is tested: 0 for alpha - gamma, 1 for alpha
/// alone (a negative control).
bool ansatz_difference_is_affine(int pairs, std::uint64_t seed, int component = 0);

}  // namespace hol
