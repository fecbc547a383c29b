#pragma once

#include <doctest.h>

#include <vector>

#include "hol/rational.hpp"
#include "hol/tensor.hpp"

namespace hol::test {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline std::vector<int> axes(std::initializer_list<int> a) { return a; }

/// Sign of a permutation by inversion count.
template <class Seq>
int perm_sign(const Seq& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// Dense order-2 tensor from rows.
inline Tensor matrix_tensor(const std::vector<std::vector<Rational>>& rows) {
  Tensor t(static_cast<int>(rows.size()), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) t(i, j) = rows[i][j];
  }
  return t;
}

inline Tensor diag_tensor(const std::vector<Rational>& d) {
  Tensor t(static_cast<int>(d.size()), 2);
  for (std::size_t i = 0; i < d.size(); ++i) t(i, i) = d[i];
  return t;
}

}  // namespace hol::test
