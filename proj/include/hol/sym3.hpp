#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hol/tensor.hpp"

namespace hol {

/// dim S^3 T* = C(n+2, 3).
constexpr int sym3_dim(int n) { return n * (n + 1) * (n + 2) / 6; }

/// Fully symmetric order-3 tensor stored once per multiset {i <= j <= k},
/// in lexicographic order of the sorted triple.
template <class T>
class BasicSym3 {
 public:
  explicit BasicSym3(int dim) : dim_(dim) {
    if (dim < 2 || dim > BasicTensor<T>::kMaxDim) throw std::invalid_argument("sym3 dimension outside [2, 8]");
    packed_.assign(static_cast<std::size_t>(sym3_dim(dim)), T(0));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return packed_.size(); }

  /// Position of the multiset {i, j, k} in packed storage (any argument order).
  std::size_t packed_index(int i, int j, int k) const {
    std::array<int, 3> s{i, j, k};
    std::sort(s.begin(), s.end());
    if (s[0] < 0 || s[2] >= dim_) throw std::out_of_range("sym3 index out of range");
    // Count triples lexicographically before (s0, s1, s2).
    std::size_t pos = 0;
    for (int a = 0; a < s[0]; ++a) pos += static_cast<std::size_t>((dim_ - a) * (dim_ - a + 1) / 2);
    for (int b = s[0]; b < s[1]; ++b) pos += static_cast<std::size_t>(dim_ - b);
    pos += static_cast<std::size_t>(s[2] - s[1]);
    return pos;
  }

  /// Sorted triple stored at packed position `p`.
  std::array<int, 3> multiset(std::size_t p) const {
    for (int i = 0; i < dim_; ++i) {
      for (int j = i; j < dim_; ++j) {
        for (int k = j; k < dim_; ++k) {
          if (p == 0) return {i, j, k};
          --p;
        }
      }
    }
    throw std::out_of_range("packed position out of range");
  }

  T& operator[](std::size_t p) { return packed_[p]; }
  const T& operator[](std::size_t p) const { return packed_[p]; }
  T& operator()(int i, int j, int k) { return packed_[packed_index(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return packed_[packed_index(i, j, k)]; }

  BasicTensor<T> to_dense() const {
    BasicTensor<T> out(dim_, 3);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        for (int k = 0; k < dim_; ++k) out(i, j, k) = (*this)(i, j, k);
      }
    }
    return out;
  }

  /// Packs a dense order-3 tensor; rejects input that is not fully symmetric.
  static BasicSym3 from_dense(const BasicTensor<T>& t) {
    if (t.order() != 3) throw std::invalid_argument("sym3 needs an order-3 tensor");
    BasicSym3 out(t.dim());
    const int n = t.dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (!(t(i, j, k) == t(j, i, k) && t(i, j, k) == t(i, k, j))) {
            throw std::invalid_argument("tensor is not fully symmetric");
          }
          out(i, j, k) = t(i, j, k);
        }
      }
    }
    return out;
  }

  BasicSym3& operator+=(const BasicSym3& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("sym3 dimension mismatch");
    for (std::size_t p = 0; p < packed_.size(); ++p) packed_[p] += o.packed_[p];
    return *this;
  }
  BasicSym3& operator*=(const T& c) {
    for (auto& v : packed_) v *= c;
    return *this;
  }
  friend BasicSym3 operator+(BasicSym3 a, const BasicSym3& b) { return a += b; }
  friend BasicSym3 operator*(const T& c, BasicSym3 a) { return a *= c; }
  friend bool operator==(const BasicSym3& a, const BasicSym3& b) {
    return a.dim_ == b.dim_ && a.packed_ == b.packed_;
  }

  /// Relabels the frame: out(i,j,k) = A(perm[i], perm[j], perm[k]).
  BasicSym3 relabeled(const std::array<int, 3>& perm) const {
    if (dim_ != 3) throw std::invalid_argument("relabeling is defined for n = 3");
    BasicSym3 out(dim_);
    for (std::size_t p = 0; p < packed_.size(); ++p) {
      const auto m = multiset(p);
      out[p] = (*this)(perm[static_cast<std::size_t>(m[0])], perm[static_cast<std::size_t>(m[1])],
                       perm[static_cast<std::size_t>(m[2])]);
    }
    return out;
  }

 private:
  int dim_;
  std::vector<T> packed_;
};

/// Number of distinct orderings of the multiset {i, j, k}.
inline int multiset_orderings(int i, int j, int k) {
  if (i == j && j == k) return 1;
  if (i == j || j == k || i == k) return 3;
  return 6;
}

/// Monomial convention: the cubic form sum A_ijk x_i x_j x_k has coefficient
/// `c` on x_i x_j x_k, i.e. A_ijk = c / multiset_orderings(i, j, k).
template <class T>
void set_monomial(BasicSym3<T>& a, int i, int j, int k, const T& c) {
  a(i, j, k) = c / T(multiset_orderings(i, j, k));
}

template <class T>
T monomial_coefficient(const BasicSym3<T>& a, int i, int j, int k) {
  return a(i, j, k) * T(multiset_orderings(i, j, k));
}

using Sym3Tensor = BasicSym3<Rational>;

/// Packed basis element for multiset position p (entry 1 there, 0 elsewhere).
inline Sym3Tensor sym3_basis(int n, std::size_t p) {
  Sym3Tensor b(n);
  b[p] = 1;
  return b;
}

/// Random S^3 tensor: packed entry p is drawn from stream p of `seed`.
Sym3Tensor random_sym3(int n, std::uint64_t seed, std::int64_t bound);

/// Integer-valued random S^3 tensor with entries in [-bound, bound].
BasicSym3<CheckedInt> random_integer_sym3(int n, std::uint64_t seed, std::int64_t bound);

BasicSym3<double> to_double(const Sym3Tensor& a);

}  // namespace hol
