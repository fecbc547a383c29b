#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hol/rational.hpp"
#include "hol/rng.hpp"

namespace hol {

/// Dense tensor of order k over an n-dimensional space, entries stored
/// row-major on (i_1, ..., i_k). The frame is orthonormal, so upper and lower
/// indices coincide and every metric contraction is a plain trace.
template <class T>
class BasicTensor {
 public:
  static constexpr int kMinDim = 2;
  static constexpr int kMaxDim = 8;
  static constexpr int kMaxOrder = 6;

  BasicTensor(int dim, int order) : dim_(dim), order_(order) {
    if (dim < kMinDim || dim > kMaxDim) {
      throw std::invalid_argument("tensor dimension " + std::to_string(dim) + " outside [2, 8]");
    }
    if (order < 0 || order > kMaxOrder) {
      throw std::invalid_argument("tensor order " + std::to_string(order) + " outside [0, 6]");
    }
    std::size_t count = 1;
    for (int r = 0; r < order; ++r) count *= static_cast<std::size_t>(dim);
    data_.assign(count, T(0));
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  std::size_t size() const { return data_.size(); }

  T& operator[](std::size_t flat) { return data_[flat]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }

  std::size_t flat_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_) {
      throw std::invalid_argument("index arity does not match tensor order");
    }
    std::size_t flat = 0;
    for (int v : idx) {
      if (v < 0 || v >= dim_) throw std::out_of_range("tensor index out of range");
      flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
    }
    return flat;
  }

  void unflatten(std::size_t flat, std::span<int> out) const {
    for (int r = order_ - 1; r >= 0; --r) {
      out[static_cast<std::size_t>(r)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
      flat /= static_cast<std::size_t>(dim_);
    }
  }

  T& at(std::span<const int> idx) { return data_[flat_index(idx)]; }
  const T& at(std::span<const int> idx) const { return data_[flat_index(idx)]; }

  template <class... I>
  T& operator()(I... idx) {
    const std::array<int, sizeof...(I)> a{static_cast<int>(idx)...};
    return at(a);
  }
  template <class... I>
  const T& operator()(I... idx) const {
    const std::array<int, sizeof...(I)> a{static_cast<int>(idx)...};
    return at(a);
  }

  std::span<const T> entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return hol::is_zero(v); });
  }

  BasicTensor& operator+=(const BasicTensor& o) {
    check_same_shape(o);
    for (std::size_t f = 0; f < data_.size(); ++f) data_[f] += o.data_[f];
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& o) {
    check_same_shape(o);
    for (std::size_t f = 0; f < data_.size(); ++f) data_[f] -= o.data_[f];
    return *this;
  }
  BasicTensor& operator*=(const T& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }

  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
  friend BasicTensor operator*(const T& c, BasicTensor a) { return a *= c; }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const BasicTensor& o) const {
    if (o.dim_ != dim_ || o.order_ != order_) throw std::invalid_argument("tensor shape mismatch");
  }

  int dim_;
  int order_;
  std::vector<T> data_;
};

using Tensor = BasicTensor<Rational>;

namespace detail {

inline int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

inline void check_axes(int order, std::span<const int> axes) {
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (axes[a] < 0 || axes[a] >= order) throw std::out_of_range("axis out of range");
    for (std::size_t b = a + 1; b < axes.size(); ++b) {
      if (axes[a] == axes[b]) throw std::invalid_argument("repeated axis");
    }
  }
}

// Sum over all orderings of `axes`, weighted by sgn(sigma) when `alternating`.
template <class T>
BasicTensor<T> permutation_sum(const BasicTensor<T>& t, std::span<const int> axes, bool alternating) {
  check_axes(t.order(), axes);
  BasicTensor<T> out(t.dim(), t.order());
  std::vector<int> perm(axes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  std::vector<int> src(idx.size());
  do {
    const int sign = alternating ? permutation_sign(perm) : 1;
    for (std::size_t f = 0; f < t.size(); ++f) {
      t.unflatten(f, idx);
      src = idx;
      for (std::size_t r = 0; r < axes.size(); ++r) {
        src[static_cast<std::size_t>(axes[r])] = idx[static_cast<std::size_t>(axes[static_cast<std::size_t>(perm[r])])];
      }
      if (sign > 0) {
        out[f] += t.at(src);
      } else {
        out[f] -= t.at(src);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int r = 2; r <= m; ++r) f *= r;
  return f;
}

}  // namespace detail

/// Trace over two axes; the result has order k-2.
template <class T>
BasicTensor<T> contract(const BasicTensor<T>& t, int axis_a, int axis_b) {
  if (axis_a < 0 || axis_b < 0 || axis_a >= t.order() || axis_b >= t.order()) {
    throw std::out_of_range("contraction axis out of range");
  }
  if (axis_a == axis_b) throw std::invalid_argument("contraction axes must differ");
  BasicTensor<T> out(t.dim(), t.order() - 2);
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  std::vector<int> rest(static_cast<std::size_t>(out.order()));
  for (std::size_t f = 0; f < t.size(); ++f) {
    t.unflatten(f, idx);
    if (idx[static_cast<std::size_t>(axis_a)] != idx[static_cast<std::size_t>(axis_b)]) continue;
    std::size_t r = 0;
    for (int ax = 0; ax < t.order(); ++ax) {
      if (ax != axis_a && ax != axis_b) rest[r++] = idx[static_cast<std::size_t>(ax)];
    }
    out.at(rest) += t[f];
  }
  return out;
}

/// Unnormalized alternating sum: sum_sigma sgn(sigma) t^sigma over `axes`.
template <class T>
BasicTensor<T> alternate(const BasicTensor<T>& t, std::span<const int> axes) {
  return detail::permutation_sum(t, axes, true);
}

/// (1/m!) sum_sigma sgn(sigma) t^sigma over the m listed axes.
template <class T>
BasicTensor<T> antisymmetrize(const BasicTensor<T>& t, std::span<const int> axes) {
  BasicTensor<T> out = detail::permutation_sum(t, axes, true);
  out *= T(1) / T(detail::factorial(static_cast<int>(axes.size())));
  return out;
}

template <class T>
BasicTensor<T> symmetrize(const BasicTensor<T>& t, std::span<const int> axes) {
  BasicTensor<T> out = detail::permutation_sum(t, axes, false);
  out *= T(1) / T(detail::factorial(static_cast<int>(axes.size())));
  return out;
}

inline Tensor antisymmetrize(const Tensor& t, std::initializer_list<int> axes) {
  return antisymmetrize(t, std::span<const int>(axes.begin(), axes.size()));
}
inline Tensor symmetrize(const Tensor& t, std::initializer_list<int> axes) {
  return symmetrize(t, std::span<const int>(axes.begin(), axes.size()));
}

/// out(i_0..i_{k-1}) = t(i_perm[0], ..., i_perm[k-1]).
template <class T>
BasicTensor<T> permute_axes(const BasicTensor<T>& t, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != t.order()) throw std::invalid_argument("permutation arity");
  detail::check_axes(t.order(), perm);
  BasicTensor<T> out(t.dim(), t.order());
  std::vector<int> idx(perm.size());
  std::vector<int> src(perm.size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    out.unflatten(f, idx);
    for (std::size_t r = 0; r < perm.size(); ++r) src[r] = idx[static_cast<std::size_t>(perm[r])];
    out[f] = t.at(src);
  }
  return out;
}

/// Deterministic random tensor; entry f is drawn from stream f of `seed`.
Tensor random_rational(int dim, int order, std::uint64_t seed, std::int64_t bound);

BasicTensor<double> to_double(const Tensor& t);

}  // namespace hol
