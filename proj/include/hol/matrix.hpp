#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hol/rational.hpp"

namespace hol {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Submatrix made of the listed columns, in order.
  Matrix select_columns(const std::vector<std::size_t>& cs) const {
    Matrix out(rows_, cs.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cs.size(); ++j) out(r, j) = (*this)(r, cs[j]);
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!hol::is_zero(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

/// Reduced row echelon form over Q.
struct Rref {
  RationalMatrix reduced;              // rank rows, pivot entries 1
  std::vector<std::size_t> pivots;     // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Numerical rank: singular values above tol * largest singular value.
std::size_t rank(const Matrix<double>& m, double tol = 1e-9);

/// Basis of {x : m x = 0}, one vector per free column; vector for free column
/// f has a 1 at f and zeros at the other free columns.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Incrementally maintained RREF of a growing set of row vectors. Used for
/// "add samples until the rank stops increasing".
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row; returns true when it increased the rank.
  bool add(std::vector<Rational> row);

  /// Whether `v` lies in the span of the rows added so far.
  bool contains(std::vector<Rational> v) const;

  /// Null space of the accumulated rows (same convention as nullspace()).
  std::vector<std::vector<Rational>> kernel() const;

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  // Reduces v against the stored rows in place.
  void reduce(std::vector<Rational>& v) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the span of a list of vectors.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t width);

/// Whether v lies in span(vectors).
bool in_span(const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& v);

}  // namespace hol
