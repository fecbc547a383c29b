#include "hol/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace hol {

Rref rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && is_zero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  RationalMatrix reduced(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  }
  return Rref{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::size_t rank(const Matrix<double>& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++r;
  }
  return r;
}

namespace {

std::vector<std::vector<Rational>> kernel_from(const std::vector<std::vector<Rational>>& rows,
                                               const std::vector<std::size_t>& pivots, std::size_t width) {
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(width, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const Rref e = rref(m);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < e.rank(); ++r) rows.push_back(e.reduced.row(r));
  return kernel_from(rows, e.pivots, m.cols());
}

void RowEchelon::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (is_zero(v[p])) continue;
    const Rational f = v[p];
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < width_; ++c) {
      if (!is_zero(row[c])) v[c] -= f * row[c];
    }
  }
}

bool RowEchelon::add(std::vector<Rational> row) {
  if (row.size() != width_) throw std::invalid_argument("row width mismatch");
  reduce(row);
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !is_zero(x); });
  if (lead == row.end()) return false;
  const auto q = static_cast<std::size_t>(lead - row.begin());
  const Rational inv = 1 / row[q];
  for (auto& x : row) x *= inv;
  for (auto& other : rows_) {
    if (is_zero(other[q])) continue;
    const Rational f = other[q];
    for (std::size_t c = 0; c < width_; ++c) {
      if (!is_zero(row[c])) other[c] -= f * row[c];
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(q);
  return true;
}

bool RowEchelon::contains(std::vector<Rational> v) const {
  if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

std::vector<std::vector<Rational>> RowEchelon::kernel() const { return kernel_from(rows_, pivots_, width_); }

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t width) {
  RowEchelon e(width);
  for (const auto& v : vectors) e.add(v);
  return e.rank();
}

bool in_span(const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& v) {
  RowEchelon e(v.size());
  for (const auto& u : vectors) e.add(u);
  return e.contains(v);
}

}  // namespace hol
