#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "insep/errors.hpp"

namespace insep {

// Dense matrix over an exact field F. F must provide +, -, *, /, unary -,
// ==, and the free functions is_zero, zero_like, one_like.
template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const F& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  // Rows given as vectors of equal length.
  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols, const F& zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<F> operator*(const std::vector<F>& x) const {
    if (x.size() != cols_) throw InvalidInput("dimension mismatch in matrix-vector product");
    std::vector<F> y(rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  F zero_;
  std::vector<F> data_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination. The pivot in each column is the first entry that
// is symbolically nonzero; there is no rounding to worry about.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pr = row;
    while (pr < a.rows() && is_zero(a(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pr, c), a(row, c));
    const F inv = one_like(a.zero()) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!is_zero(a(row, c))) a(row, c) = a(row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const F factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(r, c) = a(r, c) - factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return row_reduce(a).pivots.size();
}

// Basis of {x : A x = 0}, one vector per free column with that entry set to 1.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& a) {
  const auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols(), a.zero());
    v[free] = one_like(a.zero());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with A x = b (free variables set to zero), or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> linear_solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw InvalidInput("dimension mismatch in linear_solve");
  Matrix<F> aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols(), a.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  return x;
}

// Incrementally built subspace of F^n. Each stored row has a leading 1 in its
// pivot column and zeros in the pivot columns of all earlier rows, so reducing
// a vector against the rows in insertion order clears every pivot.
template <class F>
class EchelonSpace {
 public:
  EchelonSpace(std::size_t ambient, const F& zero) : ambient_(ambient), zero_(zero) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<F> reduce(std::vector<F> v) const {
    if (v.size() != ambient_) throw InvalidInput("vector length does not match subspace");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (is_zero(v[c])) continue;
      const F factor = v[c];
      for (std::size_t j = c; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] = v[j] - factor * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }

  // Returns true if v enlarged the space.
  bool insert(const std::vector<F>& v) {
    auto r = reduce(v);
    std::size_t c = 0;
    while (c < ambient_ && is_zero(r[c])) ++c;
    if (c == ambient_) return false;
    const F inv = one_like(zero_) / r[c];
    for (std::size_t j = c; j < ambient_; ++j)
      if (!is_zero(r[j])) r[j] = r[j] * inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
    return true;
  }

 private:
  std::size_t ambient_;
  F zero_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace insep
