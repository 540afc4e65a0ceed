#include "abr/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "abr/error.hpp"

namespace abr {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::without_columns(std::span<const std::size_t> dropped) const {
  std::vector<std::size_t> kept;
  kept.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (std::find(dropped.begin(), dropped.end(), c) == dropped.end()) kept.push_back(c);
  return select_columns(kept);
}

Matrix Matrix::without_column(std::size_t dropped) const {
  const std::size_t d[] = {dropped};
  return without_columns(d);
}

Matrix Matrix::without_row(std::size_t dropped) const {
  Matrix out(rows_ - 1, cols_);
  for (std::size_t r = 0, o = 0; r < rows_; ++r) {
    if (r == dropped) continue;
    for (std::size_t c = 0; c < cols_; ++c) out(o, c) = (*this)(r, c);
    ++o;
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> kept) const {
  Matrix out(rows_, kept.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < kept.size(); ++c) out(r, c) = (*this)(r, kept[c]);
  return out;
}

std::vector<Rational> Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Rational det(const Matrix& m) {
  if (!m.square())
    throw ShapeError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = m(r, c);
      a[r * n + c] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }

  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int swaps = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }

  Rational out(swaps % 2 ? Integer(-at(n - 1, n - 1)) : at(n - 1, n - 1), scale);
  out.canonicalize();
  return out;
}

Sign det_sign(const Matrix& m) { return sign_of(det(m)); }

std::vector<Rational> signed_minor_kernel(const Matrix& p) {
  if (p.cols() != p.rows() + 1)
    throw ShapeError("signed_minor_kernel needs an n x (n+1) matrix, got " +
                     std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
  std::vector<Rational> v(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    v[j] = det(p.without_column(j));
    if (j % 2) v[j] = -v[j];
  }
  return v;
}

MinorTable::MinorTable(std::size_t columns, std::vector<Rational> values)
    : columns_(columns), values_(std::move(values)) {
  if (values_.size() != columns_ * (columns_ - 1) / 2)
    throw ShapeError("minor table size mismatch");
}

std::size_t MinorTable::index(std::size_t i, std::size_t j) const {
  if (!(i < j && j < columns_))
    throw IndexError("minor index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
  // Row-major over the strict upper triangle.
  return i * columns_ - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& MinorTable::operator()(std::size_t i, std::size_t j) const {
  return values_[index(i, j)];
}

MinorTable complementary_minors(const Matrix& q) {
  if (q.rows() < 2 || q.cols() != q.rows() + 2)
    throw ShapeError("complementary_minors needs an n x (n+2) matrix with n >= 2, got " +
                     std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
  const std::size_t cols = q.cols();
  std::vector<Rational> values;
  values.reserve(cols * (cols - 1) / 2);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = i + 1; j < cols; ++j) {
      const std::size_t dropped[] = {i, j};
      values.push_back(det(q.without_columns(dropped)));
    }
  return MinorTable(cols, std::move(values));
}

Rational plucker_residual(const MinorTable& delta, std::size_t i1, std::size_t i2,
                          std::size_t i3, std::size_t i4) {
  if (!(i1 < i2 && i2 < i3 && i3 < i4 && i4 < delta.columns()))
    throw IndexError("plucker_residual needs 0 <= i1 < i2 < i3 < i4 <= n+1");
  return delta(i1, i2) * delta(i3, i4) - delta(i1, i3) * delta(i2, i4) +
         delta(i1, i4) * delta(i2, i3);
}

Rational plucker_residual(const Matrix& q, std::size_t i1, std::size_t i2, std::size_t i3,
                          std::size_t i4) {
  return plucker_residual(complementary_minors(q), i1, i2, i3, i4);
}

}  // namespace abr
