#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "abr/rational.hpp"

namespace abr {

/// Dense row-major matrix of exact rationals. Dimensions are fixed at
/// construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const { return entries_; }

  /// Copy with the listed columns removed; the rest keep their order.
  Matrix without_columns(std::span<const std::size_t> dropped) const;
  Matrix without_column(std::size_t dropped) const;
  Matrix without_row(std::size_t dropped) const;
  /// Copy restricted to the listed columns, in the order given.
  Matrix select_columns(std::span<const std::size_t> kept) const;

  std::vector<Rational> operator*(std::span<const Rational> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact determinant. Each row is scaled to integers by the lcm of its
/// denominators, the integer matrix is reduced by fraction-free Bareiss
/// elimination, and the scale is divided back out. Throws ShapeError when
/// the matrix is not square.
Rational det(const Matrix& m);

Sign det_sign(const Matrix& m);

/// (det P_0, -det P_1, ..., (-1)^n det P_n) where P_j drops column j of the
/// n x (n+1) input. The result lies in the kernel of p.
std::vector<Rational> signed_minor_kernel(const Matrix& p);

/// Complementary maximal minors of an n x (n+2) matrix: delta(i, j) is the
/// determinant with columns i and j (0-based, i < j) deleted.
class MinorTable {
 public:
  MinorTable(std::size_t columns, std::vector<Rational> values);

  std::size_t columns() const noexcept { return columns_; }
  const Rational& operator()(std::size_t i, std::size_t j) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t columns_;
  std::vector<Rational> values_;
};

MinorTable complementary_minors(const Matrix& q);

/// delta(i1,i2) delta(i3,i4) - delta(i1,i3) delta(i2,i4) + delta(i1,i4) delta(i2,i3).
/// Vanishes for every matrix; nonzero output means a bug upstream.
Rational plucker_residual(const MinorTable& delta, std::size_t i1, std::size_t i2,
                          std::size_t i3, std::size_t i4);
Rational plucker_residual(const Matrix& q, std::size_t i1, std::size_t i2, std::size_t i3,
                          std::size_t i4);

}  // namespace abr
