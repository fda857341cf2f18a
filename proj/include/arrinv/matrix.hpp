#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "arrinv/rational.hpp"

namespace arrinv {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t c) const;

  RationalMatrix transpose() const;
  /// Rows stacked: `*this` on top of `other`. Column counts must agree.
  RationalMatrix stack(const RationalMatrix& other) const;
  /// Keeps only the listed rows, in the given order.
  RationalMatrix select_rows(std::span<const std::size_t> indices) const;
  RationalMatrix select_columns(std::span<const std::size_t> indices) const;

  void append_row(std::span<const Rational> values);

  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Zero rows stay at the bottom.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. One row per free column of the RREF, with
/// that free variable set to 1, the other free variables 0 and the pivot
/// variables solved for.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Nonzero rows of the RREF: the canonical basis of the row space.
RationalMatrix row_space_basis(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Solves a x = b for square invertible a.
std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b);

RationalMatrix inverse(const RationalMatrix& a);

/// dim(span(a) ∩ span(b)) for two sets of row vectors of the same width.
std::size_t intersection_dimension(const RationalMatrix& a, const RationalMatrix& b);

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

} // namespace arrinv
