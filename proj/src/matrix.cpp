#include "arrinv/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace arrinv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw PreconditionError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    m.append_row(r);
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& other) const {
  if (rows_ != 0 && other.rows_ != 0 && cols_ != other.cols_) {
    throw PreconditionError("stack: column count mismatch");
  }
  RationalMatrix out = rows_ == 0 ? RationalMatrix(0, other.cols_) : *this;
  for (std::size_t r = 0; r < other.rows_; ++r) {
    out.append_row(other.row(r));
  }
  return out;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
  RationalMatrix out(0, cols_);
  for (std::size_t r : indices) {
    out.append_row(row(r));
  }
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> indices) const {
  RationalMatrix out(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      out(r, j) = (*this)(r, indices[j]);
    }
  }
  return out;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw PreconditionError("append_row: expected " + std::to_string(cols_) + " entries, got " +
                            std::to_string(values.size()));
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw PreconditionError("matrix product: inner dimensions differ");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, {}, 0};
  RationalMatrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) {
      ++p;
    }
    if (p == a.rows()) {
      continue;
    }
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a(p, j), a(lead, j));
      }
    }
    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) {
      a(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) {
        continue;
      }
      const Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(r, j) -= f * a(lead, j);
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) {
    is_pivot[p] = true;
  }
  RationalMatrix basis(0, m.cols());
  std::vector<Rational> v(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v[r.pivots[i]] = -r.reduced(i, f);
    }
    basis.append_row(v);
  }
  return basis;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  RationalMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    out.append_row(r.reduced.row(i));
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("determinant of a non-square matrix");
  }
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) {
      ++p;
    }
    if (p == n) {
      return 0;
    }
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
      }
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = 1 / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) {
        continue;
      }
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        a(r, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw PreconditionError("solve: shape mismatch");
  }
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, n) = b[r];
  }
  const RrefResult red = rref(aug);
  if (red.rank != n || red.pivots.back() != n - 1) {
    throw PreconditionError("solve: singular system");
  }
  return red.reduced.column(n);
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) {
    throw PreconditionError("inverse of a non-square matrix");
  }
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) {
    throw PreconditionError("inverse: singular matrix");
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = red.reduced(r, n + c);
    }
  }
  return out;
}

std::size_t intersection_dimension(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  return ra + rb - rank(a.stack(b));
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const Rational& q : v) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) {
    throw PreconditionError("primitive_integer_vector: zero vector");
  }
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& z) { return z != 0; });
  if (*first < 0) {
    g = -g;
  }
  for (Integer& z : out) {
    z /= g;
  }
  return out;
}

} // namespace arrinv
