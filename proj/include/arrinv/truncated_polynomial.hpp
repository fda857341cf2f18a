#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "arrinv/rational.hpp"

namespace arrinv {

/// Integer polynomial in t carried modulo t^(cap+1).
class TruncatedPolynomial {
public:
  explicit TruncatedPolynomial(std::size_t cap);
  /// Coefficients low degree first; extra terms above `cap` are dropped.
  TruncatedPolynomial(std::size_t cap, std::initializer_list<long> coefficients);
  TruncatedPolynomial(std::size_t cap, std::vector<Integer> coefficients);

  static TruncatedPolynomial one(std::size_t cap);
  /// 1 + t + ... + t^k, truncated.
  static TruncatedPolynomial geometric(std::size_t cap, std::size_t k);
  /// (1 + c t)
  static TruncatedPolynomial linear(std::size_t cap, long c);

  std::size_t cap() const { return coefficients_.size() - 1; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  const Integer& operator[](std::size_t i) const { return coefficients_[i]; }
  Integer& operator[](std::size_t i) { return coefficients_[i]; }

  /// Value at t = x of the stored (already truncated) polynomial.
  Integer evaluate(long x) const;

  /// Same coefficients, carried to a different cap (truncating or zero-padding).
  TruncatedPolynomial with_cap(std::size_t cap) const;

  TruncatedPolynomial pow(std::size_t e) const;

  std::string to_string() const;

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

private:
  std::vector<Integer> coefficients_;
};

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// Convolution truncated at the common cap. Throws PreconditionError on cap mismatch.
TruncatedPolynomial poly_mul_truncated(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// The unique q with q * b = a mod t^(cap+1). b must have constant term +-1.
TruncatedPolynomial poly_div_truncated(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// Chern polynomial of a rank-`rank` sheaf twisted by O(1):
/// sum_i c_i t^i (1+t)^(rank-i), mod t^(cap+1).
TruncatedPolynomial twist_by_one(const TruncatedPolynomial& c, std::size_t rank);
/// Inverse of twist_by_one: sum_i d_i t^i (1-t)^(rank-i).
TruncatedPolynomial twist_by_minus_one(const TruncatedPolynomial& d, std::size_t rank);

} // namespace arrinv
