#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arrinv/matrix.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

/// A linear form on k^(n+1), stored as the canonical representative of its
/// projective class: primitive integer coefficients, first nonzero entry > 0.
class LinearForm {
public:
  /// Canonicalizes `coefficients`. Throws ValidationError on the zero form.
  explicit LinearForm(std::span<const Rational> coefficients);
  explicit LinearForm(std::vector<Integer> coefficients);

  std::size_t size() const { return coefficients_.size(); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  const Integer& operator[](std::size_t i) const { return coefficients_[i]; }

  /// f(v) = sum_k f_k v_k
  Rational evaluate(std::span<const Rational> v) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm& a, const LinearForm& b) {
    return a.coefficients_ <=> b.coefficients_;
  }

private:
  std::vector<Integer> coefficients_;
};

/// m pairwise distinct hyperplanes of P^n. Labels are 1-based in every
/// user-facing output and 0-based in the API.
class Arrangement {
public:
  /// Throws ValidationError on wrong lengths, zero forms, duplicates or m = 0.
  Arrangement(std::size_t n, std::vector<LinearForm> forms);

  std::size_t n() const { return n_; }
  std::size_t m() const { return forms_.size(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(std::size_t i) const { return forms_[i]; }

  /// m x (n+1): row i holds the coefficients of f_i.
  RationalMatrix form_matrix() const;
  /// Rows of the listed forms only.
  RationalMatrix form_matrix(std::span<const std::size_t> indices) const;

  /// The arrangement with hyperplanes relabeled: new label i carries old label perm[i].
  Arrangement permuted(std::span<const std::size_t> perm) const;
  /// The sub-arrangement on the listed labels, in that order.
  Arrangement restricted(std::span<const std::size_t> indices) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
  std::size_t n_;
  std::vector<LinearForm> forms_;
};

/// Builds and validates an arrangement from raw rational rows of length n+1.
Arrangement parse_arrangement(std::size_t n, const std::vector<std::vector<Rational>>& rows);

/// Forms span the full (n+1)-dimensional dual space.
bool is_essential(const Arrangement& a);

} // namespace arrinv
