#include "arrinv/arrangement.hpp"

#include <algorithm>

namespace arrinv {

namespace {

std::vector<Integer> canonical_coefficients(std::span<const Rational> coefficients) {
  const bool all_zero =
      std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q == 0; });
  if (coefficients.empty() || all_zero) {
    throw ValidationError("zero linear form");
  }
  return primitive_integer_vector(coefficients);
}

std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  return {v.begin(), v.end()};
}

} // namespace

LinearForm::LinearForm(std::span<const Rational> coefficients)
    : coefficients_(canonical_coefficients(coefficients)) {}

LinearForm::LinearForm(std::vector<Integer> coefficients)
    : LinearForm(std::span<const Rational>(to_rationals(coefficients))) {}

Rational LinearForm::evaluate(std::span<const Rational> v) const {
  Rational acc = 0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    acc += Rational(coefficients_[k]) * v[k];
  }
  return acc;
}

Arrangement::Arrangement(std::size_t n, std::vector<LinearForm> forms)
    : n_(n), forms_(std::move(forms)) {
  if (forms_.empty()) {
    throw ValidationError("an arrangement needs at least one hyperplane");
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].size() != n_ + 1) {
      throw ValidationError("hyperplane " + std::to_string(i + 1) + ": expected " +
                            std::to_string(n_ + 1) + " coefficients, got " +
                            std::to_string(forms_[i].size()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[j] == forms_[i]) {
        throw ValidationError("hyperplane " + std::to_string(i + 1) + " duplicates hyperplane " +
                              std::to_string(j + 1));
      }
    }
  }
}

RationalMatrix Arrangement::form_matrix() const {
  RationalMatrix out(0, n_ + 1);
  for (const LinearForm& f : forms_) {
    out.append_row(to_rationals(f.coefficients()));
  }
  return out;
}

RationalMatrix Arrangement::form_matrix(std::span<const std::size_t> indices) const {
  RationalMatrix out(0, n_ + 1);
  for (std::size_t i : indices) {
    out.append_row(to_rationals(forms_[i].coefficients()));
  }
  return out;
}

Arrangement Arrangement::permuted(std::span<const std::size_t> perm) const {
  std::vector<LinearForm> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) {
    out.push_back(forms_.at(i));
  }
  return {n_, std::move(out)};
}

Arrangement Arrangement::restricted(std::span<const std::size_t> indices) const {
  return permuted(indices);
}

Arrangement parse_arrangement(std::size_t n, const std::vector<std::vector<Rational>>& rows) {
  std::vector<LinearForm> forms;
  forms.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n + 1) {
      throw ValidationError("hyperplane " + std::to_string(i + 1) + ": expected " +
                            std::to_string(n + 1) + " coefficients, got " +
                            std::to_string(rows[i].size()));
    }
    try {
      forms.emplace_back(std::span<const Rational>(rows[i]));
    } catch (const ValidationError&) {
      throw ValidationError("hyperplane " + std::to_string(i + 1) + ": zero linear form");
    }
  }
  return {n, std::move(forms)};
}

bool is_essential(const Arrangement& a) { return rank(a.form_matrix()) == a.n() + 1; }

} // namespace arrinv
