#include "arrinv/truncated_polynomial.hpp"

#include <algorithm>

namespace arrinv {

TruncatedPolynomial::TruncatedPolynomial(std::size_t cap) : coefficients_(cap + 1, Integer(0)) {}

TruncatedPolynomial::TruncatedPolynomial(std::size_t cap, std::initializer_list<long> coefficients)
    : TruncatedPolynomial(cap) {
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i > cap) {
      break;
    }
    coefficients_[i++] = c;
  }
}

TruncatedPolynomial::TruncatedPolynomial(std::size_t cap, std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(cap + 1, Integer(0));
}

TruncatedPolynomial TruncatedPolynomial::one(std::size_t cap) { return {cap, {1}}; }

TruncatedPolynomial TruncatedPolynomial::geometric(std::size_t cap, std::size_t k) {
  TruncatedPolynomial p(cap);
  for (std::size_t i = 0; i <= std::min(cap, k); ++i) {
    p.coefficients_[i] = 1;
  }
  return p;
}

TruncatedPolynomial TruncatedPolynomial::linear(std::size_t cap, long c) { return {cap, {1, c}}; }

Integer TruncatedPolynomial::evaluate(long x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

TruncatedPolynomial TruncatedPolynomial::with_cap(std::size_t cap) const {
  std::vector<Integer> c(coefficients_.begin(),
                         coefficients_.begin() + static_cast<long>(std::min(cap + 1, coefficients_.size())));
  return {cap, std::move(c)};
}

TruncatedPolynomial TruncatedPolynomial::pow(std::size_t e) const {
  TruncatedPolynomial result = one(cap());
  TruncatedPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) {
      result = poly_mul_truncated(result, base);
    }
    e >>= 1U;
    if (e > 0) {
      base = poly_mul_truncated(base, base);
    }
  }
  return result;
}

std::string TruncatedPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Integer& c = coefficients_[i];
    if (c == 0) {
      continue;
    }
    Integer a = abs(c);
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) {
      out += a.get_str();
    }
    if (i >= 1) {
      out += "t";
    }
    if (i >= 2) {
      out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_same_cap(const TruncatedPolynomial& a, const TruncatedPolynomial& b, const char* op) {
  if (a.cap() != b.cap()) {
    throw PreconditionError(std::string(op) + ": cap mismatch (" + std::to_string(a.cap()) +
                            " vs " + std::to_string(b.cap()) + ")");
  }
}

} // namespace

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_cap(a, b, "add");
  TruncatedPolynomial out(a.cap());
  for (std::size_t i = 0; i <= a.cap(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_cap(a, b, "sub");
  TruncatedPolynomial out(a.cap());
  for (std::size_t i = 0; i <= a.cap(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

TruncatedPolynomial poly_mul_truncated(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_cap(a, b, "poly_mul_truncated");
  const std::size_t cap = a.cap();
  TruncatedPolynomial out(cap);
  for (std::size_t i = 0; i <= cap; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= cap; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedPolynomial poly_div_truncated(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_cap(a, b, "poly_div_truncated");
  if (b[0] != 1 && b[0] != -1) {
    throw PreconditionError("poly_div_truncated: divisor constant term " + b[0].get_str() +
                            " is not a unit");
  }
  const std::size_t cap = a.cap();
  TruncatedPolynomial q(cap);
  for (std::size_t k = 0; k <= cap; ++k) {
    Integer acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) {
      acc -= b[j] * q[k - j];
    }
    q[k] = acc * b[0]; // b0 = +-1 is its own inverse
  }
  return q;
}

namespace {

TruncatedPolynomial twist(const TruncatedPolynomial& c, std::size_t rank, long sign) {
  const std::size_t cap = c.cap();
  if (cap > rank) {
    throw PreconditionError("twist: cap exceeds rank");
  }
  const TruncatedPolynomial step = TruncatedPolynomial::linear(cap, sign);
  TruncatedPolynomial out(cap);
  for (std::size_t i = 0; i <= cap; ++i) {
    if (c[i] == 0) {
      continue;
    }
    TruncatedPolynomial term(cap);
    term[i] = c[i];
    out = out + poly_mul_truncated(term, step.pow(rank - i));
  }
  return out;
}

} // namespace

TruncatedPolynomial twist_by_one(const TruncatedPolynomial& c, std::size_t rank) {
  return twist(c, rank, 1);
}

TruncatedPolynomial twist_by_minus_one(const TruncatedPolynomial& d, std::size_t rank) {
  return twist(d, rank, -1);
}

} // namespace arrinv
