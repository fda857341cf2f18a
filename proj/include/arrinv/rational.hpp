#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arrinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad JSON, zero form, duplicate
/// hyperplane, ...). The CLI maps it to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain (m < n+2, n != 2, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Parses "p", "-p" or "p/q". Throws ValidationError on garbage or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// num/den in lowest terms. Throws PreconditionError when den = 0.
Rational ratio(long num, long den);

/// C(n, k) as an exact integer; zero when k < 0 or k > n.
Integer binomial(long n, long k);

} // namespace arrinv
