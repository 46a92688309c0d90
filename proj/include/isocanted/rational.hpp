#pragma once

// Exact scalar types shared by every module. All arithmetic in the library is
// done over GMP rationals and integers; nothing is ever rounded.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace isocanted {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Thrown when textual input (matrix files, CLI arguments) cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive routine is asked to run past its size cap.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
/// Rejects zero denominators, whitespace and anything else GMP would guess at.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt pow2(unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace isocanted
