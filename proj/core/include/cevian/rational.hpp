#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace cevian {

/// Exact rational scalar. GMP keeps every value gcd-reduced with a positive
/// denominator after each arithmetic operation.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// num/den with sign normalisation; den == 0 throws InvalidArgument.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" (optional leading '-', decimal digits only, q != 0).
/// The result is canonical, so "-6/4" and "-3/2" parse to the same value.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_zero(const Rational& value) { return value.sign() == 0; }

}  // namespace cevian
