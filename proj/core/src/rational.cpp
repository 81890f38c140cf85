#include "cevian/rational.hpp"

#include <algorithm>
#include <cctype>

#include "cevian/error.hpp"

namespace cevian {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidIndexSet: return "InvalidIndexSet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ProjectionUndefined: return "ProjectionUndefined";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::PointNotOnSide: return "PointNotOnSide";
    case ErrorCode::IndeterminateRatio: return "IndeterminateRatio";
    case ErrorCode::NotOnS: return "NotOnS";
    case ErrorCode::NotOnH: return "NotOnH";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::OffTorus: return "OffTorus";
    case ErrorCode::NotRankOneCompletable: return "NotRankOneCompletable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den.sign() == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  // mpq_rational(int, int) in Boost 1.74 mishandles negative denominators;
  // the mpz constructor canonicalises correctly.
  return Rational(num, den);
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  const BigInt d{std::string(den)};
  if (d.sign() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(BigInt{std::string(num)}, d);
}

std::string to_string(const Rational& value) {
  const BigInt& den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace cevian
