#include "pebble/rational.hpp"

#include <limits>
#include <ostream>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  value_ = Value(numerator, denominator);
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  value_ = Value(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rational r;
    r.value_ = Value(parse_integer(text, text));
    return r;
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

BigInt Rational::floor() const {
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::BadParameter, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "value " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::uint64_t to_uint64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, "value " + value.str() + " does not fit in unsigned 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace pebble
