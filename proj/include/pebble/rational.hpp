#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pebble {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always held in lowest terms with a positive denominator.
/// Arbitrary precision, so arithmetic never wraps.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "n/d" or "n". Throws Error(ParseError) on malformed text or d == 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_negative() const { return value_ < 0; }
  bool is_positive() const { return value_ > 0; }
  bool is_integer() const { return denominator() == 1; }

  /// Exact floor, as an arbitrary-precision integer.
  BigInt floor() const;

  /// Always "n/d", even for integers ("4/1").
  std::string str() const;

  double to_double() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Narrowing conversion that throws Error(Overflow) instead of truncating.
std::int64_t to_int64(const BigInt& value);
std::uint64_t to_uint64(const BigInt& value);

}  // namespace pebble
