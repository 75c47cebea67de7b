#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kproper {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long long>(value)) {}  // NOLINT

  explicit Rational(const BigInt& value);
  /// Throws DomainError on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses the canonical form "p/q" (q >= 2, reduced) or "p". Anything else,
  /// including "2/4", "+1", "-0", "3/1", raises ParseError naming the
  /// canonical spelling when one exists.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const;

  Rational abs() const;
  /// Throws DomainError for zero.
  Rational inverse() const;

  /// Canonical serialization, the inverse of parse().
  std::string str() const;
  /// Display only; never used in a decision.
  double approx() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  using Mpq = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                            boost::multiprecision::et_off>;
  explicit Rational(Mpq value) : value_(std::move(value)) {}

  Mpq value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace kproper
