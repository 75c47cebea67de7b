#include "kproper/rational.hpp"

#include <cctype>
#include <ostream>

#include "kproper/errors.hpp"

namespace kproper {

namespace {

// Digits with no leading zero (except "0" itself).
bool canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return s.size() == 1 || s.front() != '0';
}

bool plain_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) throw DomainError("zero denominator");
  value_ = Mpq(numerator);
  value_ /= Mpq(denominator);
}

Rational Rational::parse(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  std::string_view body = text;
  bool negative = false;
  bool plus = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    plus = body.front() == '+';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!plain_digits(num) || (slash != std::string_view::npos && !plain_digits(den)))
    throw ParseError("malformed rational " + quoted + " (expected \"p\" or \"p/q\")");

  BigInt n{std::string(num)};
  BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
  if (d.is_zero()) throw ParseError("zero denominator in " + quoted);
  if (negative) n = -n;
  Rational value(n, d);

  const std::string canonical = value.str();
  const bool ok = !plus && canonical_digits(num) &&
                  (slash == std::string_view::npos || canonical_digits(den)) && canonical == text;
  if (!ok)
    throw ParseError("non-canonical rational " + quoted + " (write \"" + canonical + "\")");
  return value;
}

BigInt Rational::numerator() const {
  return BigInt(boost::multiprecision::numerator(value_));
}

BigInt Rational::denominator() const {
  return BigInt(boost::multiprecision::denominator(value_));
}

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::abs() const { return value_.sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(Mpq(1) / value_);
}

std::string Rational::str() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double Rational::approx() const { return value_.convert_to<double>(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(Rational::Mpq(-x.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace kproper
