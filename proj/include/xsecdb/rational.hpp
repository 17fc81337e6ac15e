#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace xsecdb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number backed by arbitrary-precision integers.
/// Invariants: the denominator is strictly positive and the value is kept
/// in lowest terms (gcd(|num|, den) = 1, with gcd(0, d) = d).
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den);

  static Rational integer(BigInt value);
  static Rational parse(std::string_view text);  // "NUM/DEN"

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  /// Cross-multiplication order: -1, 0 or +1.
  int compare(const Rational& other) const;

  std::string str() const;  // "num/den"

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace xsecdb
