#include "xsecdb/rational.hpp"

#include <utility>

#include "xsecdb/error.hpp"

namespace xsecdb {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("rational denominator must not be zero");
  normalize();
}

Rational Rational::integer(BigInt value) { return Rational(std::move(value), 1); }

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

int Rational::compare(const Rational& other) const {
  // Both denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = num_ * other.den_;
  BigInt rhs = other.num_ * den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw Error("malformed rational '" + std::string(text) + "', expected NUM/DEN");
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error("malformed rational '" + std::string(text) + "'");
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace xsecdb
