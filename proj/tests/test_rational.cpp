#include <doctest.h>

#include "xsecdb/error.hpp"
#include "xsecdb/rational.hpp"

#include "support/generators.hpp"

using xsecdb::BigInt;
using xsecdb::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to lowest terms with a positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 5).num() == 0);
  CHECK(Rational(0, 5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), xsecdb::Error);
}

TEST_CASE("comparison is the rational order") {
  CHECK(Rational(1, 1).compare(Rational(2, 1)) < 0);
  CHECK(Rational(3, 2).compare(Rational(3, 2)) == 0);
  CHECK(Rational(7, 3).compare(Rational(8, 3)) < 0);
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK(Rational(5, 2) > Rational(7, 3));
}

TEST_CASE("text round trip") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-5, 2).str() == "-5/2");
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-5/2") == Rational(-5, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));  // parse normalizes too
  CHECK_THROWS_AS(Rational::parse("3"), xsecdb::Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), xsecdb::Error);
  CHECK_THROWS_AS(Rational::parse("1/"), xsecdb::Error);
}

TEST_CASE("arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0, 1));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2, 1));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0, 1), xsecdb::Error);

  testsupport::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a(rng.below(41) - 20, 1 + rng.below(12));
    Rational b(rng.below(41) - 20, 1 + rng.below(12));
    CHECK((a + b) - b == a);
    CHECK(boost::multiprecision::gcd(
              (a + b).num() < 0 ? BigInt(-(a + b).num()) : (a + b).num(),
              (a + b).den()) <= 1);
  }
}

TEST_CASE("repeated midpoints stay exact at large denominators") {
  Rational low(1, 1), high(2, 1);
  Rational two(2, 1);
  for (int i = 0; i < 200; ++i) {
    Rational mid = (low + high) / two;
    CHECK(low < mid);
    CHECK(mid < high);
    high = mid;
  }
  // denominator is now 2^200
  CHECK(high.den() == boost::multiprecision::pow(BigInt(2), 200));
}

}  // TEST_SUITE
