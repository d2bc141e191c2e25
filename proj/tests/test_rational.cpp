#include "doctest.h"

#include "dsaudit/error.hpp"
#include "dsaudit/rational.hpp"

using dsaudit::Rational;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 8) == Rational(1, 4));
  CHECK(Rational(2, -8).to_string() == "-1/4");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 7) < Rational(1, 4));
}

TEST_CASE("parse accepts fractions, integers and exact decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("6/8").to_string() == "3/4");
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("9999/10000").to_string() == "9999/10000");
}

TEST_CASE("parse rejects everything else") {
  for (const char* bad : {"", "1/0", "a", "1e-3", "1/2/3", "0.", "nan", "1 /2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), dsaudit::Error);
  }
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), dsaudit::Error);
}
