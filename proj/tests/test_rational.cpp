#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ria/rational.hpp"

using ria::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  Rational r(360, 201);
  CHECK(r.numerator() == 120);
  CHECK(r.denominator() == 67);

  Rational neg(4, -6);
  CHECK(neg.numerator() == -2);
  CHECK(neg.denominator() == 3);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("structural equality sees through unreduced forms") {
  CHECK(Rational(360, 201) == Rational(120, 67));
  CHECK(Rational(3, 2) != Rational(2, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("arithmetic stays exact") {
  Rational a(1, 3), b(2, 5);
  CHECK(a + b == Rational(11, 15));
  CHECK(a - b == Rational(-1, 15));
  CHECK(a * b == Rational(2, 15));
  CHECK(a / b == Rational(5, 6));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);

  // denominators stay positive and coprime to numerators through a chain of ops
  Rational acc(0);
  for (int l = 2; l <= 40; ++l) acc += Rational(41 - l, l * l - 1);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), acc.numerator().get_mpz_t(), acc.denominator().get_mpz_t());
  CHECK(g == 1);
  CHECK(acc.denominator() > 0);
}

TEST_CASE("floor and ceil match integer bracketing") {
  CHECK(Rational(12, 5).floor() == 2);
  CHECK(Rational(12, 5).ceil() == 3);
  CHECK(Rational(2).floor() == 2);
  CHECK(Rational(2).ceil() == 2);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
}

TEST_CASE("ordering and rendering") {
  CHECK(Rational(3, 2) < Rational(8, 5));
  CHECK(Rational(64, 15) > Rational(108, 65));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
}
