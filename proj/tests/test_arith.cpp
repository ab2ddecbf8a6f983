#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sympow/parse.hpp"

using namespace sympow;
using C = CycloElement;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(6, -4).numerator() == -3);
  CHECK(Rational(0, 7) == Rational::zero());
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational::zero().inverse(), DivisionByZero);
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("big integers do not overflow") {
  Rational r(1);
  for (int i = 0; i < 100; ++i) r *= Rational(1000000007);
  for (int i = 0; i < 100; ++i) r /= Rational(1000000007);
  CHECK(r.is_one());
}

TEST_CASE("cyclotomic addition") {
  CHECK(C(1) + C::omega() == C(1, 1));
  CHECK(C(1, 1) + C(-1, -1) == C::zero());
  CHECK(C::omega() + C::omega_squared() == C(-1));
}

TEST_CASE("cyclotomic multiplication") {
  const C w = C::omega();
  CHECK(w * w == C(-1, -1));
  CHECK(w * w * w == C::one());
  CHECK(C(1, 1) * C(1, 1) == w);
}

TEST_CASE("cyclotomic inverse") {
  CHECK(C::omega().inverse() == C(-1, -1));
  CHECK(C(2).inverse() == C(Rational(1, 2)));
  CHECK(C(1, 1).inverse() == C(0, -1));
  CHECK_THROWS_AS(C::zero().inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic norm and conjugation") {
  CHECK(C::omega().norm() == Rational(1));
  CHECK(C(1, 1).norm() == Rational(1));
  CHECK(C(2, 0).norm() == Rational(4));
  CHECK(C::omega().conjugate() == C::omega_squared());
}

TEST_CASE("scalar text round trip") {
  for (const C& x : {C(0), C(1), C(-1, -1), C::omega(), C(0, -1), C(Rational(0), Rational(2, 3)),
                     C(Rational(-5, 7), Rational(3))}) {
    CHECK(parse_scalar<C>(format_scalar(x)) == x);
  }
  CHECK(format_scalar(C(-1, -1)) == "-1-w");
  CHECK(format_scalar(C(Rational(0), Rational(2, 3))) == "2/3*w");
  CHECK(parse_scalar<C>("w^2") == C(-1, -1));
  CHECK(parse_scalar<C>("w^3") == C(1));
  CHECK_THROWS_AS(parse_scalar<Rational>("w"), ParseError);
}

TEST_CASE("rational field axioms on random inputs") {
  oracle::Random rnd(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = rnd.rational(1000), y = rnd.rational(1000), z = rnd.rational(1000);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Rational::zero());
    if (!x.is_zero()) CHECK(x * x.inverse() == Rational::one());
    const Rational s = x * y;
    CHECK(s.denominator() > 0);
    CHECK(gcd(s.numerator(), s.denominator()) == 1);
  }
}

TEST_CASE("cyclotomic field axioms on random inputs") {
  oracle::Random rnd(12);
  for (int i = 0; i < 1000; ++i) {
    const C x = rnd.cyclo(50), y = rnd.cyclo(50), z = rnd.cyclo(50);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == C::zero());
    CHECK(x * C::one() == x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == C::one());
      CHECK(!x.norm().is_zero());
    }
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
  }
}
