#include <doctest.h>

#include <cmath>
#include <random>

#include "ballgeo/errors.hpp"
#include "ballgeo/exact.hpp"

using ballgeo::Exact;

TEST_SUITE("exact") {
  TEST_CASE("parse forms") {
    CHECK(Exact::parse("3/2") == Exact::ratio(3, 2));
    CHECK(Exact::parse("-0.25") == Exact::ratio(-1, 4));
    CHECK(Exact::parse("0.0625") == Exact::ratio(1, 16));
    CHECK(Exact::parse("10.5") == Exact::ratio(21, 2));
    CHECK(Exact::parse("sqrt2") == Exact::sqrt2());
    CHECK(Exact::parse("sqrt2/2") == Exact::sqrt2().half());
    CHECK(Exact::parse("1+3*sqrt2") == Exact(1) + Exact(3) * Exact::sqrt2());
    CHECK_THROWS_AS(Exact::parse("abc"), ballgeo::ParseError);
    CHECK_THROWS_AS(Exact::parse(""), ballgeo::ParseError);
  }

  TEST_CASE("sqrt2 squared is 2") { CHECK(Exact::sqrt2() * Exact::sqrt2() == Exact(2)); }

  TEST_CASE("sign of a + b sqrt2 near cancellation") {
    // 99/70 and 140/99 are continued-fraction convergents of sqrt 2 on either side
    CHECK((Exact::sqrt2() - Exact::ratio(99, 70)).sign() < 0);
    CHECK((Exact::sqrt2() - Exact::ratio(140, 99)).sign() > 0);
    CHECK((Exact(3) - Exact(2) * Exact::sqrt2()).sign() > 0);  // 3 > 2.828
    CHECK((Exact(-3) + Exact(2) * Exact::sqrt2()).sign() < 0);
    CHECK(Exact(0).sign() == 0);
  }

  TEST_CASE("ordering agrees with long double on random elements") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 2000; ++i) {
      Exact a(mpq_class(coef(rng), 7), mpq_class(coef(rng), 5));
      Exact b(mpq_class(coef(rng), 3), mpq_class(coef(rng), 11));
      long double da = a.rational_part().get_d() + a.sqrt2_part().get_d() * std::sqrt(2.0L);
      long double db = b.rational_part().get_d() + b.sqrt2_part().get_d() * std::sqrt(2.0L);
      if (std::fabs(static_cast<double>(da - db)) < 1e-12) continue;
      CHECK((a < b) == (da < db));
    }
  }

  TEST_CASE("field identities") {
    Exact a(mpq_class(3, 4), mpq_class(-2, 3));
    Exact b(mpq_class(-5, 2), mpq_class(1, 7));
    CHECK(a + b - b == a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(abs(-a) == abs(a));
    CHECK(min(a, b) <= max(a, b));
    CHECK(a.half() + a.half() == a);
  }

  TEST_CASE("to_double and str") {
    CHECK(Exact::sqrt2().to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(Exact::ratio(1, 2).str() == "1/2");
    CHECK(Exact::parse(Exact(mpq_class(3, 4), mpq_class(-2, 3)).str()) == Exact(mpq_class(3, 4), mpq_class(-2, 3)));
  }
}
