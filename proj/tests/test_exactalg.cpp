#include <doctest.h>

#include <symprod/laurent.hpp>
#include <symprod/rational.hpp>
#include <symprod/series.hpp>

using namespace symprod;

TEST_SUITE_BEGIN("exactalg");

TEST_CASE("rationals are canonical and round-trip as strings") {
  CHECK(make_rational(6, 4) == make_rational(3, 2));
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(rational_from_string("3/2") == make_rational(3, 2));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_from_string("+5") == Rational(5));
  CHECK(rational_from_string("6/4") == make_rational(3, 2));

  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational powers and factorials") {
  CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rational_pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::invalid_argument);
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(6) == Rational(720));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("laurent arithmetic is exact and canonical") {
  LaurentY one(Rational(1));
  LaurentY y = LaurentY::y();
  CHECK((one + y) * (one - y) == one - LaurentY::y(2));
  CHECK((one + y) - (one + y) == LaurentY());
  CHECK(((one + y) - (one + y)).is_zero());
  CHECK((one + y).pow(3) ==
        one + Rational(3) * y + Rational(3) * LaurentY::y(2) + LaurentY::y(3));
  CHECK((one + y).pow(0) == one);
  CHECK(LaurentY::y(-1) * LaurentY::y(1) == one);
  CHECK((one + Rational(2) * y).evaluate(Rational(3)) == Rational(7));
  CHECK(LaurentY().evaluate(Rational(5)) == Rational(0));
}

TEST_CASE("laurent substitution y -> y^r") {
  LaurentY f = LaurentY::y(-1) + LaurentY::y(1);
  CHECK(laurent_substitute(f, 2) == LaurentY::y(-2) + LaurentY::y(2));
  CHECK(laurent_substitute(f, -1) == f);
  LaurentY g = LaurentY(Rational(1)) + LaurentY::y(1);
  CHECK(laurent_substitute(g, 3) == LaurentY(Rational(1)) + LaurentY::y(3));
  CHECK(laurent_substitute(g, 1) == g);
  CHECK_THROWS_AS(laurent_substitute(g, 0), std::invalid_argument);
}

TEST_CASE("laurent rendering matches the parser grammar") {
  CHECK(LaurentY().str() == "0");
  CHECK((LaurentY(Rational(1)) + LaurentY::y()).str() == "1+y");
  CHECK((LaurentY::y(-1) + Rational(2) * LaurentY::y(3)).str() == "y^-1+2y^3");
  CHECK((Rational(-1) * LaurentY::y()).str() == "-y");
  CHECK(LaurentY(make_rational(3, 2), 2).str() == "3/2y^2");
}

TEST_CASE("laurent parser accepts the documented grammar") {
  CHECK(laurent_from_string("1+y") == LaurentY(Rational(1)) + LaurentY::y());
  CHECK(laurent_from_string("y^-1+2y^3") == LaurentY::y(-1) + Rational(2) * LaurentY::y(3));
  CHECK(laurent_from_string("3/2y^2") == LaurentY(make_rational(3, 2), 2));
  CHECK(laurent_from_string("2*y") == Rational(2) * LaurentY::y());
  CHECK(laurent_from_string(" 1 - y ") == LaurentY(Rational(1)) - LaurentY::y());
  CHECK(laurent_from_string("-y") == Rational(-1) * LaurentY::y());
  CHECK(laurent_from_string("y+y") == Rational(2) * LaurentY::y());
  CHECK(laurent_from_string("y-y") == LaurentY());
  CHECK(laurent_from_string("0") == LaurentY());

  CHECK_THROWS_AS(laurent_from_string("1+q"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_string("y^"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_string("^2"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_string("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_string(""), std::invalid_argument);
}

TEST_CASE("round trip between rendering and parsing") {
  LaurentY samples[] = {
      LaurentY(), LaurentY(Rational(1)) + LaurentY::y(),
      LaurentY::y(-2) - Rational(3) * LaurentY::y(5) + LaurentY(make_rational(1, 2))};
  for (const auto& f : samples) CHECK(laurent_from_string(f.str()) == f);
}

TEST_CASE("series exp and log are mutually inverse") {
  TruncSeries<Rational> g(8);
  g.set_coeff(1, Rational(2));
  g.set_coeff(3, make_rational(-1, 3));
  g.set_coeff(7, Rational(5));
  CHECK(series_log(series_exp(g)) == g);

  TruncSeries<LaurentY> f(6);
  f.set_coeff(0, LaurentY(Rational(1)));
  f.set_coeff(1, LaurentY(Rational(1)) + LaurentY::y());
  f.set_coeff(4, LaurentY::y(-1));
  CHECK(series_exp(series_log(f)) == f);
}

TEST_CASE("series exp matches the binomial expansion of (1-t)^-2") {
  // exp(sum_r 2 t^r / r) = (1 - t)^{-2}, whose t^n coefficient is n + 1.
  TruncSeries<Rational> f(7);
  for (int r = 1; r <= 7; ++r) f.set_coeff(r, Rational(2) / Rational(r));
  auto s = series_exp(f);
  for (int n = 0; n <= 7; ++n) CHECK(s.coeff(n) == Rational(n + 1));
}

TEST_CASE("series preconditions are enforced") {
  TruncSeries<Rational> f(3);
  f.set_coeff(0, Rational(1));
  CHECK_THROWS_AS(series_exp(f), std::invalid_argument);
  TruncSeries<Rational> g(3);
  CHECK_THROWS_AS(series_log(g), std::invalid_argument);
  TruncSeries<Rational> a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a.coeff(4), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries<Rational>(-1), std::invalid_argument);
}

TEST_CASE("series truncation keeps the leading coefficients") {
  TruncSeries<Rational> f(5);
  for (int k = 0; k <= 5; ++k) f.set_coeff(k, Rational(k));
  auto g = f.truncated(3);
  CHECK(g.order() == 3);
  for (int k = 0; k <= 3; ++k) CHECK(g.coeff(k) == Rational(k));
}

TEST_SUITE_END();
