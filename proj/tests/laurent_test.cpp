#include <doctest.h>

#include <random>

#include "pnc/laurent.hpp"

using namespace pnc;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  LaurentPoly f;
  std::uniform_int_distribution<long long> coef(-4, 4), ex(-3, 3), ey(0, 3);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) f.add_term(ex(rng), ey(rng), Rational(coef(rng)));
  return f;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("ring operations") {
  LaurentPoly y = LaurentPoly::y();
  CHECK(y * y == LaurentPoly::y(2));

  LaurentPoly g = LaurentPoly::y(2) - LaurentPoly::x(3);
  CHECK(g + LaurentPoly::x(3) == LaurentPoly::y(2));

  LaurentPoly d = LaurentPoly::y() - LaurentPoly::x();
  LaurentPoly sq = d.pow(2);
  LaurentPoly expect = LaurentPoly::y(2) + LaurentPoly::x(2) -
                       LaurentPoly::monomial(Rational(2), 1, 1);
  CHECK(sq == expect);

  CHECK_THROWS_AS(d.pow(-1), Error);
  CHECK_THROWS_AS(LaurentPoly::monomial(Rational(1), 0, -1), Error);
}

TEST_CASE("degrees and polynomial test") {
  PolyDegrees d = (LaurentPoly::y(2) - LaurentPoly::x(3)).degrees();
  CHECK(d.deg_y == 2);
  CHECK(d.max_ex == 3);
  CHECK(d.min_ex == 0);

  d = LaurentPoly::monomial(Rational(1), -2, 2).degrees();
  CHECK(d.deg_y == 2);
  CHECK(d.max_ex == -2);
  CHECK(d.min_ex == -2);

  d = LaurentPoly::constant(Rational(5)).degrees();
  CHECK(d.deg_y == 0);
  CHECK(d.max_ex == 0);
  CHECK(d.min_ex == 0);

  CHECK_THROWS_AS(LaurentPoly::zero().degrees(), Error);

  CHECK((LaurentPoly::y(2) - LaurentPoly::x(3)).is_polynomial());
  CHECK_FALSE(LaurentPoly::monomial(Rational(1), -2, 2).is_polynomial());
  CHECK(LaurentPoly::zero().is_polynomial());
}

TEST_CASE("formal y-derivative") {
  LaurentPoly f = LaurentPoly::y(3) + LaurentPoly::monomial(Rational(2), -1, 1) +
                  LaurentPoly::x(4);
  LaurentPoly df = f.dy();
  CHECK(df == LaurentPoly::monomial(Rational(3), 0, 2) +
                  LaurentPoly::monomial(Rational(2), -1, 0));
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly::zero());
  }
}

TEST_CASE("multiplication adds y-degrees") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).degrees().deg_y == a.degrees().deg_y + b.degrees().deg_y);
  }
}

TEST_CASE("monic division in y round-trips") {
  std::mt19937_64 rng(9);
  LaurentPoly g = LaurentPoly::y(2) - LaurentPoly::x(3);  // monic in y
  for (int t = 0; t < 50; ++t) {
    LaurentPoly f = random_poly(rng, 6);
    if (f.is_zero()) continue;
    LaurentDivRem dr = divide_by_y_monic(f, g);
    CHECK(dr.quot * g + dr.rem == f);
    if (!dr.rem.is_zero()) CHECK(dr.rem.degrees().deg_y < 2);
  }
}

}  // TEST_SUITE
