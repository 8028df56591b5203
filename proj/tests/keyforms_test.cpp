#include <doctest.h>

#include <random>

#include "pnc/enumerate.hpp"
#include "pnc/keyforms.hpp"

using namespace pnc;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly f;
  std::uniform_int_distribution<long long> coef(-4, 4), ex(-4, 6), ey(0, 5);
  int terms = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) f.add_term(ex(rng), ey(rng), Rational(coef(rng)));
  if (f.is_zero()) f = LaurentPoly::constant(Rational(1));
  return f;
}

}  // namespace

TEST_SUITE("keyforms") {

TEST_CASE("construction examples") {
  KeyFormSet kf = build_key_forms(KeySequence{2, 3, 1}, {Rational(1)});
  CHECK(kf.g.size() == 3);
  CHECK(kf.g[2] == LaurentPoly::y(2) - LaurentPoly::x(3));

  kf = build_key_forms(KeySequence{1, 1}, {});
  CHECK(kf.g.size() == 2);
  CHECK(kf.g[0] == LaurentPoly::x());
  CHECK(kf.g[1] == LaurentPoly::y());

  kf = build_key_forms(KeySequence{9, 12, 2, 1}, {Rational(1), Rational(1)});
  LaurentPoly g2 = LaurentPoly::y(3) - LaurentPoly::x(4);
  CHECK(kf.g[2] == g2);
  LaurentPoly g3 = g2.pow(3) - LaurentPoly::monomial(Rational(1), -2, 2);
  CHECK(kf.g[3] == g3);
  CHECK_FALSE(kf.g[3].is_polynomial());

  CHECK_THROWS_AS(build_key_forms(KeySequence{2, 3, 1}, {}), Error);
  CHECK_THROWS_AS(build_key_forms(KeySequence{2, 3, 7}, {Rational(1)}), Error);
  CHECK_THROWS_AS(build_key_forms(KeySequence{2, 3, 1}, {Rational(0)}), Error);
}

TEST_CASE("basis expansion examples") {
  KeyFormSet kf = build_key_forms(KeySequence{2, 3, 1}, {Rational(1)});

  // y^4 = g2^2 + 2 x^3 g2 + x^6, derived from ((y^2-x^3)+x^3)^2.
  BasisExpansion e = basis_expand(LaurentPoly::y(4), kf);
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms.at({0, 0, 2}) == 1);
  CHECK(e.terms.at({3, 0, 1}) == 2);
  CHECK(e.terms.at({6, 0, 0}) == 1);
  CHECK(evaluate_expansion(e, kf) == LaurentPoly::y(4));

  e = basis_expand(LaurentPoly::x(5), kf);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.at({5, 0, 0}) == 1);

  e = basis_expand(kf.g[2], kf);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.at({0, 0, 1}) == 1);

  CHECK_THROWS_AS(basis_expand(LaurentPoly::zero(), kf), Error);
}

TEST_CASE("expansion is a two-sided inverse and respects the basis bounds") {
  std::mt19937_64 rng(21);
  std::vector<KeyFormSet> sets;
  sets.push_back(build_key_forms(KeySequence{2, 3, 1}, {Rational(1)}));
  sets.push_back(build_key_forms(KeySequence{9, 12, 2, 1}, {Rational(1), Rational(1)}));
  sets.push_back(build_key_forms(KeySequence{4, 6, 3, 1}, {Rational(1), Rational(4)}));
  for (const KeyFormSet& kf : sets) {
    for (int t = 0; t < 40; ++t) {
      LaurentPoly f = random_poly(rng);
      BasisExpansion e = basis_expand(f, kf);
      CHECK(evaluate_expansion(e, kf) == f);
      for (const auto& [beta, c] : e.terms) {
        CHECK(c != 0);
        for (int j = 1; j <= kf.n(); ++j) {
          CHECK(beta[static_cast<size_t>(j)] >= 0);
          CHECK(beta[static_cast<size_t>(j)] < kf.ladder.alpha(j));
        }
        CHECK(beta.back() >= 0);
      }
    }
  }
}

TEST_CASE("semidegree examples") {
  KeyFormSet kf = build_key_forms(KeySequence{2, 3, 1}, {Rational(1)});
  CHECK(semidegree(LaurentPoly::y(4), kf) == 12);
  CHECK(semidegree(LaurentPoly::x(), kf) == 2);
  CHECK(semidegree(kf.g[2] + LaurentPoly::constant(Rational(1)), kf) == 1);
  CHECK_THROWS_AS(semidegree(LaurentPoly::zero(), kf), Error);
}

TEST_CASE("property P1: the key forms evaluate to their own weights") {
  std::vector<std::pair<KeySequence, ThetaVector>> instances = {
      {KeySequence{2, 3, 1}, {Rational(1)}},
      {KeySequence{9, 12, 2, 1}, {Rational(1), Rational(1)}},
      {KeySequence{4, 6, 3, 1}, {Rational(1), Rational(4)}},
      {KeySequence{8, 12, 14, 27}, {Rational(1), Rational(100)}},
      {KeySequence{2, 5, 1}, {Rational(1)}},
  };
  for (const auto& [w, th] : instances) {
    KeyFormSet kf = build_key_forms(w, th);
    GcdLadder lad = gcd_ladder(w);
    for (int j = 0; j <= w.n() + 1; ++j)
      CHECK(semidegree(kf.g[static_cast<size_t>(j)], kf) == w[j]);
    for (int j = 1; j <= w.n(); ++j)
      CHECK(w[j + 1] < lad.alpha(j) * w[j]);
  }
}

TEST_CASE("semidegree is a degree function") {
  std::mt19937_64 rng(33);
  KeyFormSet kf = build_key_forms(KeySequence{4, 6, 3, 1}, {Rational(1), Rational(4)});
  for (int t = 0; t < 60; ++t) {
    LaurentPoly f = random_poly(rng), g = random_poly(rng);
    long long df = semidegree(f, kf), dg = semidegree(g, kf);
    CHECK(semidegree(f * g, kf) == df + dg);
    LaurentPoly s = f + g;
    if (!s.is_zero()) CHECK(semidegree(s, kf) <= std::max(df, dg));
  }
}

TEST_CASE("polynomial semidegrees land in the weight semigroup") {
  std::mt19937_64 rng(41);
  KeyFormSet kf = build_key_forms(KeySequence{2, 3, 1}, {Rational(1)});
  for (int t = 0; t < 60; ++t) {
    LaurentPoly f = random_poly(rng);
    // restrict to honest polynomials
    LaurentPoly poly;
    for (const auto& [e, c] : f.terms())
      poly.add_term(std::llabs(e.ex), e.ey, c);
    if (poly.is_zero()) continue;
    long long d = semidegree(poly, kf);
    CHECK(semigroup_member({2, 3, 1}, d).member);
  }
}

TEST_CASE("derivative weight identity") {
  // delta(d g_{n+1} / dy) = sum (alpha_k - 1) omega_k
  std::vector<std::pair<KeySequence, ThetaVector>> instances = {
      {KeySequence{2, 3, 1}, {Rational(1)}},
      {KeySequence{9, 12, 2, 1}, {Rational(1), Rational(1)}},
      {KeySequence{4, 6, 3, 1}, {Rational(1), Rational(4)}},
      {KeySequence{1, 1}, {}},
      {KeySequence{2, 5}, {}},
  };
  for (const auto& [w, th] : instances) {
    KeyFormSet kf = build_key_forms(w, th);
    GcdLadder lad = gcd_ladder(w);
    long long expected = 0;
    for (int k = 1; k <= w.n(); ++k) expected += (lad.alpha(k) - 1) * w[k];
    LaurentPoly d = kf.g.back().dy();
    if (d.is_zero()) {
      CHECK(expected == 0);  // n = 0: g_{n+1} = y
      CHECK(w.n() == 0);
    } else {
      CHECK(semidegree(d, kf) == expected);
    }
  }
}

TEST_CASE("any representation bounds the semidegree from above") {
  // Property P3, one-sided: a random word G in the key forms evaluates to a
  // polynomial whose semidegree is at most the weight of G; the basis
  // expansion itself attains the minimum.
  std::mt19937_64 rng(57);
  KeyFormSet kf = build_key_forms(KeySequence{4, 6, 3, 1}, {Rational(1), Rational(4)});
  for (int t = 0; t < 40; ++t) {
    LaurentPoly value;
    long long weight = 0;
    bool first = true;
    int monos = 1 + static_cast<int>(rng() % 4);
    for (int m = 0; m < monos; ++m) {
      long long coef = static_cast<long long>(rng() % 9) - 4;
      if (coef == 0) coef = 1;
      LaurentPoly term = LaurentPoly::constant(Rational(coef));
      long long wterm = 0;
      long long e0 = static_cast<long long>(rng() % 7) - 3;
      term = term * LaurentPoly::x(e0);
      wterm += e0 * kf.omega[0];
      for (int j = 1; j <= kf.n() + 1; ++j) {
        long long e = static_cast<long long>(rng() % 3);
        term = term * kf.g[static_cast<size_t>(j)].pow(e);
        wterm += e * kf.omega[j];
      }
      value = value + term;
      weight = first ? wterm : std::max(weight, wterm);
      first = false;
    }
    if (value.is_zero()) continue;
    CHECK(semidegree(value, kf) <= weight);
  }
}

TEST_CASE("negative-weight instances stay exact") {
  KeyFormSet kf = build_key_forms(KeySequence{3, -2}, {});
  CHECK(semidegree(LaurentPoly::y(3), kf) == -6);
  CHECK(semidegree(LaurentPoly::x(2) + LaurentPoly::y(5), kf) == 6);
}

TEST_CASE("compactification classes") {
  CHECK(compactification_class(build_key_forms(KeySequence{2, 3, 1}, {Rational(1)})) ==
        CompactificationClass::algebraic);
  CHECK(compactification_class(build_key_forms(KeySequence{9, 12, 2, 1},
                                               {Rational(1), Rational(1)})) ==
        CompactificationClass::analytic_only);
  CHECK(compactification_class(build_key_forms(KeySequence{1, 0}, {})) ==
        CompactificationClass::none);
}

}  // TEST_SUITE
