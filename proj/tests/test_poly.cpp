#include <doctest.h>

#include <algorithm>

#include "g2cover/poly.hpp"
#include "g2cover/rng.hpp"

using namespace g2c;

namespace {

const Field kQ = Field::rationals();

Polynomial product_of_linear(const Field& k, const std::vector<long>& roots) {
  Polynomial f = Polynomial::constant(Fe::one(k));
  for (long r : roots) f = f * Polynomial::linear_root(Fe::of(k, r));
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Polynomial a = Polynomial::from_ints(kQ, {-1, 1});  // x - 1
  Polynomial b = Polynomial::from_ints(kQ, {1, 1});   // x + 1
  CHECK(a * b == Polynomial::from_ints(kQ, {-1, 0, 1}));

  DivMod qr = divmod(Polynomial::from_ints(kQ, {0, 0, 0, 1}), a);  // x^3 / (x - 1)
  CHECK(qr.quotient == Polynomial::from_ints(kQ, {1, 1, 1}));
  CHECK(qr.remainder == Polynomial::constant(Fe::one(kQ)));

  CHECK_THROWS_WITH_AS(divmod(a, Polynomial::zero(kQ)), doctest::Contains("DivisionByZero"),
                       Error);

  CHECK(Polynomial::zero(kQ).degree() == -1);
  CHECK((a - a).is_zero());
}

TEST_CASE("divmod invariant on random pairs") {
  Lcg64 rng(5);
  for (const Field& k : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 30; ++i) {
      std::vector<Fe> ac, bc;
      for (int j = 0; j <= static_cast<int>(rng.below(7)); ++j)
        ac.push_back(Fe::of(k, rng.range(-9, 9)));
      for (int j = 0; j <= static_cast<int>(rng.below(4)); ++j)
        bc.push_back(Fe::of(k, rng.range(-9, 9)));
      Polynomial a(k, ac), b(k, bc);
      if (b.is_zero()) continue;
      DivMod qr = divmod(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd examples") {
  Polynomial x2m1 = Polynomial::from_ints(kQ, {-1, 0, 1});
  Polynomial xm1 = Polynomial::from_ints(kQ, {-1, 1});
  CHECK(gcd(x2m1, xm1) == xm1);

  // (x-2)^2 (x+1) against (x-2)(x-3), by-hand Euclid gives x - 2
  Polynomial lhs = product_of_linear(kQ, {2, 2, -1});
  Polynomial rhs = product_of_linear(kQ, {2, 3});
  CHECK(gcd(lhs, rhs) == Polynomial::from_ints(kQ, {-2, 1}));

  Polynomial scaled = Fe::of(kQ, 7) * x2m1;
  CHECK(gcd(scaled, Polynomial::zero(kQ)) == x2m1);  // monic normalization
  CHECK_THROWS_WITH_AS(gcd(Polynomial::zero(kQ), Polynomial::zero(kQ)),
                       doctest::Contains("BothZero"), Error);
}

TEST_CASE("squarefreeness of polynomials") {
  CHECK(is_squarefree(Polynomial::from_ints(kQ, {-1, 0, 1})));
  CHECK_FALSE(is_squarefree(product_of_linear(kQ, {1, 1})));
  CHECK_THROWS_WITH_AS(is_squarefree(Polynomial::zero(kQ)), doctest::Contains("ZeroPolynomial"),
                       Error);
  CHECK(is_squarefree(Polynomial::constant(Fe::of(kQ, 4))));
}

TEST_CASE("squarefreeness in characteristic five, degree at least p") {
  Field f5 = Field::prime(5);
  // x^5 - x splits into all five linear factors, each simple
  Polynomial artin = Polynomial::from_ints(f5, {0, -1, 0, 0, 0, 1});
  CHECK(is_squarefree(artin));
  // x^5 - x + 1 is irreducible; times (x - 1) still squarefree at degree 6
  Polynomial irr = Polynomial::from_ints(f5, {1, -1, 0, 0, 0, 1});
  CHECK(is_squarefree(irr * Polynomial::from_ints(f5, {-1, 1})));
  CHECK_FALSE(is_squarefree(irr * product_of_linear(f5, {1, 1})));
  CHECK_FALSE(is_squarefree(artin * Polynomial::from_ints(f5, {-2, 1})));
  // degree 6 from linear factors over F_5 always repeats a root
  Lcg64 rng(55);
  for (int i = 0; i < 20; ++i) {
    std::vector<long> roots;
    for (int j = 0; j < 6; ++j) roots.push_back(rng.range(0, 4));
    CHECK_FALSE(is_squarefree(product_of_linear(f5, roots)));
  }
}

TEST_CASE("discriminant examples") {
  // x^2 + bx + c -> b^2 - 4c
  Lcg64 rng(17);
  for (int i = 0; i < 20; ++i) {
    Fe b = Fe::of(kQ, rng.range(-9, 9)), c = Fe::of(kQ, rng.range(-9, 9));
    Polynomial f(kQ, {c, b, Fe::one(kQ)});
    CHECK(discriminant(f) == b * b - Fe::of(kQ, 4) * c);
  }
  CHECK(discriminant(product_of_linear(kQ, {1, 1})).is_zero());

  // x^4 + 14x^3 - 72x^2 + 108x - 54: resultant oracle gives -11337408
  Polynomial quartic = Polynomial::from_ints(kQ, {-54, 108, -72, 14, 1});
  CHECK(discriminant(quartic) == Fe::of(kQ, -11337408));
  CHECK(!discriminant(quartic).is_zero());

  CHECK_THROWS_WITH_AS(discriminant(Polynomial::constant(Fe::one(kQ))),
                       doctest::Contains("ConstantPolynomial"), Error);
}

TEST_CASE("discriminant vanishes exactly on repeated factors") {
  Lcg64 rng(23);
  for (const Field& k : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 40; ++i) {
      std::vector<long> roots;
      for (int j = 0; j < 2 + static_cast<int>(rng.below(4)); ++j)
        roots.push_back(rng.range(-4, 4));
      Polynomial f = product_of_linear(k, roots);
      std::sort(roots.begin(), roots.end());
      bool repeated = false;
      if (k.is_prime()) {
        std::vector<long> reduced;
        for (long r : roots) reduced.push_back(((r % 101) + 101) % 101);
        std::sort(reduced.begin(), reduced.end());
        repeated = std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end();
      } else {
        repeated = std::adjacent_find(roots.begin(), roots.end()) != roots.end();
      }
      CHECK(discriminant(f).is_zero() == repeated);
      CHECK(is_squarefree(f) == !repeated);
      CHECK((gcd(f, derivative(f)).degree() == 0) == !repeated);
    }
  }
}

TEST_CASE("roots over prime fields by exhaustive scan") {
  Field f101 = Field::prime(101);
  auto roots = roots_in_field(Polynomial::from_ints(f101, {-1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == ProjPoint::affine(Fe::of(f101, 1)));
  CHECK(roots[1].first == ProjPoint::affine(Fe::of(f101, 100)));

  Field f11 = Field::prime(11);
  CHECK(roots_in_field(Polynomial::from_ints(f11, {1, 9, 5, 3, 1})).empty());

  // cross-check against an independent evaluation sweep
  Lcg64 rng(31);
  for (int i = 0; i < 10; ++i) {
    std::vector<Fe> c;
    for (int j = 0; j < 5; ++j) c.push_back(Fe::of(f11, rng.range(0, 10)));
    Polynomial f(f11, c);
    if (f.is_zero()) continue;
    int direct = 0;
    for (long r = 0; r < 11; ++r)
      if (f.eval(Fe::of(f11, r)).is_zero()) ++direct;
    auto found = roots_in_field(f);
    CHECK(static_cast<int>(found.size()) == direct);
    for (const auto& [pt, mult] : found) {
      CHECK(f.eval(pt.value()).is_zero());
      CHECK(mult >= 1);
    }
  }
}

TEST_CASE("rational roots with multiplicities") {
  auto roots = roots_in_field(Polynomial::from_ints(kQ, {0, -1, 0, 1}));  // x^3 - x
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first.value() == Fe::of(kQ, -1));
  CHECK(roots[1].first.value() == Fe::of(kQ, 0));
  CHECK(roots[2].first.value() == Fe::of(kQ, 1));

  // (2x - 3)^2 (x + 5), fractional root with multiplicity
  Polynomial f = Polynomial::from_ints(kQ, {-3, 2}) * Polynomial::from_ints(kQ, {-3, 2}) *
                 Polynomial::from_ints(kQ, {5, 1});
  auto mroots = roots_in_field(f);
  REQUIRE(mroots.size() == 2);
  CHECK(mroots[0].first.value() == Fe::of(kQ, -5));
  CHECK(mroots[0].second == 1);
  CHECK(mroots[1].first.value() == Fe::of_fraction(kQ, 3, 2));
  CHECK(mroots[1].second == 2);

  // irreducible quadratic has no rational roots
  CHECK(roots_in_field(Polynomial::from_ints(kQ, {1, 1, 1})).empty());
  CHECK_THROWS_AS(roots_in_field(Polynomial::zero(kQ)), Error);
}

TEST_CASE("rational-root coefficient bound") {
  mpz_class big = 1;
  big <<= 600;
  Polynomial f(kQ, {Fe::of(kQ, big), Fe::one(kQ)});
  CHECK_THROWS_WITH_AS(roots_in_field(f), doctest::Contains("UnsupportedForRationals"), Error);
}

TEST_CASE("binary forms and the root at infinity") {
  // degree-6 homogenization of a quintic: simple root at infinity
  Polynomial quintic = product_of_linear(kQ, {1, 2, 3, 4, 5});
  BinaryForm form6 = BinaryForm::homogenize(quintic, 6);
  CHECK(form6.infinity_multiplicity() == 1);
  CHECK(is_squarefree(form6));

  // declared degree 6 over a squarefree quartic: double root at infinity
  BinaryForm degenerate = BinaryForm::homogenize(product_of_linear(kQ, {1, 2, 3, 4}), 6);
  CHECK(degenerate.infinity_multiplicity() == 2);
  CHECK_FALSE(is_squarefree(degenerate));

  auto roots = roots_in_field(form6);
  REQUIRE(roots.size() == 6);
  CHECK(roots.back().first.is_infinity());
  CHECK(roots.back().second == 1);
  CHECK(split_roots(form6).residual_degree == 0);

  // the form value at (0 : 1) is the top coefficient
  CHECK(form6.eval(ProjPoint::infinity(kQ)).is_zero());
  CHECK(form6.eval(ProjPoint::affine(Fe::of(kQ, 1))).is_zero());
}

TEST_CASE("form gcd and exact division") {
  Polynomial a = product_of_linear(kQ, {1, 2});
  Polynomial b = product_of_linear(kQ, {2, 3});
  BinaryForm fa = BinaryForm::homogenize(a, 3);  // extra factor x0
  BinaryForm fb = BinaryForm::homogenize(b, 3);
  BinaryForm g = gcd(fa, fb);
  CHECK(g.degree() == 2);  // (x - 2) and the shared root at infinity
  CHECK(g.infinity_multiplicity() == 1);
  CHECK(g.chart_x0() == Polynomial::from_ints(kQ, {-2, 1}));

  BinaryForm q = exact_divide(fa, g);
  CHECK(q * g == fa);
}

TEST_CASE("residual degree counts unsplit factors") {
  // (x^2 + 1)(x - 2) over Q: one rational root, quadratic residual
  Polynomial f = Polynomial::from_ints(kQ, {1, 0, 1}) * Polynomial::from_ints(kQ, {-2, 1});
  RootSplit split = split_roots(f);
  REQUIRE(split.roots.size() == 1);
  CHECK(split.roots[0].first.value() == Fe::of(kQ, 2));
  CHECK(split.residual_degree == 2);
  CHECK(split.total_multiplicity() == 3);
}
