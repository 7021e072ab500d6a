#include <doctest.h>

#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/poly.hpp"

using namespace rompoly;

TEST_SUITE("poly") {

TEST_CASE("rational normalization keeps lowest terms, positive denominator") {
  const Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  const Rational s(3, -6);
  CHECK(s.num() == -1);
  CHECK(s.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse("3/"), DomainError);
}

TEST_CASE("rational arithmetic stays exact for large products") {
  Rational acc(1);
  for (int k = 1; k <= 30; ++k) acc *= Rational(k, k + 1);
  CHECK(acc == Rational(1, 31));
  CHECK(Rational(1, 3).pow(-2) == Rational(9));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("product and sum examples") {
  const RationalPoly one_plus_x({Rational(1), Rational(1)});
  const RationalPoly one_minus_x({Rational(1), Rational(-1)});
  CHECK(one_plus_x * one_minus_x ==
        RationalPoly({Rational(1), Rational(0), Rational(-1)}));

  const RationalPoly p({Rational(3), Rational(0), Rational(7)});
  CHECK(p + RationalPoly::zero() == p);

  const RationalPoly two_x({Rational(0), Rational(2)});
  CHECK(two_x * two_x == RationalPoly({Rational(0), Rational(0), Rational(4)}));
}

TEST_CASE("zero polynomial is canonical and has no degree") {
  const RationalPoly z = RationalPoly::zero();
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(RationalPoly({Rational(0), Rational(0)}) == z);
  const RationalPoly p({Rational(1), Rational(2)});
  CHECK((p - p) == z);
  CHECK(z.differentiate() == z);
  CHECK(z.eval(Rational(5)) == Rational(0));
}

TEST_CASE("differentiation examples") {
  CHECK(RationalPoly({Rational(0), Rational(0), Rational(4)}).differentiate() ==
        RationalPoly({Rational(0), Rational(8)}));
  CHECK(RationalPoly::constant(Rational(9)).differentiate().is_zero());
  // -12x + 8x^3 -> -12 + 24x^2
  CHECK(RationalPoly({Rational(0), Rational(-12), Rational(0), Rational(8)})
            .differentiate() ==
        RationalPoly({Rational(-12), Rational(0), Rational(24)}));
}

TEST_CASE("evaluation examples") {
  const RationalPoly h2({Rational(-2), Rational(0), Rational(4)});
  CHECK(h2.eval(Rational(1)) == Rational(2));
  const RationalPoly p({Rational(5), Rational(-3), Rational(7)});
  CHECK(p.eval(Rational(0)) == Rational(5));
  // Jacobi P_1^{(1,2)} = (-1+5x)/2 at x = 1
  const RationalPoly j1({Rational(-1, 2), Rational(5, 2)});
  CHECK(j1.eval(Rational(1)) == Rational(2));
  CHECK(eval_double(j1, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  const Complex c = eval_complex(j1, Complex(0.0, 1.0));
  CHECK(c.real() == doctest::Approx(-0.5));
  CHECK(c.imag() == doctest::Approx(2.5));
}

TEST_CASE("ring and calculus properties hold exactly") {
  CHECK(checks::ring_axioms(2024).passed);
  CHECK(checks::product_rule(2024).passed);
  CHECK(checks::eval_consistency(2024).passed);
}

}
