#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/masterformula.hpp"
#include "rompoly/rodrigues.hpp"

using namespace rompoly;

TEST_SUITE("rodrigues") {

TEST_CASE("recurrence oracles agree with the Rodrigues engine coefficient-exactly") {
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(family_poly(FamilySpec::hermite(), n) == oracle::hermite(n));
    CHECK(family_poly(FamilySpec::laguerre(Rational(1)), n) ==
          oracle::laguerre(Rational(1), n));
    CHECK(family_poly(FamilySpec::laguerre(Rational(5, 2)), n) ==
          oracle::laguerre(Rational(5, 2), n));
    CHECK(family_poly(FamilySpec::jacobi(Rational(1), Rational(2)), n) ==
          oracle::jacobi(Rational(1), Rational(2), n));
    CHECK(family_poly(FamilySpec::legendre(), n) == oracle::legendre(n));
    CHECK(family_poly(FamilySpec::chebyshev1(), n) == oracle::chebyshev(false, n));
    CHECK(family_poly(FamilySpec::chebyshev2(), n) == oracle::chebyshev(true, n));
    CHECK(family_poly(FamilySpec::gegenbauer(Rational(1)), n) ==
          oracle::gegenbauer(Rational(1), n));
    CHECK(family_poly(FamilySpec::gegenbauer(Rational(3, 2)), n) ==
          oracle::gegenbauer(Rational(3, 2), n));
    CHECK(family_poly(FamilySpec::bessel(Rational(2), Rational(2)), n) ==
          oracle::bessel(n));
  }
}

TEST_CASE("table rows with known misprints resolve to the recurrence values") {
  // H_4 = 12 - 48x^2 + 16x^4
  CHECK(family_poly(FamilySpec::hermite(), 4) ==
        RationalPoly({Rational(12), Rational(0), Rational(-48), Rational(0),
                      Rational(16)}));
  // T_4 and U_4 have constant +1
  CHECK(family_poly(FamilySpec::chebyshev1(), 4).coeff(0) == Rational(1));
  CHECK(family_poly(FamilySpec::chebyshev2(), 4).coeff(0) == Rational(1));
  // P_3 = (5x^3 - 3x)/2 and P_4 = (35x^4 - 30x^2 + 3)/8
  CHECK(family_poly(FamilySpec::legendre(), 3) ==
        RationalPoly({Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)}));
  CHECK(family_poly(FamilySpec::legendre(), 4) ==
        RationalPoly({Rational(3, 8), Rational(0), Rational(-30, 8), Rational(0),
                      Rational(35, 8)}));
}

TEST_CASE("printed-table and Scarf II low-order checks pass") {
  CHECK(checks::printed_tables().passed);
  CHECK(checks::scarf2_low_order(7).passed);
}

TEST_CASE("specialized families") {
  CHECK(specialized(SpecialKind::Legendre, 2) ==
        RationalPoly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
  CHECK(specialized(SpecialKind::ChebyshevI, 3) ==
        RationalPoly({Rational(0), Rational(-3), Rational(0), Rational(4)}));
  CHECK(specialized(SpecialKind::Gegenbauer, Rational(1), 2) ==
        RationalPoly({Rational(-1), Rational(0), Rational(4)}));
}

TEST_CASE("romanovski toy table, recomputed exactly") {
  // (beta, alpha) = (-1, 1), i.e. (p, q) = (3/2, -1)
  const WeightSpec ws = WeightSpec::romanovski_beta_alpha(Rational(-1), Rational(1));
  CHECK(rodrigues_raw(ws, 0) == RationalPoly::constant(Rational(1)));
  // R_1 = (1-2a)x - 2b with a = 1, b = 1/2: -x - 1
  CHECK(rodrigues_raw(ws, 1) == RationalPoly({Rational(-1), Rational(-1)}));
  // 2p - 1 = 2 collides lambda_2 with lambda_0: the degree drops and the
  // diagnostic reports it
  const auto full2 = rodrigues_full(canonicalize(ws), 2);
  CHECK(full2.degree_deficient);
  CHECK(full2.poly == RationalPoly::constant(Rational(2)));
  CHECK_THROWS_AS(monic_master(canonicalize(ws), 2), ZeroLeadingTermError);
  // n = 3 and 4 are non-degenerate again
  const auto full3 = rodrigues_full(canonicalize(ws), 3);
  CHECK(!full3.degree_deficient);
  CHECK(*full3.poly.degree() == 3);
  // each row satisfies its ODE identically
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(romanovski_ode_residual(Rational(3, 2), Rational(-1), n).is_zero());
}

TEST_CASE("romanovski ODE residual examples") {
  CHECK(romanovski_ode_residual(Rational(7, 2), Rational(-4), 2).is_zero());
  CHECK(romanovski_ode_residual(Rational(3, 2), Rational(-1), 1).is_zero());
  CHECK(romanovski_ode_residual(Rational(5), Rational(2), 3).is_zero());
}

TEST_CASE("rodrigues_raw basics") {
  const WeightSpec rom = WeightSpec::romanovski(Rational(7, 2), Rational(-4));
  CHECK(rodrigues_raw(rom, 0) == RationalPoly::constant(Rational(1)));
  // p = a + 1/2, q = -2b with a = 3, b = 2: R_1 = -2b + (1-2a)x = -4 - 5x
  CHECK(rodrigues_raw(rom, 1) == RationalPoly({Rational(-4), Rational(-5)}));
}

TEST_CASE("every family normalizer is 1 at n = 0") {
  const std::vector<FamilySpec> fams = {
      FamilySpec::hermite(),
      FamilySpec::laguerre(Rational(1)),
      FamilySpec::jacobi(Rational(1), Rational(2)),
      FamilySpec::bessel(Rational(2), Rational(2)),
      FamilySpec::romanovski(Rational(7, 2), Rational(-4)),
      FamilySpec::legendre(),
      FamilySpec::chebyshev1(),
      FamilySpec::chebyshev2(),
      FamilySpec::gegenbauer(Rational(3, 2))};
  for (const auto& fs : fams) CHECK(fs.normalizer(0) == Rational(1));
}

TEST_CASE("weighted form differentiation rule") {
  // (k, P) -> (k-1, sigma P' + (k sigma' + L) P), checked on one explicit step
  const HyperParams hp = canonicalize(WeightSpec::romanovski(Rational(2), Rational(1)));
  const WeightedForm start{hp, Rational(3), RationalPoly({Rational(1), Rational(2)})};
  const WeightedForm next = start.differentiate();
  CHECK(next.sigma_exponent == Rational(2));
  const RationalPoly sigma = hp.sigma();
  const RationalPoly L = hp.log_derivative_numerator();
  const RationalPoly want =
      sigma * start.poly.differentiate() +
      (RationalPoly::constant(Rational(3)) * sigma.differentiate() + L) * start.poly;
  CHECK(next.poly == want);
}

TEST_CASE("associated Legendre functions") {
  CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0));
  CHECK(assoc_legendre(2, 1, 0.0) == doctest::Approx(0.0));
  for (const double x : {-0.9, -0.3, 0.2, 0.8}) {
    // m = 0 reduces to Legendre
    CHECK(assoc_legendre(3, 0, x) ==
          doctest::Approx(eval_double(specialized(SpecialKind::Legendre, 3), x)));
    // against the standard library (no Condon-Shortley phase there)
    for (unsigned l = 0; l <= 5; ++l)
      for (unsigned m = 0; m <= l; ++m) {
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        CHECK(assoc_legendre(l, static_cast<int>(m), x) ==
              doctest::Approx(sign * std::assoc_legendre(l, m, x)).epsilon(1e-12));
      }
    // negative order via the factorial ratio
    CHECK(assoc_legendre(3, -2, x) ==
          doctest::Approx(Rational(factorial(1), factorial(5)).to_double() *
                          assoc_legendre(3, 2, x)));
  }
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), DomainError);
  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.5), DomainError);
}

TEST_CASE("float path reproduces the exact path") {
  for (unsigned n = 0; n <= 6; ++n) {
    const DoublePoly exact =
        to_double_poly(family_poly(FamilySpec::jacobi(Rational(1), Rational(2)), n));
    const DoublePoly fl = jacobi_poly_d(1.0, 2.0, n);
    REQUIRE(exact.coeffs().size() == fl.coeffs().size());
    for (std::size_t k = 0; k < fl.coeffs().size(); ++k)
      CHECK(fl.coeffs()[k] ==
            doctest::Approx(exact.coeffs()[k]).epsilon(1e-12));
  }
  const DoublePoly rexact = to_double_poly(
      rodrigues_raw(WeightSpec::romanovski(Rational(7, 2), Rational(-4)), 5));
  const DoublePoly rfl = romanovski_poly_d(3.5, -4.0, 5);
  REQUIRE(rexact.coeffs().size() == rfl.coeffs().size());
  for (std::size_t k = 0; k < rfl.coeffs().size(); ++k)
    CHECK(rfl.coeffs()[k] ==
          doctest::Approx(rexact.coeffs()[k]).epsilon(1e-11));
}

TEST_CASE("property suites: ODE, degree, parity") {
  CHECK(checks::romanovski_ode(31).passed);
  CHECK(checks::family_ode_exact(31).passed);
  CHECK(checks::rodrigues_degree(31).passed);
  CHECK(checks::family_parity(31).passed);
}

}
