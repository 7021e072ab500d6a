#include <doctest.h>

#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/masterformula.hpp"
#include "rompoly/rodrigues.hpp"

using namespace rompoly;

TEST_SUITE("masterformula") {

TEST_CASE("terminating 2F1 examples") {
  CHECK(gauss2f1_terminating(0, Complex(2.5, 1.0), Complex(3.0), Complex(0.7)) ==
        Complex(1.0));
  const Complex B(1.5, -0.5), C(2.0, 0.0), z(0.3, 0.1);
  const Complex two_term = gauss2f1_terminating(-1, B, C, z);
  const Complex want = 1.0 - B * z / C;
  CHECK(std::abs(two_term - want) < 1e-15);
  // 2F1(-2, 1; 1; 1) = 1 - 2 + 1 = 0
  CHECK(std::abs(gauss2f1_terminating(-2, Complex(1.0), Complex(1.0),
                                      Complex(1.0))) < 1e-15);
}

TEST_CASE("2F1 pole detection inside the truncated range") {
  CHECK_THROWS_AS(
      gauss2f1_terminating(-3, Complex(1.0), Complex(-1.0), Complex(0.5)),
      PoleInCError);
  // C = -5 is beyond the 3-term range, so no pole is hit
  CHECK_NOTHROW(
      gauss2f1_terminating(-2, Complex(1.0), Complex(-5.0), Complex(0.5)));
  CHECK_THROWS_AS(
      gauss2f1_terminating(1, Complex(1.0), Complex(2.0), Complex(0.5)),
      DomainError);
}

TEST_CASE("monic master examples") {
  // Romanovski canonical, p = 7/2, q = -4, n = 1: monic of -4 - 5x is x + 4/5
  const HyperParams rom = canonicalize(WeightSpec::romanovski(Rational(7, 2),
                                                              Rational(-4)));
  const MonicCoeffs m1 = monic_master(rom, 1);
  REQUIRE(m1.coeffs.size() == 2);
  CHECK(m1.coeffs[1] == doctest::Approx(1.0));
  CHECK(m1.coeffs[0] == doctest::Approx(0.8).epsilon(1e-12));

  const MonicCoeffs m0 = monic_master(rom, 0);
  REQUIRE(m0.coeffs.size() == 1);
  CHECK(m0.coeffs[0] == doctest::Approx(1.0));

  // Jacobi (1,2), n = 1: monic of (-1+5x)/2 is x - 1/5
  const HyperParams jac = canonicalize(WeightSpec::jacobi(Rational(1), Rational(2)));
  const MonicCoeffs j1 = monic_master(jac, 1);
  CHECK(j1.coeffs[0] == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("double-root (Bessel) branch") {
  const HyperParams bes = canonicalize(WeightSpec::bessel_tau(Rational(2), Rational(2)));
  for (unsigned n = 0; n <= 6; ++n) {
    const RationalPoly raw = rodrigues_raw(bes, n);
    const Rational lead = raw.leading();
    const MonicCoeffs mc = monic_master(bes, n);
    for (unsigned k = 0; k <= n; ++k)
      CHECK(mc.coeffs[k] ==
            doctest::Approx((raw.coeff(k) / lead).to_double()).epsilon(1e-12));
  }
}

TEST_CASE("a = 0 families are rejected") {
  CHECK_THROWS_AS(monic_master(canonicalize(WeightSpec::hermite(Rational(1))), 2),
                  DomainError);
}

TEST_CASE("degenerate eigenvalue collisions are reported") {
  const HyperParams rom =
      canonicalize(WeightSpec::romanovski(Rational(3, 2), Rational(-1)));
  CHECK_THROWS_AS(monic_master(rom, 2), ZeroLeadingTermError);
}

TEST_CASE("monic output really is monic") {
  // Romanovski p = 11/2 keeps all lambda_n distinct through n = 5
  for (const auto& ws :
       {WeightSpec::jacobi(Rational(1), Rational(2)),
        WeightSpec::romanovski(Rational(11, 2), Rational(-2)),
        WeightSpec::bessel_tau(Rational(2), Rational(2))}) {
    for (unsigned n = 0; n <= 5; ++n) {
      const MonicCoeffs mc = monic_master(canonicalize(ws), n);
      CHECK(mc.coeffs.back() == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("oracle equivalence and realness") {
  CHECK(checks::master_oracle().passed);
  CHECK(checks::master_realness().passed);
}

TEST_CASE("complex Jacobi identity") {
  const auto r = checks::complex_jacobi_identity();
  INFO(r.detail, " measured=", r.measured);
  CHECK(r.passed);
}

}
