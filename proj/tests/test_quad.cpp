#include <doctest.h>

#include <cmath>

#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/quad.hpp"

using namespace rompoly;

namespace {
const double kPi = 4.0 * std::atan(1.0);
}

TEST_SUITE("quad") {

TEST_CASE("integration self-tests") {
  const auto gauss = integrate([](double x) { return std::exp(-x * x); },
                               Interval::real_line(), 1e-13);
  CHECK(gauss.converged);
  CHECK(gauss.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));

  const auto odd = integrate([](double x) { return x; },
                             Interval::finite(-1.0, 1.0), 1e-13);
  CHECK(std::abs(odd.value) < 1e-14);

  const auto cauchy = integrate([](double x) { return 1.0 / (1.0 + x * x); },
                                Interval::real_line(), 1e-13);
  CHECK(cauchy.value == doctest::Approx(kPi).epsilon(1e-12));

  // endpoint singularity: int_0^1 x^{-1/2} dx = 2
  const auto root = integrate([](double x) { return 1.0 / std::sqrt(x); },
                              Interval::finite(0.0, 1.0), 1e-13);
  CHECK(root.value == doctest::Approx(2.0).epsilon(1e-12));

  // half line: int_0^inf x e^{-x} dx = 1
  const auto halfline = integrate([](double x) { return x * std::exp(-x); },
                                  Interval::half_line(0.0), 1e-13);
  CHECK(halfline.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("non-finite interior samples are reported") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; },
                            Interval::finite(-1.0, 1.0), 1e-10),
                  NonFiniteSampleError);
}

TEST_CASE("decay exponent estimation") {
  const double alg = estimate_decay_exponent(
      [](double x) { return 1.0 / (1.0 + x * x); });
  CHECK(alg == doctest::Approx(-2.0).epsilon(1e-2));
  const double exp_decay =
      estimate_decay_exponent([](double x) { return std::exp(-x * x); });
  CHECK(exp_decay < -100.0);
  const double marginal =
      estimate_decay_exponent([](double x) { return x / (1.0 + x * x); });
  CHECK(marginal == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("gamma function") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-12));
  CHECK(checks::gamma_accuracy().passed);
}

TEST_CASE("hermite gram off-diagonals vanish") {
  const GramReport rep = gram_matrix(FamilySpec::hermite(), 4, 1e-10);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = n + 1; m <= 4; ++m)
      CHECK(rep.off_diagonal_rel(n, m) < 1e-10);
  // diagonals are the classical norms 2^n n! sqrt(pi)
  double want = std::sqrt(kPi);
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(rep.matrix[n][n].value == doctest::Approx(want).epsilon(1e-11));
    want *= 2.0 * (n + 1.0);
  }
}

TEST_CASE("romanovski finite orthogonality boundary") {
  // p = 7/2: pairs with n+m < 6 are admissible; (1,2) is and is orthogonal
  // (its q = 0 integrand is odd, so symmetry forces the same conclusion)
  const GramReport rep =
      gram_matrix(FamilySpec::romanovski(Rational(7, 2), Rational(0)), 4, 1e-8);
  CHECK(rep.admissible[1][2]);
  CHECK(rep.matrix[1][2].converged);
  CHECK(std::abs(rep.matrix[1][2].value) < 1e-9);
  // (3,3) sits on the n+m = 2p-1 shell with full degrees: log-divergent
  CHECK(!rep.admissible[3][3]);
  CHECK(!rep.matrix[3][3].converged);

  // p = 3/2: (1,1) is inadmissible (2 >= 2) and diverges like 1/x.
  // (2,2) is inadmissible too, but lambda_2 = lambda_0 collapses R_2 to a
  // constant there, so that particular integral happens to converge.
  const GramReport low =
      gram_matrix(FamilySpec::romanovski(Rational(3, 2), Rational(0)), 2, 1e-8);
  CHECK(!low.admissible[1][1]);
  CHECK(!low.matrix[1][1].converged);
  CHECK(!low.admissible[2][2]);
  CHECK(rodrigues_full(canonicalize(WeightSpec::romanovski(Rational(3, 2), Rational(0))), 2)
            .degree_deficient);
  CHECK(checks::romanovski_finite_orthogonality().passed);
}

TEST_CASE("closed-form Romanovski norms") {
  CHECK(romanovski_norm_closed(2.5, 1) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-12));
  // a = 7/2, n = 2 evaluates to 20 pi; confirmed independently by the
  // quadrature diagonal below
  CHECK(romanovski_norm_closed(3.5, 2) ==
        doctest::Approx(20.0 * kPi).epsilon(1e-12));
  const GramReport rep =
      gram_matrix(FamilySpec::romanovski(Rational(4), Rational(0)), 2, 1e-9);
  CHECK(rep.matrix[2][2].value == doctest::Approx(20.0 * kPi).epsilon(1e-9));

  CHECK_THROWS_AS(romanovski_norm_closed(2.0, 2), DomainError);
  CHECK_THROWS_AS(romanovski_norm_closed(10.0, 4), DomainError);
  CHECK(checks::norm_closed_forms().passed);
}

TEST_CASE("bessel unit-circle orthogonality") {
  CHECK(std::abs(bessel_circle_inner(0, 1, 256)) < 1e-10);
  CHECK(std::abs(bessel_circle_inner(2, 3, 256)) < 1e-10);
  CHECK(std::abs(bessel_circle_inner(1, 1, 256)) > 1e-6);
  CHECK_THROWS_AS(bessel_circle_inner(0, 1, 100), DomainError);
  CHECK_THROWS_AS(bessel_circle_inner(0, 1, 32), DomainError);
}

TEST_CASE("gram rejects the Bessel family") {
  CHECK_THROWS_AS(
      gram_matrix(FamilySpec::bessel(Rational(2), Rational(2)), 2, 1e-8),
      DomainError);
}

TEST_CASE("strongly cancelling admissible pairs still converge") {
  // p = 13/2, q = -2, pair (5,6): the integral vanishes by orthogonality
  // while the absolute mass is large, so contraction bottoms out at the
  // round-off floor; that must still be reported as converged
  const FamilySpec fs = FamilySpec::romanovski(Rational(13, 2), Rational(-2));
  const GramReport rep = gram_matrix(fs, 6, 1e-8);
  CHECK(rep.admissible[5][6]);
  CHECK(rep.matrix[5][6].converged);
  // the (6,6) diagonal sits on the divergent shell, so the cancellation is
  // measured against the absolute integral instead of the geometric mean
  const DoublePoly p5 = to_double_poly(family_poly(fs, 5));
  const DoublePoly p6 = to_double_poly(family_poly(fs, 6));
  const auto mass = integrate(
      [&](double x) {
        const double w = std::exp(-6.5 * std::log1p(x * x) - 2.0 * std::atan(x));
        return w == 0.0 ? 0.0 : std::abs(w * p5.eval(x) * p6.eval(x));
      },
      Interval::real_line(), 1e-9);
  CHECK(std::abs(rep.matrix[5][6].value) / mass.value < 1e-8);
  // while the full-degree boundary shell (n+m = 12) stays flagged
  CHECK(!rep.matrix[6][6].converged);
}

TEST_CASE("classical gram suite") {
  CHECK(checks::classical_gram().passed);
  CHECK(checks::quad_selftest().passed);
}

}
