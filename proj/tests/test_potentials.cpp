#include <doctest.h>

#include <cmath>

#include "rompoly/checks.hpp"
#include "rompoly/errors.hpp"
#include "rompoly/potentials.hpp"
#include "rompoly/quad.hpp"

using namespace rompoly;

TEST_SUITE("potentials") {

TEST_CASE("potential values") {
  // Scarf II tends to a^2 at large z
  CHECK(potential_value(PotentialSpec::scarf2(10, 5, 1), 30.0) ==
        doctest::Approx(100.0).epsilon(1e-11));
  // Rosen-Morse I at z = pi/2: cot = 0, sin = 1
  CHECK(potential_value(PotentialSpec::rosen_morse1(1, 50), 1.5707963267948966) ==
        doctest::Approx(2.0));
  CHECK(potential_value(PotentialSpec::exp_barrier(1.0, 2.0), 0.0) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(potential_value(PotentialSpec::rosen_morse1(1, 50), 3.5),
                  DomainError);
  CHECK_THROWS_AS(potential_value(PotentialSpec::coulomb(1, 0), -1.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::scarf2(-1.0, 5.0, 1.0), DomainError);
}

TEST_CASE("spectra") {
  const auto sc = spectrum(PotentialSpec::scarf2(10, 5, 1), 9);
  CHECK(sc[0].energy == doctest::Approx(0.0));
  CHECK(sc[1].energy == doctest::Approx(19.0));
  CHECK(*sc[1].energy_alt == doctest::Approx(-81.0));
  CHECK_THROWS_AS(spectrum(PotentialSpec::scarf2(10, 5, 1), 10),
                  AdmissibilityError);

  CHECK(spectrum(PotentialSpec::coulomb(1, 0), 0)[0].energy ==
        doctest::Approx(-1.0));
  CHECK(spectrum(PotentialSpec::oscillator3d(0), 0)[0].energy ==
        doctest::Approx(3.0));
  CHECK(spectrum(PotentialSpec::oscillator1d(2.0, 0.0), 3)[3].energy ==
        doctest::Approx(6.0));
  CHECK_THROWS_AS(spectrum(PotentialSpec::morse(1, 1, 1), 2), AdmissibilityError);

  // general alpha: e_n = a^2 - (a - n alpha)^2 and its finite difference
  const auto sc2 = spectrum(PotentialSpec::scarf2(10, 5, 2), 4);
  CHECK(sc2[1].energy == doctest::Approx(36.0));
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(sc2[n].energy - sc2[n - 1].energy ==
          doctest::Approx(4.0 * (10.0 - 2.0 * n + 1.0)));
}

TEST_CASE("bound-state counts") {
  CHECK(*bound_state_count(PotentialSpec::scarf2(2.5, 5, 1)) == 3);
  CHECK(*bound_state_count(PotentialSpec::scarf2(3.5, 5, 1)) == 4);
  CHECK(*bound_state_count(PotentialSpec::scarf2(10, 5, 1)) == 10);
  CHECK(!bound_state_count(PotentialSpec::coulomb(1, 0)).has_value());
}

TEST_CASE("scarf2 wavefunctions") {
  // n = 0 is the bare prefactor
  const WaveFunction g0 = scarf2_wavefunction(3.0, 2.0, 0);
  const double x = 0.6;
  CHECK(g0.eval(x).f == doctest::Approx(std::pow(1 + x * x, -1.5) *
                                        std::exp(-2.0 * std::atan(x))));
  // n = 1, (a,b) = (3,2): polynomial factor -5x - 4
  const WaveFunction g1 = scarf2_wavefunction(3.0, 2.0, 1);
  CHECK(g1.eval(x).f / g0.eval(x).f == doctest::Approx(-5.0 * x - 4.0));

  // residuals on the example points
  const WaveFunction g3 = scarf2_wavefunction(10.0, 5.0, 3);
  for (const double v :
       schrodinger_residual(g3, {-2.0, -1.0, 0.0, 1.0, 2.0}))
    CHECK(v < 1e-9);

  CHECK_THROWS_AS(scarf2_wavefunction(3.0, 2.0, 3), AdmissibilityError);
}

TEST_CASE("oscillator ground state is the textbook identity") {
  const WaveFunction psi0 = oscillator1d_wavefunction(2.0, 0.0, 0);
  CHECK(psi0.eval(0.7).f == doctest::Approx(std::exp(-0.245)));
  for (const double v : schrodinger_residual(psi0, linspace(-4, 4, 21)))
    CHECK(v < 1e-13);
  // shifted well, general frequency
  for (unsigned n = 0; n <= 3; ++n) {
    const WaveFunction wf = oscillator1d_wavefunction(3.0, 1.5, n);
    CHECK(wf.energy == doctest::Approx(3.0 * n));
    for (const double v : schrodinger_residual(wf, linspace(-3, 5, 21)))
      CHECK(v < 1e-11);
  }
}

TEST_CASE("rosen-morse II running parameters") {
  const auto p0 = rosen_morse2_params(10, 10, 0);
  CHECK(p0.mu == doctest::Approx(9.0));
  CHECK(p0.nu == doctest::Approx(11.0));
  CHECK(p0.e == doctest::Approx(-100.0));
  CHECK_THROWS_AS(rosen_morse2_params(10, 10, 10), PoleError);
  CHECK(checks::rosen_morse2_parameters().passed);
  const WaveFunction wf = rosen_morse2_wavefunction(10.0, 10.0, 1);
  for (const double v : schrodinger_residual(wf, linspace(-4, 4, 21)))
    CHECK(v < 1e-8);
  CHECK_THROWS_AS(rosen_morse2_wavefunction(10.0, 10.0, 8), AdmissibilityError);
}

TEST_CASE("rosen-morse I pipeline") {
  CHECK(spectrum(PotentialSpec::rosen_morse1(1, 50), 0)[0].energy ==
        doctest::Approx(-621.0));
  const WaveFunction w0 = rosen_morse1_wavefunction(1, 50.0, 0);
  // n = 0: prefactor only, sin^{l+1} e^{-bz/(l+1)}
  const double z = 1.1;
  CHECK(w0.eval(z).f == doctest::Approx(std::pow(std::sin(z), 2.0) *
                                        std::exp(-25.0 * z)));
  const WaveFunction w2 = rosen_morse1_wavefunction(1, 50.0, 2);
  for (const double v : schrodinger_residual(w2, linspace(0.2, 2.9, 21)))
    CHECK(v < 1e-8);
}

TEST_CASE("hydrogen and 3d oscillator forms") {
  // hydrogen ground state: R/kappa z proportional to e^{-z}
  const WaveFunction h0 = hydrogen_wavefunction(0, 0);
  const double z = 1.3;
  CHECK(h0.eval(z).f / (2.0 * z) == doctest::Approx(std::exp(-z)));
  // 3d oscillator (n=0, l=1): R = z^2 e^{-z^2/2}, psi = R/z = z e^{-z^2/2}
  const WaveFunction o01 = oscillator3d_wavefunction(0, 1);
  CHECK(o01.eval(z).f / z == doctest::Approx(z * std::exp(-0.5 * z * z)));
  for (unsigned n = 0; n <= 2; ++n)
    for (unsigned l = 0; l <= 2; ++l) {
      const WaveFunction h = hydrogen_wavefunction(n, l);
      for (const double v :
           schrodinger_residual(h, linspace(h.domain_lo, h.domain_hi, 21)))
        CHECK(v < 1e-9);
      const WaveFunction o = oscillator3d_wavefunction(n, l);
      for (const double v :
           schrodinger_residual(o, linspace(o.domain_lo, o.domain_hi, 21)))
        CHECK(v < 1e-9);
    }
}

TEST_CASE("exponential barrier pipeline") {
  const auto sp = spectrum(PotentialSpec::exp_barrier(1.0, 1.0), 2);
  CHECK(sp[0].energy == doctest::Approx(0.25));
  CHECK(sp[1].energy == doctest::Approx(2.25));
  for (unsigned n = 0; n <= 3; ++n) {
    const WaveFunction wf = exp_barrier_wavefunction(1.0, 1.0, n);
    for (const double v : schrodinger_residual(wf, linspace(-2, 2, 21)))
      CHECK(v < 1e-9);
  }
  // strength and rate both free; the scaling of x absorbs them
  const WaveFunction general = exp_barrier_wavefunction(3.0, 1.5, 2);
  for (const double v : schrodinger_residual(general, linspace(-2, 2, 21)))
    CHECK(v < 1e-9);
}

TEST_CASE("susy ground state") {
  // closed antiderivative vs direct quadrature
  for (const double z : {0.4, 1.0, 2.5, -1.7}) {
    const auto num = integrate(
        [](double y) { return 3.0 * std::tanh(y) + 1.0 / std::cosh(y); },
        Interval::finite(0.0, z), 1e-13);
    CHECK(num.value ==
          doctest::Approx(susy_superpotential_antiderivative(3.0, 1.0, z))
              .epsilon(1e-11));
  }
  const auto grid = linspace(-3.0, 3.0, 31);
  CHECK(susy_ground_state_check(10.0, 5.0, grid) < 1e-9);
  CHECK(susy_ground_state_check(3.0, 1.0, grid) < 1e-9);
  // b = 0: ground state reduces to sech^a
  const WaveFunction g0 = scarf2_wavefunction(4.0, 0.0, 0);
  for (const double z : grid)
    CHECK(g0.eval(std::sinh(z)).f ==
          doctest::Approx(std::pow(1.0 / std::cosh(z), 4.0)));
}

TEST_CASE("klein-gordon energies satisfy the matching system") {
  const KGParams kg{1.0, 1.0, 1.0};
  const KGLevel base = klein_gordon_energies(kg, 0);
  CHECK(base.E1 == doctest::Approx(1.0));
  CHECK(base.E2 == doctest::Approx(-1.0));
  for (unsigned n = 0; n <= 2; ++n) {
    for (const auto& [A, mu] :
         std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {1, 5}}) {
      const KGParams p{A, 1.0, mu};
      KGLevel lvl;
      try {
        lvl = klein_gordon_energies(p, n);
      } catch (const ComplexRootError&) {
        continue;
      }
      CHECK(lvl.E1 >= lvl.E2);
      CHECK(klein_gordon_residual(p, n, lvl.E1) < 1e-9);
      CHECK(klein_gordon_residual(p, n, lvl.E2) < 1e-9);
    }
  }
  // A -> 0: levels collapse toward the free-particle edge +-sqrt(mu^2 - n^2)
  const KGLevel free2 = klein_gordon_energies(KGParams{0.0, 1.0, 5.0}, 2);
  CHECK(free2.E1 == doctest::Approx(std::sqrt(21.0)));
  CHECK(free2.E2 == doctest::Approx(-std::sqrt(21.0)));
  CHECK_THROWS_AS(klein_gordon_energies(KGParams{0.0, 1.0, 1.0}, 2),
                  ComplexRootError);
}

TEST_CASE("wavefunction orthogonality checks") {
  CHECK(checks::scarf2_orthogonality().passed);
  CHECK(checks::rosen_morse1_orthogonality().passed);
}

TEST_CASE("make_wavefunction dispatch and catalog-only kinds") {
  CHECK_NOTHROW(make_wavefunction(PotentialSpec::scarf2(10, 5, 1), 2));
  CHECK_THROWS_AS(make_wavefunction(PotentialSpec::morse(1, 1, 1), 0),
                  AdmissibilityError);
  CHECK_THROWS_AS(make_wavefunction(PotentialSpec::eckart(1, 1, 1), 0),
                  AdmissibilityError);
  // catalog rows still evaluate as potentials
  CHECK(std::isfinite(potential_value(PotentialSpec::eckart(2, 1, 1), 0.5)));
  CHECK(std::isfinite(potential_value(PotentialSpec::poschl_teller2(2, 1, 1), 0.5)));
  CHECK(std::isfinite(potential_value(PotentialSpec::scarf1(2, 1, 1), 0.3)));
  CHECK(std::isfinite(potential_value(PotentialSpec::morse(2, 1, 1), 0.3)));
}

}
