#ifndef ROMPOLY_POTENTIALS_HPP
#define ROMPOLY_POTENTIALS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rompoly/jet.hpp"
#include "rompoly/rodrigues.hpp"

namespace rompoly {

// Units: hbar = 2*mass = 1 throughout, so energies and lengths are the
// dimensionless epsilon/z of the reduced radial problem.
enum class PotentialKind {
  Oscillator1D,
  Oscillator3D,
  Coulomb,
  Morse,
  ScarfII,
  RosenMorseII,
  Eckart,
  ScarfI,
  PoschlTeller2,
  RosenMorseI,
  ExpBarrier,
};

std::string to_string(PotentialKind k);

struct PotentialSpec {
  PotentialKind kind;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  int l = 0;

  // v(z) = (omega^2/4)(z - 2 shift/omega)^2 - omega/2; levels n*omega.
  static PotentialSpec oscillator1d(double omega = 2.0, double shift = 0.0);
  // v(z) = z^2 + l(l+1)/z^2 effective radial form; levels 2(2n+l+3/2).
  static PotentialSpec oscillator3d(int l);
  // v(z) = -2Z/z + l(l+1)/z^2; levels -Z^2/(n+l+1)^2.
  static PotentialSpec coulomb(double Z, int l);
  static PotentialSpec morse(double A, double B, double alpha);
  static PotentialSpec scarf2(double a, double b, double alpha = 1.0);
  static PotentialSpec rosen_morse2(double a, double b);
  static PotentialSpec eckart(double A, double B, double alpha);
  static PotentialSpec scarf1(double a, double b, double alpha);
  static PotentialSpec poschl_teller2(double A, double B, double alpha);
  static PotentialSpec rosen_morse1(int l, double b);
  // v(z) = A exp(rate z); exactly solvable when A = rate^2.
  static PotentialSpec exp_barrier(double A, double rate);
};

// Potential (including any centrifugal term) at a point of its domain.
double potential_value(const PotentialSpec& ps, double z);

struct SpectrumEntry {
  unsigned n = 0;
  double energy = 0.0;
  // Second energy convention where one exists. Scarf II: energy is the
  // shifted e_n = a^2-(a-n alpha)^2 and energy_alt the reduced
  // eps_n = -(a-n alpha)^2 with e_n = a^2 + eps_n. The exponential barrier
  // reports the solvability eigenvalue e_n = 1/4 + n(n+1) as energy.
  std::optional<double> energy_alt;
};

// Closed-form levels 0..nmax. AdmissibilityError past the bound-state
// count (Scarf II: n < a/alpha; Rosen-Morse II: n < a - sqrt(b)).
std::vector<SpectrumEntry> spectrum(const PotentialSpec& ps, unsigned nmax);

// Number of bound states, where finite.
std::optional<unsigned> bound_state_count(const PotentialSpec& ps);

// Closed-form eigenfunction with analytic first and second derivatives.
// The evaluation variable is the potential's natural one: x = sinh(z) for
// Scarf II, z everywhere else; residual() applies the corresponding ODE
// operator and normalizes by max(|psi|,1e-300)*(1+|eps|).
struct WaveFunction {
  PotentialSpec potential;
  unsigned n = 0;
  double energy = 0.0; // eigenvalue used by the residual operator
  double domain_lo = 0.0, domain_hi = 0.0;
  std::function<Jet(double)> eval;
  std::function<double(double)> residual_raw;
};

WaveFunction scarf2_wavefunction(double a, double b, unsigned n);
WaveFunction rosen_morse1_wavefunction(int l, double b, unsigned n);
WaveFunction rosen_morse2_wavefunction(double a, double b, unsigned n);
WaveFunction oscillator1d_wavefunction(double omega, double shift, unsigned n);
WaveFunction oscillator3d_wavefunction(unsigned n, unsigned l);
WaveFunction hydrogen_wavefunction(unsigned n, unsigned l);
WaveFunction exp_barrier_wavefunction(double A, double rate, unsigned n);

WaveFunction make_wavefunction(const PotentialSpec& ps, unsigned n);

std::vector<double> schrodinger_residual(const WaveFunction& wf,
                                         const std::vector<double>& xs);

// Evenly spaced grid of count points on [lo, hi].
std::vector<double> linspace(double lo, double hi, unsigned count);

struct RosenMorse2Params {
  double mu = 0.0;
  double nu = 0.0;
  double e = 0.0; // b^2/a^2 - (a-n)^2 - b^2/(a-n)^2
};

// Running Jacobi parameters mu_n, nu_n and the level energy.
// PoleError at n = a.
RosenMorse2Params rosen_morse2_params(double a, double b, unsigned n);

// Max relative deviation over the grid between exp(-int_0^z U) for the
// superpotential U = a tanh + b sech and the assembled Scarf II ground
// state. The closed antiderivative is
//   int_0^z U = a log cosh(z) + b gd(z),  gd(z) = 2 atan(tanh(z/2)).
double susy_ground_state_check(double a, double b, const std::vector<double>& grid);
// The antiderivative itself, exposed for unit testing against quadrature.
double susy_superpotential_antiderivative(double a, double b, double z);

struct KGParams {
  double A = 0.0;
  double B = 0.0;
  double mu = 1.0;
};

struct KGLevel {
  double E1 = 0.0; // particle root
  double E2 = 0.0; // antiparticle root
};

// Energies of the equal-scalar-vector Klein-Gordon reduction with the
// hyperbolic Scarf shape. Both roots satisfy the matching system
//   eps = (E+mu)(E-mu-A^2),  eps = -(a-n)^2,  a = A sqrt(E+mu),
// equivalently u^4 - 2 mu u^2 - 2An u + n^2 = 0 with u = sqrt(E+mu).
// Throws ComplexRootError when no real level exists.
KGLevel klein_gordon_energies(const KGParams& kg, unsigned n);

struct KGDerived {
  double a = 0.0;
  double b = 0.0;
  double eps = 0.0;
};

// Scarf parameters induced by a root E.
KGDerived klein_gordon_match(const KGParams& kg, double E);

// Relative residual of the matching system at E; ~0 for true roots.
double klein_gordon_residual(const KGParams& kg, unsigned n, double E);

} // namespace rompoly

#endif
