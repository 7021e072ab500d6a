#ifndef ROMPOLY_ANGULAR_HPP
#define ROMPOLY_ANGULAR_HPP

#include <vector>

#include "rompoly/quad.hpp"

namespace rompoly {

// Change of variable for the polar-angle equation: sinh(z) = -cot(theta),
// equivalently theta = 2 atan(e^z); cosh z = 1/sin theta and
// cos theta = -tanh z on theta in (0, pi).
struct ThetaMap {
  double z;
  double x; // sinh z = -cot theta
};

ThetaMap theta_map(double theta);

// The polar potential V2(theta) = -c cot(theta) in hbar = 2 mass = 1 units
// (c_tilde = c), plus the branch used to fix the Scarf parameters (a, b).
enum class ParameterChoice { SolveAB, FixA, IntegerL };

struct NonCentralSpec {
  double c = 0.0; // strength of -c cot(theta)
  ParameterChoice choice = ParameterChoice::SolveAB;
};

struct SolvedParams {
  double a = 0.0;
  double b = 0.0;
  // Residual of the matching equation the branch leaves unused; the three
  // constants cannot be independent, so this is reported, not enforced.
  double unused_residual = 0.0;
};

// Branches:
//  SolveAB : (a+1/2)^2 = ((l+1/2)^2 + sqrt((l+1/2)^4 + c^2))/2, b = -c/(2a+1)
//  FixA    : a = m+n, b = -c/(2(m+n)+1)
//  IntegerL: a = b = l(l+1), n = l(l+1) - m
// Throws InadmissibleError when a <= n or a radicand is negative.
SolvedParams solve_parameters(const NonCentralSpec& spec, int l, int m, int n);

// Non-spherical angular function
//   Z_l^m = (1+cot^2 t)^{-l(l+1)/2} e^{-l(l+1) atan(-cot t)}
//           R_{l(l+1)-m}^{(l(l+1)+1/2, -2l(l+1))}(-cot t) e^{i m phi}.
// Reduces to the spherical-harmonic angular shape when l = 0. The degree
// n = l(l+1)-m must be nonnegative; m may exceed l (no spherical
// counterpart). Unnormalized, matching its defining expression.
Complex z_function(int l, int m, double theta, double phi);

// Numeric self-norm over theta with the sin(theta) measure, for plotting
// parity with normalized spherical harmonics.
double z_function_theta_norm(int l, int m);

struct RatioReport {
  double mean = 0.0;
  double max_rel_dev = 0.0;
  unsigned points_used = 0;
};

// Pointwise ratio P_l^m(cos t) / [sin^l(t) R_{l-m}^{(l+1/2,0)}(-cot t)];
// the relation holds iff the ratio is constant across the grid.
RatioReport legendre_relation_check(unsigned l, unsigned m,
                                    const std::vector<double>& grid);

// int sqrt(w_l) R_{l-m}^{(l+1/2,0)} sqrt(w_l') R_{l'-m}^{(l'+1/2,0)} dx/(1+x^2)
// over the real line: orthogonality across different parameter sets.
QuadResult infinite_orthogonality_integral(unsigned l, unsigned lp, unsigned m,
                                           double tol);

// Same integral with each factor normalized to unit self-norm.
double infinite_orthogonality_normalized(unsigned l, unsigned lp, unsigned m,
                                         double tol);

// E = -1/(n_r + l + 1)^2 in dimensionless units; l may be the non-integer
// value forced by the FixA branch.
double noncentral_radial_energy(unsigned n_r, double l);

// su(1,1) bookkeeping for Z_l^m: j = m + 1/2, m' = l(l+1) + 1/2,
// n = m' - j, and the level energy is -(j - 1/2)^2.
struct AngularLabel {
  int l = 0;
  int m = 0;
  double j = 0.0;
  double m_prime = 0.0;
  unsigned n = 0;
  double eps = 0.0;
};

AngularLabel su11_label(int l, int m);

} // namespace rompoly

#endif
