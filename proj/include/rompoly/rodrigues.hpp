#ifndef ROMPOLY_RODRIGUES_HPP
#define ROMPOLY_RODRIGUES_HPP

#include <functional>
#include <string>

#include "rompoly/hyperclass.hpp"

namespace rompoly {

// State of the n-fold differentiation inside the Rodrigues formula:
// represents P(x) * w(x) * sigma(x)^k, which is closed under d/dx via
//   (k, P) -> (k-1, sigma P' + (k sigma' + L) P),
// where L = (d-2a)x + (e-b) is the numerator of w'/w. The rule is exact
// for every family since only L and sigma enter.
struct WeightedForm {
  HyperParams hp;
  Rational sigma_exponent;
  RationalPoly poly;

  WeightedForm differentiate() const;
};

struct RodriguesResult {
  RationalPoly poly;
  // True when eigenvalue collisions made the degree drop below n.
  bool degree_deficient = false;
};

// (1/w) d^n/dx^n [w sigma^n], computed exactly.
RodriguesResult rodrigues_full(const HyperParams& hp, unsigned n);
RationalPoly rodrigues_raw(const HyperParams& hp, unsigned n);
RationalPoly rodrigues_raw(const WeightSpec& ws, unsigned n);

// Same recurrence in floating-point coefficients, for irrational parameters.
DoublePoly rodrigues_raw_d(double a, double b, double c, double d, double e,
                           unsigned n);
// Romanovski R_n^{(p,q)} with float parameters (canonical a=1, b=0, c=1).
DoublePoly romanovski_poly_d(double p, double q, unsigned n);
// Jacobi P_n^{(alpha,beta)} with float parameters, conventional normalization.
DoublePoly jacobi_poly_d(double alpha, double beta, unsigned n);
// Laguerre L_n^{(beta)} with float parameter, conventional normalization.
DoublePoly laguerre_poly_d(double beta, unsigned n);

// A polynomial family: weight plus the conventional normalization that
// turns raw Rodrigues output into the textbook polynomials.
class FamilySpec {
public:
  static FamilySpec hermite();                            // H_n, weight exp(-x^2)
  static FamilySpec laguerre(const Rational& beta);       // L_n^{(beta)}, rate 1
  static FamilySpec jacobi(const Rational& alpha, const Rational& beta);
  // tau-convention Bessel y_n^{(alpha,beta)}; (2,2) gives the classical y_n.
  static FamilySpec bessel(const Rational& alpha, const Rational& beta);
  static FamilySpec romanovski(const Rational& p, const Rational& q);
  static FamilySpec legendre();
  static FamilySpec chebyshev1();
  static FamilySpec chebyshev2();
  static FamilySpec gegenbauer(const Rational& alpha);

  const WeightSpec& weight() const { return ws_; }
  const std::string& name() const { return name_; }
  Rational normalizer(unsigned n) const { return norm_(n); }

private:
  FamilySpec(WeightSpec ws, std::string name, std::function<Rational(unsigned)> norm)
      : ws_(std::move(ws)), name_(std::move(name)), norm_(std::move(norm)) {}

  WeightSpec ws_;
  std::string name_;
  std::function<Rational(unsigned)> norm_;
};

// normalizer(n) * rodrigues_raw, matching the conventional tables.
RationalPoly family_poly(const FamilySpec& fs, unsigned n);

enum class SpecialKind { Gegenbauer, ChebyshevI, ChebyshevII, Legendre };

// Jacobi specializations with their conventional normalizations.
// Gegenbauer requires the alpha parameter; the others ignore it.
RationalPoly specialized(SpecialKind kind, const Rational& alpha, unsigned n);
RationalPoly specialized(SpecialKind kind, unsigned n);

// Associated Legendre function P_l^m(x) on [-1,1] with the Condon-Shortley
// phase, via exact m-fold differentiation of the Legendre polynomial.
double assoc_legendre(unsigned l, int m, double x);

// (1+x^2) R'' + (2(1-p)x + q) R' - (n(n-1) + 2n(1-p)) R for the raw
// Rodrigues polynomial; identically zero when the construction is correct.
RationalPoly romanovski_ode_residual(const Rational& p, const Rational& q,
                                     unsigned n);

} // namespace rompoly

#endif
