#ifndef ROMPOLY_HYPERCLASS_HPP
#define ROMPOLY_HYPERCLASS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rompoly/poly.hpp"

namespace rompoly {

// Coefficients of the generalized hypergeometric equation
//   sigma(x) y'' + tau(x) y' - lambda_n y = 0,
//   sigma(x) = a x^2 + b x + c,  tau(x) = d x + e.
//
// Eigenvalues are lambda_n = n(n-1) a + n d. Some references move the
// lambda term to the other side of the equation and write
// lambda_n = -n(tau' + (n-1) sigma''/2); both describe the same
// polynomial solutions, the sign convention here keeps lambda_n as above.
struct HyperParams {
  Rational a, b, c, d, e;

  RationalPoly sigma() const { return RationalPoly({c, b, a}); }
  RationalPoly tau() const { return RationalPoly({e, d}); }
  // Numerator of the weight's logarithmic derivative: (d-2a)x + (e-b).
  RationalPoly log_derivative_numerator() const {
    return RationalPoly({e - b, d - Rational(2) * a});
  }

  friend bool operator==(const HyperParams& p, const HyperParams& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d && p.e == q.e;
  }
};

// lambda_n = n(n-1) a + n d, exactly.
Rational lambda_n(const HyperParams& hp, unsigned n);

// Bochner's five classes, keyed on the root structure of sigma.
enum class BochnerClass {
  ConstantSigma,  // Hermite type
  LinearSigma,    // Laguerre type
  TwoRealRoots,   // Jacobi type
  DoubleRealRoot, // Bessel type
  ComplexRoots,   // Romanovski type
};

std::string to_string(BochnerClass c);

// Throws InvalidEquationError when sigma is identically zero.
BochnerClass classify(const HyperParams& hp);

enum class Family { Hermite, Laguerre, Jacobi, Bessel, Romanovski, General };

std::string to_string(Family f);

enum class Support { RealLine, HalfLine, IntervalM11, UnitCircle, Other };

// A solved Pearson weight. Named families carry their conventional
// parameters exactly:
//   Hermite(alpha):       exp(-alpha x^2)                       on R
//   Laguerre(alpha,beta): x^beta exp(-alpha x)                  on [0,inf)
//   Jacobi(alpha,beta):   (1-x)^alpha (1+x)^beta                on [-1,1]
//   Bessel(alpha,beta):   x^alpha exp(-beta/x)                  unit circle
//   Romanovski(p,q):      (1+x^2)^{-p} exp(q arctan x)          on R
// The Romanovski pair is stored as (p,q); the equivalent (beta,alpha)
// exponent convention, w = (1+x^2)^{beta-1/2} exp(-alpha arctan x), is
// exposed through romanovski_beta()/romanovski_alpha() with the lossless
// conversion p = 1/2 - beta, q = -alpha.
class WeightSpec {
public:
  static WeightSpec hermite(const Rational& alpha);
  static WeightSpec laguerre(const Rational& alpha, const Rational& beta);
  static WeightSpec jacobi(const Rational& alpha, const Rational& beta);
  // Weight-exponent convention, w = x^alpha exp(-beta/x); canonical d = alpha + 2.
  static WeightSpec bessel(const Rational& alpha, const Rational& beta);
  // tau-convention, tau(x) = alpha x + beta, as used for the printed
  // polynomial tables; equivalent to bessel(alpha - 2, beta).
  static WeightSpec bessel_tau(const Rational& alpha, const Rational& beta);
  static WeightSpec romanovski(const Rational& p, const Rational& q);
  static WeightSpec romanovski_beta_alpha(const Rational& beta, const Rational& alpha);
  static WeightSpec general(const HyperParams& hp);

  Family family() const { return family_; }
  Support support() const { return support_; }
  const HyperParams& hp() const { return hp_; }

  const Rational& param1() const { return p1_; }
  const Rational& param2() const { return p2_; }

  Rational romanovski_p() const;
  Rational romanovski_q() const;
  Rational romanovski_beta() const;  // 1/2 - p
  Rational romanovski_alpha() const; // -q

  // Jacobi weights are orthogonality weights only for alpha, beta > -1.
  bool jacobi_orthogonal() const;

  // Closed form of the weight, e.g. "(1+x^2)^(-7/2) exp(-4 atan(x))".
  std::string str() const;

  // Pointwise evaluation on the support interior. Families without a real
  // support (Bessel) throw DomainError.
  std::function<double(double)> evaluator() const;

private:
  WeightSpec(Family f, Rational p1, Rational p2, HyperParams hp, Support s)
      : family_(f), p1_(std::move(p1)), p2_(std::move(p2)), hp_(std::move(hp)),
        support_(s) {}

  Family family_;
  Rational p1_, p2_;
  HyperParams hp_;
  Support support_;
};

// Closed-form factorization of a general Pearson weight
//   w(x) = exp(E(x)) * prod_i (x - r_i)^{e_i}
//          * exp(s/(x - r0))                    [double root]
//          * ((x+h)^2 + k^2)^{g} exp(m atan((x+h)/k))   [complex pair]
// up to an overall constant. Roots and exponents are exact whenever the
// root data is rational; the complex-pair scale k may be irrational and is
// carried as k^2 (exact) plus its double value.
struct WeightForm {
  RationalPoly exp_poly; // E(x)

  struct PowerFactor {
    Rational root;
    Rational expo;
  };
  std::vector<PowerFactor> powers;

  struct InvFactor {
    bool present = false;
    Rational root;
    Rational coef; // exp(coef/(x-root))
  } inv;

  struct ArctanFactor {
    bool present = false;
    Rational quad_expo;        // exponent g of (x+h)^2 + k^2
    Rational shift;            // h
    Rational scale_sq;         // k^2
    Rational coef_times_scale; // m*k (exact); m = coef_times_scale / k
  } arctan;

  // Irrational real roots of sigma fall back to float root data.
  struct FloatPowerFactor {
    double root;
    double expo;
  };
  std::vector<FloatPowerFactor> float_powers;

  std::string str() const;
  double eval(double x) const;
};

// Decomposes exp(int L/sigma) for any classifiable parameter set.
WeightForm weight_form(const HyperParams& hp);

// Solves the Pearson equation (sigma w)' = tau w for the closed-form weight.
// Canonical parameter positions map onto the named families; anything else
// is returned as a General spec whose factorization weight_form() provides.
WeightSpec pearson_weight(const HyperParams& hp);

// Inverse of pearson_weight on the canonical families.
HyperParams canonicalize(const WeightSpec& ws);

} // namespace rompoly

#endif
