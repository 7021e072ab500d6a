#include "rompoly/rodrigues.hpp"

#include <cmath>

#include "rompoly/errors.hpp"

namespace rompoly {

namespace {

template <typename T>
Poly<T> rodrigues_raw_t(const T& a, const T& b, const T& c, const T& d, const T& e,
                        unsigned n) {
  const Poly<T> sigma({c, b, a});
  const Poly<T> sigma_prime = sigma.differentiate();
  const Poly<T> L({e - b, d - T(2) * a});
  Poly<T> p = Poly<T>::constant(T(1));
  for (unsigned k = n; k >= 1; --k) {
    const Poly<T> kfac = Poly<T>::constant(T(static_cast<long long>(k)));
    p = sigma * p.differentiate() + (kfac * sigma_prime + L) * p;
  }
  return p;
}

} // namespace

WeightedForm WeightedForm::differentiate() const {
  const RationalPoly sigma = hp.sigma();
  const RationalPoly L = hp.log_derivative_numerator();
  WeightedForm out{hp, sigma_exponent - Rational(1), RationalPoly()};
  out.poly = sigma * poly.differentiate() +
             (RationalPoly::constant(sigma_exponent) * sigma.differentiate() + L) * poly;
  return out;
}

RodriguesResult rodrigues_full(const HyperParams& hp, unsigned n) {
  classify(hp);
  WeightedForm wf{hp, Rational(static_cast<long long>(n)),
                  RationalPoly::constant(Rational(1))};
  for (unsigned k = 0; k < n; ++k) wf = wf.differentiate();
  RodriguesResult res;
  res.poly = wf.poly;
  const auto deg = res.poly.degree();
  res.degree_deficient = !deg.has_value() || *deg < n;
  return res;
}

RationalPoly rodrigues_raw(const HyperParams& hp, unsigned n) {
  return rodrigues_full(hp, n).poly;
}

RationalPoly rodrigues_raw(const WeightSpec& ws, unsigned n) {
  return rodrigues_raw(canonicalize(ws), n);
}

DoublePoly rodrigues_raw_d(double a, double b, double c, double d, double e,
                           unsigned n) {
  return rodrigues_raw_t<double>(a, b, c, d, e, n);
}

DoublePoly romanovski_poly_d(double p, double q, unsigned n) {
  return rodrigues_raw_d(1.0, 0.0, 1.0, 2.0 * (1.0 - p), q, n);
}

DoublePoly jacobi_poly_d(double alpha, double beta, unsigned n) {
  DoublePoly raw =
      rodrigues_raw_d(-1.0, 0.0, 1.0, -alpha - beta - 2.0, -alpha + beta, n);
  double norm = (n % 2 == 0 ? 1.0 : -1.0) / std::pow(2.0, n);
  for (unsigned k = 2; k <= n; ++k) norm /= k;
  return norm * raw;
}

DoublePoly laguerre_poly_d(double beta, unsigned n) {
  DoublePoly raw = rodrigues_raw_d(0.0, 1.0, 0.0, -1.0, beta + 1.0, n);
  double norm = 1.0;
  for (unsigned k = 2; k <= n; ++k) norm /= k;
  return norm * raw;
}

FamilySpec FamilySpec::hermite() {
  return FamilySpec(WeightSpec::hermite(Rational(1)), "hermite",
                    [](unsigned n) { return Rational(n % 2 == 0 ? 1 : -1); });
}

FamilySpec FamilySpec::laguerre(const Rational& beta) {
  return FamilySpec(WeightSpec::laguerre(Rational(1), beta), "laguerre",
                    [](unsigned n) { return Rational(1, 1) / Rational(factorial(n)); });
}

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta) {
  return FamilySpec(WeightSpec::jacobi(alpha, beta), "jacobi", [](unsigned n) {
    const Rational sign(n % 2 == 0 ? 1 : -1);
    return sign / Rational(BigInt(1) << n) / Rational(factorial(n));
  });
}

FamilySpec FamilySpec::bessel(const Rational& alpha, const Rational& beta) {
  // Conventional Bessel normalization divides out beta^n; with (2,2) this
  // reproduces the classical table y_0 = 1, y_1 = 1 + x, ...
  return FamilySpec(WeightSpec::bessel_tau(alpha, beta), "bessel",
                    [beta](unsigned n) {
                      return (Rational(1) / beta).pow(static_cast<long long>(n));
                    });
}

FamilySpec FamilySpec::romanovski(const Rational& p, const Rational& q) {
  return FamilySpec(WeightSpec::romanovski(p, q), "romanovski",
                    [](unsigned) { return Rational(1); });
}

namespace {

// Pochhammer (x)_n as an exact rational.
Rational pochhammer(const Rational& x, unsigned n) {
  Rational acc(1);
  for (unsigned k = 0; k < n; ++k) acc *= x + Rational(static_cast<long long>(k));
  return acc;
}

// Scale applied on top of the Jacobi convention for each specialization.
Rational special_scale(SpecialKind kind, const Rational& alpha, unsigned n) {
  switch (kind) {
  case SpecialKind::Legendre:
    return Rational(1);
  case SpecialKind::Gegenbauer:
    // C_n^{(a)} = (2a)_n / (a+1/2)_n P_n^{(a-1/2, a-1/2)}
    return pochhammer(Rational(2) * alpha, n) /
           pochhammer(alpha + Rational(1, 2), n);
  case SpecialKind::ChebyshevI:
    // T_n = n! / (1/2)_n P_n^{(-1/2,-1/2)}
    return Rational(factorial(n)) / pochhammer(Rational(1, 2), n);
  case SpecialKind::ChebyshevII:
    // U_n = (n+1)! / (3/2)_n P_n^{(1/2,1/2)}
    return Rational(factorial(n)) * Rational(static_cast<long long>(n) + 1) /
           pochhammer(Rational(3, 2), n);
  }
  throw DomainError("unknown specialization");
}

std::pair<Rational, Rational> special_jacobi_params(SpecialKind kind,
                                                    const Rational& alpha) {
  switch (kind) {
  case SpecialKind::Legendre: return {Rational(0), Rational(0)};
  case SpecialKind::Gegenbauer:
    return {alpha - Rational(1, 2), alpha - Rational(1, 2)};
  case SpecialKind::ChebyshevI: return {Rational(-1, 2), Rational(-1, 2)};
  case SpecialKind::ChebyshevII: return {Rational(1, 2), Rational(1, 2)};
  }
  throw DomainError("unknown specialization");
}

} // namespace

FamilySpec FamilySpec::legendre() {
  return FamilySpec(WeightSpec::jacobi(Rational(0), Rational(0)), "legendre",
                    [](unsigned n) {
                      const Rational sign(n % 2 == 0 ? 1 : -1);
                      return sign / Rational(BigInt(1) << n) / Rational(factorial(n));
                    });
}

FamilySpec FamilySpec::chebyshev1() {
  auto params = special_jacobi_params(SpecialKind::ChebyshevI, Rational(0));
  return FamilySpec(WeightSpec::jacobi(params.first, params.second), "chebyshev1",
                    [](unsigned n) {
                      const Rational sign(n % 2 == 0 ? 1 : -1);
                      return special_scale(SpecialKind::ChebyshevI, Rational(0), n) *
                             sign / Rational(BigInt(1) << n) / Rational(factorial(n));
                    });
}

FamilySpec FamilySpec::chebyshev2() {
  auto params = special_jacobi_params(SpecialKind::ChebyshevII, Rational(0));
  return FamilySpec(WeightSpec::jacobi(params.first, params.second), "chebyshev2",
                    [](unsigned n) {
                      const Rational sign(n % 2 == 0 ? 1 : -1);
                      return special_scale(SpecialKind::ChebyshevII, Rational(0), n) *
                             sign / Rational(BigInt(1) << n) / Rational(factorial(n));
                    });
}

FamilySpec FamilySpec::gegenbauer(const Rational& alpha) {
  auto params = special_jacobi_params(SpecialKind::Gegenbauer, alpha);
  return FamilySpec(WeightSpec::jacobi(params.first, params.second), "gegenbauer",
                    [alpha](unsigned n) {
                      const Rational sign(n % 2 == 0 ? 1 : -1);
                      return special_scale(SpecialKind::Gegenbauer, alpha, n) *
                             sign / Rational(BigInt(1) << n) / Rational(factorial(n));
                    });
}

RationalPoly family_poly(const FamilySpec& fs, unsigned n) {
  return fs.normalizer(n) * rodrigues_raw(fs.weight(), n);
}

RationalPoly specialized(SpecialKind kind, const Rational& alpha, unsigned n) {
  switch (kind) {
  case SpecialKind::Legendre: return family_poly(FamilySpec::legendre(), n);
  case SpecialKind::ChebyshevI: return family_poly(FamilySpec::chebyshev1(), n);
  case SpecialKind::ChebyshevII: return family_poly(FamilySpec::chebyshev2(), n);
  case SpecialKind::Gegenbauer: return family_poly(FamilySpec::gegenbauer(alpha), n);
  }
  throw DomainError("unknown specialization");
}

RationalPoly specialized(SpecialKind kind, unsigned n) {
  return specialized(kind, Rational(0), n);
}

double assoc_legendre(unsigned l, int m, double x) {
  if (std::abs(x) > 1.0) throw DomainError("assoc_legendre requires |x| <= 1");
  if (static_cast<unsigned>(std::abs(m)) > l)
    throw DomainError("assoc_legendre requires |m| <= l");
  if (m < 0) {
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    const unsigned mm = static_cast<unsigned>(-m);
    const Rational ratio = Rational(factorial(l - mm)) / Rational(factorial(l + mm));
    const double sign = mm % 2 == 0 ? 1.0 : -1.0;
    return sign * ratio.to_double() * assoc_legendre(l, static_cast<int>(mm), x);
  }
  RationalPoly p = specialized(SpecialKind::Legendre, l);
  for (int k = 0; k < m; ++k) p = p.differentiate();
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(1.0 - x * x, 0.5 * m) * eval_double(p, x);
}

RationalPoly romanovski_ode_residual(const Rational& p, const Rational& q,
                                     unsigned n) {
  const RationalPoly R = rodrigues_raw(WeightSpec::romanovski(p, q), n);
  const RationalPoly sigma({Rational(1), Rational(0), Rational(1)});
  const RationalPoly tau({q, Rational(2) * (Rational(1) - p)});
  const Rational nn(static_cast<long long>(n));
  const Rational lam = nn * (nn - Rational(1)) + Rational(2) * nn * (Rational(1) - p);
  return sigma * R.differentiate().differentiate() + tau * R.differentiate() -
         RationalPoly::constant(lam) * R;
}

} // namespace rompoly
