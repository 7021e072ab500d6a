#include "rompoly/masterformula.hpp"

#include <cmath>

#include "rompoly/errors.hpp"

namespace rompoly {

Complex gauss2f1_terminating(int neg_int_a, Complex B, Complex C, Complex z) {
  if (neg_int_a > 0)
    throw DomainError("first parameter must be a nonpositive integer");
  const int terms = -neg_int_a;
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int j = 0; j < terms; ++j) {
    const Complex cj = C + static_cast<double>(j);
    if (cj == Complex(0.0, 0.0))
      throw PoleInCError("denominator parameter hits a nonpositive integer "
                         "inside the truncated series");
    const Complex aj = static_cast<double>(neg_int_a + j);
    term *= aj * (B + static_cast<double>(j)) / (cj * static_cast<double>(j + 1)) * z;
    sum += term;
  }
  return sum;
}

namespace {

// Monic coefficients from the descending three-term recurrence
//   (lambda_n - lambda_m) g_m = (m+1)(b m + e) g_{m+1} + c (m+1)(m+2) g_{m+2},
// exact in rational arithmetic; the double-root limit of the master formula.
std::vector<Rational> monic_descending(const HyperParams& hp, unsigned n) {
  std::vector<Rational> g(n + 2, Rational(0));
  g[n] = Rational(1);
  const Rational ln = lambda_n(hp, n);
  for (int m = static_cast<int>(n) - 1; m >= 0; --m) {
    const Rational lm = lambda_n(hp, static_cast<unsigned>(m));
    const Rational denom = ln - lm;
    if (denom.is_zero())
      throw ZeroLeadingTermError("eigenvalue collision: lambda_n = lambda_m");
    const Rational mm(static_cast<long long>(m));
    g[m] = ((mm + Rational(1)) * (hp.b * mm + hp.e) * g[m + 1] +
            hp.c * (mm + Rational(1)) * (mm + Rational(2)) * g[m + 2]) /
           denom;
  }
  g.resize(n + 1);
  return g;
}

} // namespace

MonicCoeffs monic_master(const HyperParams& hp, unsigned n) {
  if (hp.a.is_zero())
    throw DomainError("master formula requires a != 0; the a -> 0 families are "
                      "covered by the Rodrigues route");
  MonicCoeffs out;
  out.n = n;
  out.coeffs.resize(n + 1, 0.0);

  const Rational disc_r = hp.b * hp.b - Rational(4) * hp.a * hp.c;
  if (disc_r.is_zero()) {
    const auto g = monic_descending(hp, n);
    for (unsigned k = 0; k <= n; ++k) out.coeffs[k] = g[k].to_double();
    out.discriminant_root = 0.0;
    return out;
  }

  const double a = hp.a.to_double(), b = hp.b.to_double(), d = hp.d.to_double(),
               e = hp.e.to_double();
  const Complex s = std::sqrt(Complex(disc_r.to_double(), 0.0));
  out.discriminant_root = s;
  const Complex base = (b + s) / (2.0 * a);
  const Complex z = 2.0 * s / (b + s);
  const Complex B = (2.0 * a * e - b * d) / (2.0 * a * s) + 1.0 - d / (2.0 * a) -
                    static_cast<double>(n);
  const Complex C = 2.0 - d / a - 2.0 * static_cast<double>(n);

  try {
    for (unsigned k = 0; k <= n; ++k) {
      const Complex f1 =
          gauss2f1_terminating(static_cast<int>(k) - static_cast<int>(n), B, C, z);
      const Complex coeff = static_cast<double>(binomial(n, k)) *
                            std::pow(base, static_cast<double>(n - k)) * f1;
      out.coeffs[k] = coeff.real();
      out.max_imag = std::max(out.max_imag, std::abs(coeff.imag()));
    }
  } catch (const PoleInCError&) {
    // (C)_j = 0 inside the range is exactly the eigenvalue collision
    // lambda_n = lambda_m for some m < n.
    throw ZeroLeadingTermError("eigenvalue collision: degenerate monic construction");
  }
  return out;
}

Complex jacobi_complex(unsigned n, Complex alpha, Complex beta, Complex z) {
  Complex prefactor = 1.0;
  for (unsigned j = 0; j < n; ++j)
    prefactor *= (alpha + static_cast<double>(1 + j)) / static_cast<double>(j + 1);
  const Complex B = alpha + beta + static_cast<double>(n + 1);
  const Complex C = alpha + 1.0;
  return prefactor *
         gauss2f1_terminating(-static_cast<int>(n), B, C, 0.5 * (1.0 - z));
}

} // namespace rompoly
