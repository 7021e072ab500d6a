#include "rompoly/angular.hpp"

#include <cmath>

#include "rompoly/errors.hpp"

namespace rompoly {

namespace {

constexpr double kPi = 3.141592653589793;

// R_n^{(p, q)} for p = base + 1/2, q integer; exact construction.
DoublePoly romanovski_exact(long long twice_p, long long q, unsigned n) {
  return to_double_poly(
      rodrigues_raw(WeightSpec::romanovski(Rational(twice_p, 2), Rational(q)), n));
}

} // namespace

ThetaMap theta_map(double theta) {
  if (!(theta > 0.0 && theta < kPi))
    throw DomainError("theta must lie in the open interval (0, pi)");
  const double x = -1.0 / std::tan(theta);
  return {std::asinh(x), x};
}

SolvedParams solve_parameters(const NonCentralSpec& spec, int l, int m, int n) {
  if (n < 0) throw InadmissibleError("n must be nonnegative");
  SolvedParams out;
  const double c = spec.c;
  switch (spec.choice) {
  case ParameterChoice::SolveAB: {
    const double lh = l + 0.5;
    const double root = std::sqrt(lh * lh * lh * lh + c * c);
    const double lhs = 0.5 * (lh * lh + root);
    out.a = -0.5 + std::sqrt(lhs);
    out.b = -c / (2.0 * out.a + 1.0);
    // unused: eps_n = -(a-n)^2 = -m^2
    out.unused_residual = std::abs((out.a - n) * (out.a - n) -
                                   static_cast<double>(m) * m);
    break;
  }
  case ParameterChoice::FixA: {
    out.a = static_cast<double>(m) + n;
    out.b = -c / (2.0 * (m + n) + 1.0);
    // unused: -b^2 + a(a+1) = l(l+1)
    out.unused_residual = std::abs(-out.b * out.b + out.a * (out.a + 1.0) -
                                   static_cast<double>(l) * (l + 1.0));
    break;
  }
  case ParameterChoice::IntegerL: {
    out.a = out.b = static_cast<double>(l) * (l + 1.0);
    // unused: -b(2a+1) = c
    out.unused_residual = std::abs(-out.b * (2.0 * out.a + 1.0) - c);
    break;
  }
  }
  if (!(out.a > n)) throw InadmissibleError("branch yields a <= n");
  return out;
}

Complex z_function(int l, int m, double theta, double phi) {
  if (l < 0) throw DomainError("l must be nonnegative");
  const long long L = static_cast<long long>(l) * (l + 1);
  const long long n_ll = L - m;
  if (n_ll < 0) throw InadmissibleError("requires n = l(l+1) - m >= 0");
  if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta outside (0, pi)");
  const unsigned n = static_cast<unsigned>(n_ll);

  const DoublePoly R = romanovski_exact(2 * L + 1, -2 * L, n);
  const double x = -1.0 / std::tan(theta);
  // atan(-cot t) is already the continuous branch t - pi/2 on (0, pi).
  const double pref =
      std::exp(-0.5 * L * std::log1p(x * x) - L * std::atan(x));
  const double re = pref * R.eval(x);
  return Complex(re * std::cos(m * phi), re * std::sin(m * phi));
}

double z_function_theta_norm(int l, int m) {
  auto f = [l, m](double theta) {
    const Complex z = z_function(l, m, theta, 0.0);
    return std::norm(z) * std::sin(theta);
  };
  const auto qr = integrate(f, Interval::finite(1e-12, kPi - 1e-12), 1e-12);
  return std::sqrt(qr.value);
}

RatioReport legendre_relation_check(unsigned l, unsigned m,
                                    const std::vector<double>& grid) {
  if (m > l) throw DomainError("requires 0 <= m <= l");
  const DoublePoly R = romanovski_exact(2 * static_cast<long long>(l) + 1, 0, l - m);
  std::vector<double> ratios;
  double scale = 0.0;
  struct Sample {
    double p, rhs;
  };
  std::vector<Sample> samples;
  for (const double theta : grid) {
    const double x = -1.0 / std::tan(theta);
    const double p = assoc_legendre(l, static_cast<int>(m), std::cos(theta));
    const double rhs = std::pow(std::sin(theta), static_cast<double>(l)) * R.eval(x);
    samples.push_back({p, rhs});
    scale = std::max(scale, std::abs(p));
  }
  // skip shared zeros: both sides vanish together where P_l^m does
  for (const auto& s : samples)
    if (std::abs(s.p) > 1e-6 * scale) ratios.push_back(s.p / s.rhs);
  if (ratios.size() < 3)
    throw DomainError("grid hits zeros of P_l^m nearly everywhere; resample");
  RatioReport rep;
  rep.points_used = static_cast<unsigned>(ratios.size());
  for (const double r : ratios) rep.mean += r;
  rep.mean /= static_cast<double>(ratios.size());
  for (const double r : ratios)
    rep.max_rel_dev = std::max(rep.max_rel_dev, std::abs(r - rep.mean) / std::abs(rep.mean));
  return rep;
}

namespace {

// sqrt(w^{(l+1/2,0)}) R_{l-m} sqrt(w^{(l'+1/2,0)}) R_{l'-m} / (1+x^2)
std::function<double(double)> cross_integrand(unsigned l, unsigned lp, unsigned m) {
  const DoublePoly Rl = romanovski_exact(2 * static_cast<long long>(l) + 1, 0, l - m);
  const DoublePoly Rlp = romanovski_exact(2 * static_cast<long long>(lp) + 1, 0, lp - m);
  const double expo = -0.5 * (l + lp + 1.0) - 1.0;
  return [Rl, Rlp, expo](double x) {
    const double w = std::exp(expo * std::log1p(x * x));
    return w == 0.0 ? 0.0 : w * Rl.eval(x) * Rlp.eval(x);
  };
}

} // namespace

QuadResult infinite_orthogonality_integral(unsigned l, unsigned lp, unsigned m,
                                           double tol) {
  if (l == lp) throw DomainError("requires l != l'");
  if (m > std::min(l, lp)) throw DomainError("requires m <= min(l, l')");
  return integrate(cross_integrand(l, lp, m), Interval::real_line(), tol);
}

double infinite_orthogonality_normalized(unsigned l, unsigned lp, unsigned m,
                                         double tol) {
  const QuadResult cross = infinite_orthogonality_integral(l, lp, m, tol);
  const QuadResult nl = integrate(cross_integrand(l, l, m), Interval::real_line(), tol);
  const QuadResult nlp =
      integrate(cross_integrand(lp, lp, m), Interval::real_line(), tol);
  return std::abs(cross.value) / std::sqrt(nl.value * nlp.value);
}

double noncentral_radial_energy(unsigned n_r, double l) {
  const double N = n_r + l + 1.0;
  return -1.0 / (N * N);
}

AngularLabel su11_label(int l, int m) {
  if (l < 0) throw DomainError("l must be nonnegative");
  AngularLabel lab;
  lab.l = l;
  lab.m = m;
  lab.j = m + 0.5;
  lab.m_prime = static_cast<double>(l) * (l + 1) + 0.5;
  const long long n = static_cast<long long>(l) * (l + 1) - m;
  if (n < 0) throw InadmissibleError("requires n = l(l+1) - m >= 0");
  lab.n = static_cast<unsigned>(n);
  lab.eps = -(lab.j - 0.5) * (lab.j - 0.5);
  return lab;
}

} // namespace rompoly
