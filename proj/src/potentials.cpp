#include "rompoly/potentials.hpp"

#include <cmath>

#include "rompoly/errors.hpp"

namespace rompoly {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

// Exact rational from a double that is a ratio of small integers, so that
// rational potential parameters take the exact polynomial path.
std::optional<Rational> to_small_rational(double v) {
  for (long long den = 1; den <= 64; ++den) {
    const double scaled = v * static_cast<double>(den);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) < 1e-12 && std::abs(rounded) < 1e15)
      return Rational(static_cast<long long>(rounded), den);
  }
  return std::nullopt;
}

// Romanovski R_n^{(p,q)} coefficients, exact when (p,q) are small rationals.
DoublePoly romanovski_poly_auto(double p, double q, unsigned n) {
  const auto pr = to_small_rational(p);
  const auto qr = to_small_rational(q);
  if (pr && qr)
    return to_double_poly(rodrigues_raw(WeightSpec::romanovski(*pr, *qr), n));
  return romanovski_poly_d(p, q, n);
}

DoublePoly jacobi_poly_auto(double alpha, double beta, unsigned n) {
  const auto ar = to_small_rational(alpha);
  const auto br = to_small_rational(beta);
  if (ar && br)
    return to_double_poly(family_poly(FamilySpec::jacobi(*ar, *br), n));
  return jacobi_poly_d(alpha, beta, n);
}

} // namespace

std::string to_string(PotentialKind k) {
  switch (k) {
  case PotentialKind::Oscillator1D: return "oscillator1d";
  case PotentialKind::Oscillator3D: return "oscillator3d";
  case PotentialKind::Coulomb: return "coulomb";
  case PotentialKind::Morse: return "morse";
  case PotentialKind::ScarfII: return "scarf2";
  case PotentialKind::RosenMorseII: return "rosen_morse2";
  case PotentialKind::Eckart: return "eckart";
  case PotentialKind::ScarfI: return "scarf1";
  case PotentialKind::PoschlTeller2: return "poschl_teller2";
  case PotentialKind::RosenMorseI: return "rosen_morse1";
  case PotentialKind::ExpBarrier: return "exp_barrier";
  }
  return "?";
}

PotentialSpec PotentialSpec::oscillator1d(double omega, double shift) {
  require_positive(omega, "omega");
  return {PotentialKind::Oscillator1D, omega, shift, 0.0, 0};
}

PotentialSpec PotentialSpec::oscillator3d(int l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  return {PotentialKind::Oscillator3D, 0.0, 0.0, 0.0, l};
}

PotentialSpec PotentialSpec::coulomb(double Z, int l) {
  require_positive(Z, "Z");
  if (l < 0) throw DomainError("l must be nonnegative");
  return {PotentialKind::Coulomb, Z, 0.0, 0.0, l};
}

PotentialSpec PotentialSpec::morse(double A, double B, double alpha) {
  require_positive(A, "A");
  require_positive(B, "B");
  require_positive(alpha, "alpha");
  return {PotentialKind::Morse, A, B, alpha, 0};
}

PotentialSpec PotentialSpec::scarf2(double a, double b, double alpha) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(alpha, "alpha");
  return {PotentialKind::ScarfII, a, b, alpha, 0};
}

PotentialSpec PotentialSpec::rosen_morse2(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return {PotentialKind::RosenMorseII, a, b, 1.0, 0};
}

PotentialSpec PotentialSpec::eckart(double A, double B, double alpha) {
  require_positive(A, "A");
  require_positive(B, "B");
  require_positive(alpha, "alpha");
  return {PotentialKind::Eckart, A, B, alpha, 0};
}

PotentialSpec PotentialSpec::scarf1(double a, double b, double alpha) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(alpha, "alpha");
  return {PotentialKind::ScarfI, a, b, alpha, 0};
}

PotentialSpec PotentialSpec::poschl_teller2(double A, double B, double alpha) {
  require_positive(A, "A");
  require_positive(B, "B");
  require_positive(alpha, "alpha");
  return {PotentialKind::PoschlTeller2, A, B, alpha, 0};
}

PotentialSpec PotentialSpec::rosen_morse1(int l, double b) {
  if (l < 0) throw DomainError("l must be nonnegative");
  require_positive(b, "b");
  return {PotentialKind::RosenMorseI, b, 0.0, 0.0, l};
}

PotentialSpec PotentialSpec::exp_barrier(double A, double rate) {
  require_positive(A, "A");
  require_positive(rate, "rate");
  return {PotentialKind::ExpBarrier, A, rate, 0.0, 0};
}

double potential_value(const PotentialSpec& ps, double z) {
  const auto sech = [](double y) { return 1.0 / std::cosh(y); };
  switch (ps.kind) {
  case PotentialKind::Oscillator1D: {
    const double w = ps.p1, y = z - 2.0 * ps.p2 / w;
    return 0.25 * w * w * y * y - 0.5 * w;
  }
  case PotentialKind::Oscillator3D: {
    if (!(z > 0.0)) throw DomainError("radial domain z > 0");
    return z * z + ps.l * (ps.l + 1.0) / (z * z);
  }
  case PotentialKind::Coulomb: {
    if (!(z > 0.0)) throw DomainError("radial domain z > 0");
    return -2.0 * ps.p1 / z + ps.l * (ps.l + 1.0) / (z * z);
  }
  case PotentialKind::Morse: {
    const double A = ps.p1, B = ps.p2, al = ps.p3;
    return A * A + B * B * std::exp(-2.0 * al * z) -
           2.0 * B * (A + 0.5 * al) * std::exp(-al * z);
  }
  case PotentialKind::ScarfII: {
    const double a = ps.p1, b = ps.p2, al = ps.p3;
    const double s = 1.0 / std::cosh(al * z), t = std::tanh(al * z);
    return a * a + (b * b - a * a - a * al) * s * s + b * (2.0 * a + al) * s * t;
  }
  case PotentialKind::RosenMorseII: {
    const double a = ps.p1, b = ps.p2;
    const double s = sech(z);
    return a * a + b * b / (a * a) - a * (a + 1.0) * s * s + 2.0 * b * std::tanh(z);
  }
  case PotentialKind::Eckart: {
    const double A = ps.p1, B = ps.p2, al = ps.p3;
    if (!(z > 0.0)) throw DomainError("Eckart domain z > 0");
    const double cth = 1.0 / std::tanh(al * z), csch = 1.0 / std::sinh(al * z);
    return A * A + B * B / (A * A) - 2.0 * B * cth + A * (A - al) * csch * csch;
  }
  case PotentialKind::ScarfI: {
    const double a = ps.p1, b = ps.p2, al = ps.p3;
    const double lim = 0.5 * 3.141592653589793 / al;
    if (!(z > -lim && z < lim)) throw DomainError("Scarf I domain |alpha z| < pi/2");
    const double sec = 1.0 / std::cos(al * z), tan = std::tan(al * z);
    return -a * a + (a * a + b * b - a * al) * sec * sec -
           b * (2.0 * a + al) * tan * sec;
  }
  case PotentialKind::PoschlTeller2: {
    const double A = ps.p1, B = ps.p2, al = ps.p3;
    if (!(z > 0.0)) throw DomainError("Poschl-Teller 2 domain z > 0");
    const double csch = 1.0 / std::sinh(al * z), cth = 1.0 / std::tanh(al * z);
    return A * A + (B * B + A * A + A * al) * csch * csch -
           B * (2.0 * A + al) * cth * csch;
  }
  case PotentialKind::RosenMorseI: {
    const double b = ps.p1;
    if (!(z > 0.0 && z < 3.141592653589793))
      throw DomainError("Rosen-Morse I domain z in (0, pi)");
    const double s = std::sin(z);
    return -2.0 * b * std::cos(z) / s + ps.l * (ps.l + 1.0) / (s * s);
  }
  case PotentialKind::ExpBarrier:
    return ps.p1 * std::exp(ps.p2 * z);
  }
  throw DomainError("unknown potential");
}

std::optional<unsigned> bound_state_count(const PotentialSpec& ps) {
  switch (ps.kind) {
  case PotentialKind::ScarfII: {
    // n = 0,1,... < a/alpha
    const double r = ps.p1 / ps.p3;
    const double c = std::ceil(r);
    return static_cast<unsigned>(c == r ? r : c);
  }
  case PotentialKind::RosenMorseII: {
    const double edge = ps.p1 - std::sqrt(ps.p2);
    if (edge <= 0.0) return 0u;
    const double c = std::ceil(edge);
    return static_cast<unsigned>(c == edge ? edge : c);
  }
  default:
    return std::nullopt; // unbounded or catalog-only
  }
}

std::vector<SpectrumEntry> spectrum(const PotentialSpec& ps, unsigned nmax) {
  std::vector<SpectrumEntry> out;
  const auto count = bound_state_count(ps);
  if (count && nmax >= *count)
    throw AdmissibilityError("nmax " + std::to_string(nmax) +
                             " exceeds the bound-state count " +
                             std::to_string(*count));
  for (unsigned n = 0; n <= nmax; ++n) {
    SpectrumEntry ent;
    ent.n = n;
    switch (ps.kind) {
    case PotentialKind::Oscillator1D:
      ent.energy = n * ps.p1;
      break;
    case PotentialKind::Oscillator3D:
      ent.energy = 2.0 * (2.0 * n + ps.l + 1.5);
      break;
    case PotentialKind::Coulomb:
      ent.energy = -ps.p1 * ps.p1 / ((n + ps.l + 1.0) * (n + ps.l + 1.0));
      break;
    case PotentialKind::ScarfII: {
      const double a = ps.p1, al = ps.p3;
      const double eps = -(a - n * al) * (a - n * al);
      ent.energy = a * a + eps;
      ent.energy_alt = eps;
      break;
    }
    case PotentialKind::RosenMorseII:
      ent.energy = rosen_morse2_params(ps.p1, ps.p2, n).e;
      break;
    case PotentialKind::RosenMorseI: {
      const double p = n + ps.l + 1.0, b = ps.p1;
      ent.energy = p * p - b * b / (p * p);
      break;
    }
    case PotentialKind::ExpBarrier:
      // dimensionless Bessel eigenvalue; the z-space constant is
      // (rate^2/4) e_n, see exp_barrier_wavefunction
      ent.energy = 0.25 + n * (n + 1.0);
      ent.energy_alt = 0.25 * ps.p2 * ps.p2 * ent.energy;
      break;
    case PotentialKind::Morse:
    case PotentialKind::Eckart:
    case PotentialKind::ScarfI:
    case PotentialKind::PoschlTeller2:
      throw AdmissibilityError(to_string(ps.kind) +
                               " is catalog-only; no verified spectrum here");
    }
    out.push_back(ent);
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, unsigned count) {
  std::vector<double> xs;
  if (count == 0) return xs;
  if (count == 1) {
    xs.push_back(lo);
    return xs;
  }
  xs.reserve(count);
  for (unsigned i = 0; i < count; ++i)
    xs.push_back(lo + (hi - lo) * i / (count - 1));
  return xs;
}

WaveFunction scarf2_wavefunction(double a, double b, unsigned n) {
  require_positive(a, "a");
  if (!(n < a))
    throw AdmissibilityError("Scarf II bound states require n < a");
  const DoublePoly R = romanovski_poly_auto(a + 0.5, -2.0 * b, n);
  const double eps = -(a - n) * (a - n);

  WaveFunction wf;
  wf.potential = {PotentialKind::ScarfII, a, b, 1.0, 0};
  wf.n = n;
  wf.energy = eps;
  wf.domain_lo = -6.0;
  wf.domain_hi = 6.0;
  wf.eval = [a, b, R](double x) {
    const Jet X = jet_var(x);
    const Jet S = 1.0 + X * X;
    const Jet pref = jet_exp(-0.5 * a * jet_log(S) - b * jet_atan(X));
    return pref * jet_poly(R, X);
  };
  // x-space operator: (1+x^2) g'' + x g' + ((a(a+1)-b^2 - b(2a+1)x)/(1+x^2) + eps) g
  wf.residual_raw = [a, b, eps, eval = wf.eval](double x) {
    const Jet g = eval(x);
    const double s = 1.0 + x * x;
    return s * g.d2 + x * g.d1 +
           ((a * (a + 1.0) - b * b - b * (2.0 * a + 1.0) * x) / s + eps) * g.f;
  };
  return wf;
}

WaveFunction rosen_morse1_wavefunction(int l, double b, unsigned n) {
  if (l < 0) throw DomainError("l must be nonnegative");
  const double p = n + l + 1.0;
  const double q = -2.0 * b / p;
  const DoublePoly R = romanovski_poly_auto(p, q, n);
  const double eps = p * p - b * b / (p * p);

  WaveFunction wf;
  wf.potential = PotentialSpec::rosen_morse1(l, b);
  wf.n = n;
  wf.energy = eps;
  wf.domain_lo = 0.05;
  wf.domain_hi = 3.141592653589793 - 0.05;
  const double ll = static_cast<double>(l);
  // with q_n = -2b/p_n the polynomial argument is -cot z (the q_n = +2b/p_n
  // convention at +cot z is the same function)
  wf.eval = [p, b, R](double z) {
    const Jet Z = jet_var(z);
    const Jet s = jet_sin(Z);
    const Jet x = -(jet_cos(Z) / s);
    const Jet pref = jet_exp(p * jet_log(s) - (b / p) * Z);
    return pref * jet_poly(R, x);
  };
  wf.residual_raw = [ll, b, eps, eval = wf.eval](double z) {
    const Jet psi = eval(z);
    const double s = std::sin(z);
    const double v = -2.0 * b * std::cos(z) / s + ll * (ll + 1.0) / (s * s);
    return -psi.d2 + (v - eps) * psi.f;
  };
  return wf;
}

RosenMorse2Params rosen_morse2_params(double a, double b, unsigned n) {
  if (std::abs(static_cast<double>(n) - a) < 1e-14)
    throw PoleError("running parameters have a pole at n = a");
  RosenMorse2Params out;
  const double d = static_cast<double>(n) - a;
  out.mu = a - n + b / d;
  out.nu = a - n - b / d;
  out.e = b * b / (a * a) - d * d - b * b / (d * d);
  return out;
}

WaveFunction rosen_morse2_wavefunction(double a, double b, unsigned n) {
  const auto cnt = bound_state_count(PotentialSpec::rosen_morse2(a, b));
  if (cnt && n >= *cnt)
    throw AdmissibilityError("Rosen-Morse II bound states require n < a - sqrt(b)");
  const auto prm = rosen_morse2_params(a, b, n);
  // The sech^2/tanh singular-term conditions pair the (1-x) exponent with
  // nu_n and the (1+x) exponent with mu_n, and the Jacobi index order
  // follows the weight: P_n^{(nu, mu)}.
  const DoublePoly P = jacobi_poly_auto(prm.nu, prm.mu, n);
  // Total eigenvalue of -R'' + v R with the full potential constant.
  const double eps = a * a + prm.e;

  WaveFunction wf;
  wf.potential = PotentialSpec::rosen_morse2(a, b);
  wf.n = n;
  wf.energy = eps;
  wf.domain_lo = -5.0;
  wf.domain_hi = 5.0;
  const double mu = prm.mu, nu = prm.nu;
  wf.eval = [mu, nu, P](double z) {
    const Jet x = jet_tanh(jet_var(z));
    const Jet pref = jet_exp(0.5 * nu * jet_log(1.0 - x) + 0.5 * mu * jet_log(1.0 + x));
    return pref * jet_poly(P, x);
  };
  wf.residual_raw = [a, b, eps, eval = wf.eval](double z) {
    const Jet psi = eval(z);
    const double s = 1.0 / std::cosh(z);
    const double v =
        a * a + b * b / (a * a) - a * (a + 1.0) * s * s + 2.0 * b * std::tanh(z);
    return -psi.d2 + (v - eps) * psi.f;
  };
  return wf;
}

WaveFunction oscillator1d_wavefunction(double omega, double shift, unsigned n) {
  require_positive(omega, "omega");
  const DoublePoly H = to_double_poly(family_poly(FamilySpec::hermite(), n));
  const double e = n * omega;

  WaveFunction wf;
  wf.potential = PotentialSpec::oscillator1d(omega, shift);
  wf.n = n;
  wf.energy = e;
  wf.domain_lo = -6.0;
  wf.domain_hi = 6.0;
  const double scale = std::sqrt(0.5 * omega), z0 = 2.0 * shift / omega;
  wf.eval = [scale, z0, H](double z) {
    const Jet y = scale * (jet_var(z) - z0);
    return jet_exp(-0.5 * y * y) * jet_poly(H, y);
  };
  wf.residual_raw = [omega, shift, e, eval = wf.eval](double z) {
    const Jet psi = eval(z);
    const double y = z - 2.0 * shift / omega;
    const double v = 0.25 * omega * omega * y * y - 0.5 * omega;
    return -psi.d2 + (v - e) * psi.f;
  };
  return wf;
}

WaveFunction oscillator3d_wavefunction(unsigned n, unsigned l) {
  const DoublePoly L =
      to_double_poly(family_poly(FamilySpec::laguerre(Rational(2 * l + 1, 2)), n));
  const double eps = 2.0 * (2.0 * n + l + 1.5);

  WaveFunction wf;
  wf.potential = PotentialSpec::oscillator3d(static_cast<int>(l));
  wf.n = n;
  wf.energy = eps;
  wf.domain_lo = 0.05;
  wf.domain_hi = 6.0;
  const double ll = l;
  wf.eval = [ll, L](double z) {
    const Jet Z = jet_var(z);
    const Jet u = Z * Z;
    return jet_exp((ll + 1.0) * jet_log(Z) - 0.5 * u) * jet_poly(L, u);
  };
  wf.residual_raw = [ll, eps, eval = wf.eval](double z) {
    const Jet R = eval(z);
    const double v = z * z + ll * (ll + 1.0) / (z * z);
    return -R.d2 + (v - eps) * R.f;
  };
  return wf;
}

WaveFunction hydrogen_wavefunction(unsigned n, unsigned l) {
  const DoublePoly L = to_double_poly(
      family_poly(FamilySpec::laguerre(Rational(2 * static_cast<long long>(l) + 1)), n));
  const double eps = -1.0 / ((n + l + 1.0) * (n + l + 1.0));
  const double kappa = 2.0 * std::sqrt(-eps); // 2/(n+l+1)

  WaveFunction wf;
  wf.potential = PotentialSpec::coulomb(1.0, static_cast<int>(l));
  wf.n = n;
  wf.energy = eps;
  wf.domain_lo = 0.1;
  wf.domain_hi = 8.0 * (n + l + 1.0);
  const double ll = l;
  wf.eval = [ll, kappa, L](double z) {
    const Jet u = kappa * jet_var(z);
    return jet_exp((ll + 1.0) * jet_log(u) - 0.5 * u) * jet_poly(L, u);
  };
  wf.residual_raw = [ll, eps, eval = wf.eval](double z) {
    const Jet R = eval(z);
    const double v = -2.0 / z + ll * (ll + 1.0) / (z * z);
    return -R.d2 + (v - eps) * R.f;
  };
  return wf;
}

WaveFunction exp_barrier_wavefunction(double A, double rate, unsigned n) {
  require_positive(A, "A");
  require_positive(rate, "rate");
  const DoublePoly y =
      to_double_poly(family_poly(FamilySpec::bessel(Rational(2), Rational(2)), n));
  const double e = 0.25 + n * (n + 1.0);

  // In x = (rate/(2 sqrt(A))) exp(-rate z / 2) the equation becomes
  // x^2 g'' + x g' - (e + 1/x^2) g = 0, solved by e^{-1/x} sqrt(x) y_n(x);
  // equivalently R(z) is the elementary Macdonald function K_{n+1/2} of
  // argument (2 sqrt(A)/rate) e^{rate z/2}.
  const double scale = 0.5 * rate / std::sqrt(A);

  WaveFunction wf;
  wf.potential = PotentialSpec::exp_barrier(A, rate);
  wf.n = n;
  wf.energy = e;
  wf.domain_lo = -2.0;
  wf.domain_hi = 2.0;
  wf.eval = [rate, scale, y](double z) {
    const Jet x = scale * jet_exp(-0.5 * rate * jet_var(z));
    return jet_exp(-1.0 / x) * jet_sqrt(x) * jet_poly(y, x);
  };
  // -R'' + (A e^{rate z} + (rate^2/4) e) R = 0
  wf.residual_raw = [A, rate, e, eval = wf.eval](double z) {
    const Jet R = eval(z);
    return -R.d2 + (A * std::exp(rate * z) + 0.25 * rate * rate * e) * R.f;
  };
  return wf;
}

WaveFunction make_wavefunction(const PotentialSpec& ps, unsigned n) {
  switch (ps.kind) {
  case PotentialKind::Oscillator1D:
    return oscillator1d_wavefunction(ps.p1, ps.p2, n);
  case PotentialKind::Oscillator3D:
    return oscillator3d_wavefunction(n, static_cast<unsigned>(ps.l));
  case PotentialKind::Coulomb:
    if (std::abs(ps.p1 - 1.0) > 1e-14)
      throw DomainError("assembled Coulomb wavefunctions use Z = 1");
    return hydrogen_wavefunction(n, static_cast<unsigned>(ps.l));
  case PotentialKind::ScarfII:
    if (std::abs(ps.p3 - 1.0) > 1e-14)
      throw DomainError("assembled Scarf II wavefunctions use alpha = 1");
    return scarf2_wavefunction(ps.p1, ps.p2, n);
  case PotentialKind::RosenMorseII:
    return rosen_morse2_wavefunction(ps.p1, ps.p2, n);
  case PotentialKind::RosenMorseI:
    return rosen_morse1_wavefunction(ps.l, ps.p1, n);
  case PotentialKind::ExpBarrier:
    return exp_barrier_wavefunction(ps.p1, ps.p2, n);
  default:
    throw AdmissibilityError(to_string(ps.kind) + " is catalog-only; no "
                             "residual-verified wavefunction assembly");
  }
}

std::vector<double> schrodinger_residual(const WaveFunction& wf,
                                         const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) {
    const double raw = wf.residual_raw(x);
    const double psi = wf.eval(x).f;
    out.push_back(std::abs(raw) /
                  (std::max(std::abs(psi), 1e-300) * (1.0 + std::abs(wf.energy))));
  }
  return out;
}

double susy_superpotential_antiderivative(double a, double b, double z) {
  const double gd = 2.0 * std::atan(std::tanh(0.5 * z));
  return a * std::log(std::cosh(z)) + b * gd;
}

double susy_ground_state_check(double a, double b,
                               const std::vector<double>& grid) {
  require_positive(a, "a");
  const WaveFunction g0 = scarf2_wavefunction(a, b, 0);
  std::vector<double> ratios;
  ratios.reserve(grid.size());
  for (const double z : grid) {
    const double susy = std::exp(-susy_superpotential_antiderivative(a, b, z));
    const double ref = g0.eval(std::sinh(z)).f;
    ratios.push_back(susy / ref);
  }
  double mean = 0.0;
  for (const double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double dev = 0.0;
  for (const double r : ratios) dev = std::max(dev, std::abs(r - mean) / std::abs(mean));
  return dev;
}

namespace {

// f(u) = u^4 - 2 mu u^2 - 2 A n u + n^2; roots u >= 0 give E = u^2 - mu.
double kg_quartic(double u, double mu, double A, double n) {
  return ((u * u - 2.0 * mu) * u - 2.0 * A * n) * u + n * n;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

KGLevel klein_gordon_energies(const KGParams& kg, unsigned n) {
  require_positive(kg.mu, "mu");
  if (kg.A < 0.0) throw DomainError("A must be nonnegative");
  const double A = kg.A, mu = kg.mu, nn = n;

  if (n == 0) {
    // u^2 (u^2 - 2 mu) = 0: E in {mu, -mu} for any coupling.
    return {mu, -mu};
  }
  if (A == 0.0) {
    // biquadratic: u^2 = mu +- sqrt(mu^2 - n^2)
    const double disc = mu * mu - nn * nn;
    if (disc < 0.0)
      throw ComplexRootError("no real Klein-Gordon level for n = " + std::to_string(n));
    return {std::sqrt(disc), -std::sqrt(disc)};
  }
  auto f = [&](double u) { return kg_quartic(u, mu, A, nn); };
  // f(0) = n^2 > 0 and f'(0) < 0: the two nonnegative roots straddle the
  // positive critical point of f, found from f' = 4u^3 - 4 mu u - 2 A n.
  auto fp = [&](double u) { return 4.0 * u * u * u - 4.0 * mu * u - 2.0 * A * nn; };
  double hi = 1.0;
  while (fp(hi) < 0.0) hi *= 2.0;
  const double ustar = bisect(fp, 0.0, hi);
  if (f(ustar) > 0.0)
    throw ComplexRootError("no real Klein-Gordon level for n = " + std::to_string(n));
  double top = std::max(ustar * 2.0, 1.0);
  while (f(top) < 0.0) top *= 2.0;
  const double u_small = bisect(f, 0.0, ustar);
  const double u_large = bisect(f, ustar, top);
  return {u_large * u_large - mu, u_small * u_small - mu};
}

KGDerived klein_gordon_match(const KGParams& kg, double E) {
  if (E + kg.mu < 0.0) throw DomainError("E + mu must be nonnegative");
  KGDerived out;
  const double s = std::sqrt(E + kg.mu);
  out.a = kg.A * s;
  out.b = (E + kg.mu) * kg.B * (2.0 * kg.A + 1.0) / (2.0 * out.a + 1.0);
  out.eps = (E + kg.mu) * (E - kg.mu - kg.A * kg.A);
  return out;
}

double klein_gordon_residual(const KGParams& kg, unsigned n, double E) {
  const KGDerived m = klein_gordon_match(kg, E);
  const double eps_level = -(m.a - n) * (m.a - n);
  return std::abs(eps_level - m.eps) / (1.0 + std::abs(m.eps));
}

} // namespace rompoly
