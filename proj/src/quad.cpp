#include "rompoly/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rompoly/errors.hpp"

namespace rompoly {

namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kTwoPi = 6.283185307179586;
constexpr double kTMax = 6.9;

// One node of the double-exponential transform: abscissa, weight, and the
// stable distances to the interval endpoints (finite case).
struct Node {
  double x;
  double w;
  double dist_a;
  double dist_b;
  bool usable;
};

Node make_node(const Interval& iv, double t) {
  Node nd{0.0, 0.0, 0.0, 0.0, true};
  const double u = kPiHalf * std::sinh(t);
  const double cosh_t = std::cosh(t);
  switch (iv.kind) {
  case Interval::Kind::Finite: {
    if (std::abs(u) > 350.0) { // sech^2 underflow; contribution gone
      nd.usable = false;
      return nd;
    }
    const double hw = 0.5 * (iv.b - iv.a);
    const double sech = 1.0 / std::cosh(u);
    nd.w = hw * kPiHalf * cosh_t * sech * sech;
    // 1 -+ tanh(u) without cancellation; the abscissa comes from the
    // nearer endpoint so it never rounds onto it
    nd.dist_b = hw * 2.0 / (std::exp(2.0 * u) + 1.0);
    nd.dist_a = hw * 2.0 / (std::exp(-2.0 * u) + 1.0);
    nd.x = u >= 0.0 ? iv.b - nd.dist_b : iv.a + nd.dist_a;
    break;
  }
  case Interval::Kind::HalfLine: {
    if (u > 700.0 || u < -700.0) {
      nd.usable = false;
      return nd;
    }
    const double eu = std::exp(u);
    nd.x = iv.a + eu;
    nd.w = kPiHalf * cosh_t * eu;
    nd.dist_a = eu;
    nd.dist_b = std::numeric_limits<double>::infinity();
    break;
  }
  case Interval::Kind::RealLine: {
    if (std::abs(u) > 700.0) {
      nd.usable = false;
      return nd;
    }
    nd.x = std::sinh(u);
    nd.w = kPiHalf * cosh_t * std::cosh(u);
    nd.dist_a = std::numeric_limits<double>::infinity();
    nd.dist_b = std::numeric_limits<double>::infinity();
    break;
  }
  }
  return nd;
}

} // namespace

QuadResult integrate_endpoints(const EndpointIntegrand& f, const Interval& iv,
                               const QuadOptions& opt) {
  const double h0 = 0.5;
  double total = 0.0;    // running node sum (unweighted by h)
  double total_abs = 0.0;
  double prev_estimate = std::numeric_limits<double>::quiet_NaN();

  QuadResult res;
  auto sample = [&](double t) -> double {
    const Node nd = make_node(iv, t);
    if (!nd.usable || nd.w == 0.0) return 0.0;
    const double fx = f(nd.x, nd.dist_a, nd.dist_b);
    if (!std::isfinite(fx)) {
      if (nd.w < 1e-280) return 0.0; // weight already negligible
      throw NonFiniteSampleError("integrand not finite at x = " + std::to_string(nd.x));
    }
    const double term = fx * nd.w;
    if (!std::isfinite(term)) throw NonFiniteSampleError("integrand overflow");
    return term;
  };

  for (int level = 0; level <= opt.max_levels; ++level) {
    const double h = h0 / static_cast<double>(1 << level);
    double level_sum = 0.0;
    if (level == 0) {
      level_sum += sample(0.0);
      total_abs += std::abs(level_sum);
      for (int side = -1; side <= 1; side += 2) {
        int quiet = 0;
        for (int j = 1;; ++j) {
          const double t = side * j * h;
          if (std::abs(t) > kTMax) break;
          const double term = sample(t);
          level_sum += term;
          total_abs += std::abs(term);
          if (std::abs(term) <= 1e-17 * std::max(total_abs, 1e-300)) {
            if (++quiet >= 2) break;
          } else {
            quiet = 0;
          }
        }
      }
      total = level_sum;
    } else {
      // only odd multiples of the new h are new nodes
      for (int side = -1; side <= 1; side += 2) {
        int quiet = 0;
        for (int j = 1;; j += 2) {
          const double t = side * j * h;
          if (std::abs(t) > kTMax) break;
          const double term = sample(t);
          level_sum += term;
          total_abs += std::abs(term);
          if (std::abs(term) <= 1e-17 * std::max(total_abs, 1e-300)) {
            if (++quiet >= 2) break;
          } else {
            quiet = 0;
          }
        }
      }
      total += level_sum;
    }

    const double estimate = h * total;
    res.levels_used = level + 1;
    if (level >= 2) {
      const double err = std::abs(estimate - prev_estimate);
      res.error_estimate = err;
      res.value = estimate;
      // strongly cancelling integrands bottom out at the round-off floor
      // of the absolute mass; that still counts as converged
      const double noise_floor = 32.0 * 2.2e-16 * h * total_abs;
      if (err <= std::max({opt.abs_tol, opt.rel_tol * std::abs(estimate),
                           noise_floor})) {
        res.converged = true;
        return res;
      }
    } else {
      res.value = estimate;
    }
    prev_estimate = estimate;
  }
  res.converged = false;
  return res;
}

QuadResult integrate(const std::function<double(double)>& f, const Interval& iv,
                     const QuadOptions& opt) {
  return integrate_endpoints([&f](double x, double, double) { return f(x); }, iv,
                             opt);
}

QuadResult integrate(const std::function<double(double)>& f, const Interval& iv,
                     double tol) {
  QuadOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = std::max(tol, 1e-12);
  return integrate(f, iv, opt);
}

double estimate_decay_exponent(const std::function<double(double)>& f) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int side = -1; side <= 1; side += 2) {
    std::vector<double> lx, ly;
    for (int j = 4; j <= 13; ++j) {
      const double x = side * std::ldexp(1.0, j);
      const double y = std::abs(f(x));
      if (!std::isfinite(y)) return 1e9; // overflowing tail
      if (y <= 0.0) continue;
      lx.push_back(std::log(std::abs(x)));
      ly.push_back(std::log(y));
    }
    if (lx.size() < 3) continue;
    // least-squares slope over the outermost samples
    const std::size_t k = std::min<std::size_t>(lx.size(), 5);
    const std::size_t off = lx.size() - k;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = off; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    const double nk = static_cast<double>(k);
    const double slope = (nk * sxy - sx * sy) / (nk * sxx - sx * sx);
    worst = std::max(worst, slope);
  }
  return worst;
}

double GramReport::off_diagonal_rel(unsigned n, unsigned m) const {
  const double dn = matrix[n][n].value, dm = matrix[m][m].value;
  return std::abs(matrix[n][m].value) / std::sqrt(dn * dm);
}

namespace {

// Weighted product integrand for one polynomial family, organized so that
// endpoint and tail evaluation stay finite (log-space weights, zero once
// the weight underflows).
std::function<double(double)> gram_integrand(const FamilySpec& fs,
                                             const DoublePoly& pn,
                                             const DoublePoly& pm) {
  const WeightSpec& ws = fs.weight();
  switch (ws.family()) {
  case Family::Hermite: {
    const double al = ws.param1().to_double();
    return [=](double x) {
      const double w = std::exp(-al * x * x);
      return w == 0.0 ? 0.0 : w * pn.eval(x) * pm.eval(x);
    };
  }
  case Family::Laguerre: {
    const double al = ws.param1().to_double(), be = ws.param2().to_double();
    return [=](double x) {
      const double w = std::exp(be * std::log(x) - al * x);
      return w == 0.0 ? 0.0 : w * pn.eval(x) * pm.eval(x);
    };
  }
  case Family::Romanovski: {
    const double p = ws.param1().to_double(), q = ws.param2().to_double();
    return [=](double x) {
      const double w = std::exp(-p * std::log1p(x * x) + q * std::atan(x));
      return w == 0.0 ? 0.0 : w * pn.eval(x) * pm.eval(x);
    };
  }
  default:
    throw DomainError("gram_integrand: unsupported family");
  }
}

} // namespace

GramReport gram_matrix(const FamilySpec& fs, unsigned nmax, double tol) {
  QuadOptions opt;
  opt.abs_tol = std::clamp(tol * 1e-3, 1e-14, 1e-8);
  opt.rel_tol = 1e-12;
  return gram_matrix(fs, nmax, tol, opt);
}

GramReport gram_matrix(const FamilySpec& fs, unsigned nmax, double tol,
                       const QuadOptions& opt) {
  const WeightSpec& ws = fs.weight();
  if (ws.family() == Family::Bessel)
    throw DomainError("Bessel polynomials are orthogonal on the unit circle only; "
                      "use bessel_circle_inner");
  (void)tol;

  GramReport rep;
  rep.family_name = fs.name();
  rep.nmax = nmax;
  rep.matrix.assign(nmax + 1, std::vector<QuadResult>(nmax + 1));
  rep.admissible.assign(nmax + 1, std::vector<bool>(nmax + 1, true));

  std::vector<DoublePoly> polys;
  for (unsigned n = 0; n <= nmax; ++n)
    polys.push_back(to_double_poly(family_poly(fs, n)));

  const bool romanovski = ws.family() == Family::Romanovski;
  const Rational bound =
      romanovski ? Rational(2) * ws.romanovski_p() - Rational(1) : Rational(0);

  for (unsigned n = 0; n <= nmax; ++n) {
    for (unsigned m = n; m <= nmax; ++m) {
      if (romanovski)
        rep.admissible[n][m] = rep.admissible[m][n] =
            Rational(static_cast<long long>(n + m)) < bound;

      QuadResult qr;
      if (ws.family() == Family::Jacobi) {
        // endpoint distances keep (1 -+ x)^alpha exact all the way into the
        // corners, which singular Chebyshev-type exponents need
        const double al = ws.param1().to_double(), be = ws.param2().to_double();
        const DoublePoly &pn = polys[n], &pm = polys[m];
        auto f = [=, &pn, &pm](double x, double da, double db) {
          const double w = std::exp(al * std::log(db) + be * std::log(da));
          return w == 0.0 || !std::isfinite(w) ? 0.0 : w * pn.eval(x) * pm.eval(x);
        };
        qr = integrate_endpoints(f, Interval::finite(-1.0, 1.0), opt);
      } else {
        auto f = gram_integrand(fs, polys[n], polys[m]);
        const Interval iv = ws.support() == Support::HalfLine
                                ? Interval::half_line(0.0)
                                : Interval::real_line();
        if (iv.kind == Interval::Kind::RealLine && romanovski) {
          const double s = estimate_decay_exponent(f);
          // true tail exponents here are integers, so a generous margin
          // around the s = -1 divergence boundary is safe
          if (s >= -1.5) {
            qr.value = std::numeric_limits<double>::quiet_NaN();
            qr.converged = false;
            rep.matrix[n][m] = rep.matrix[m][n] = qr;
            continue;
          }
        }
        qr = integrate(f, iv, opt);
      }
      rep.matrix[n][m] = rep.matrix[m][n] = qr;
    }
  }
  return rep;
}

double romanovski_norm_closed(double a, unsigned n) {
  const double sqrt_pi = std::sqrt(4.0 * std::atan(1.0));
  switch (n) {
  case 1: {
    if (!(a > 1.0)) throw DomainError("norm line n=1 requires a > 1");
    const double c = 2.0 * a - 1.0;
    return c * c * sqrt_pi * gamma_fn(a - 1.0) / (2.0 * gamma_fn(a + 0.5));
  }
  case 2: {
    if (!(a > 2.0)) throw DomainError("norm line n=2 requires a > 2");
    const double c = 3.0 - 2.0 * a;
    return 2.0 * sqrt_pi * (a - 1.0) * gamma_fn(a - 2.0) / gamma_fn(a - 0.5) * c * c;
  }
  case 3: {
    if (!(a > 3.0)) throw DomainError("norm line n=3 requires a > 3");
    const double c = 4.0 * a * a - 16.0 * a + 15.0;
    return 3.0 * sqrt_pi * (a - 2.0) * gamma_fn(a - 3.0) / gamma_fn(a - 0.5) * c * c;
  }
  default:
    throw DomainError("closed-form norms exist for n in {1,2,3}");
  }
}

Complex bessel_circle_inner(unsigned m, unsigned n, unsigned nodes) {
  if (nodes < 64 || (nodes & (nodes - 1)) != 0)
    throw DomainError("nodes must be a power of two, at least 64");
  const RationalPoly ym = family_poly(FamilySpec::bessel(Rational(2), Rational(2)), m);
  const RationalPoly yn = family_poly(FamilySpec::bessel(Rational(2), Rational(2)), n);
  Complex acc = 0.0;
  for (unsigned j = 0; j < nodes; ++j) {
    const double phi = kTwoPi * j / nodes;
    const Complex x(std::cos(phi), std::sin(phi));
    const Complex f = eval_complex(ym, x) * eval_complex(yn, x) * std::exp(-2.0 / x);
    acc += f * Complex(0.0, 1.0) * x; // dx = i e^{i phi} dphi
  }
  return acc * (kTwoPi / nodes);
}

double gamma_fn(double x) {
  static const double g_coef[9] = {
      0.99999999999980993,   676.5203681218851,    -1259.1392167224028,
      771.32342877765313,    -176.61502916214059,  12.507343278686905,
      -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = 4.0 * std::atan(1.0);
  if (x <= 0.0 && x == std::floor(x))
    throw PoleError("gamma pole at nonpositive integer");
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  x -= 1.0;
  double acc = g_coef[0];
  for (int i = 1; i < 9; ++i) acc += g_coef[i] / (x + i);
  const double t = x + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace rompoly
