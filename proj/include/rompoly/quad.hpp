#ifndef ROMPOLY_QUAD_HPP
#define ROMPOLY_QUAD_HPP

#include <functional>
#include <utility>
#include <vector>

#include "rompoly/rodrigues.hpp"

namespace rompoly {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int levels_used = 0;
};

struct Interval {
  enum class Kind { Finite, HalfLine, RealLine } kind;
  double a = 0.0;
  double b = 0.0;

  static Interval finite(double a, double b) { return {Kind::Finite, a, b}; }
  static Interval half_line(double a) { return {Kind::HalfLine, a, 0.0}; }
  static Interval real_line() { return {Kind::RealLine, 0.0, 0.0}; }
};

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_levels = 12;
};

// Double-exponential (tanh-sinh family) quadrature with trapezoid level
// doubling. Integrable endpoint singularities are fine; converged=false
// signals failed contraction after max_levels.
QuadResult integrate(const std::function<double(double)>& f, const Interval& iv,
                     const QuadOptions& opt);
QuadResult integrate(const std::function<double(double)>& f, const Interval& iv,
                     double tol);

// Variant receiving the exact distances to the interval endpoints along
// with the abscissa, so weights singular at an endpoint can be evaluated
// without cancellation, e.g. (1-x)^(-1/2) as pow(dist_b, -1/2).
using EndpointIntegrand = std::function<double(double x, double dist_a, double dist_b)>;
QuadResult integrate_endpoints(const EndpointIntegrand& f, const Interval& iv,
                               const QuadOptions& opt);

// Least-squares estimate of s in |f(x)| ~ x^s from samples at x = +-2^j.
// Returns the slower-decaying side. Infinite decay comes back very negative.
double estimate_decay_exponent(const std::function<double(double)>& f);

struct GramReport {
  std::string family_name;
  unsigned nmax = 0;
  std::vector<std::vector<QuadResult>> matrix;
  std::vector<std::vector<bool>> admissible;

  // |<n,m>| / sqrt(<n,n><m,m>)
  double off_diagonal_rel(unsigned n, unsigned m) const;
};

// All pairwise weighted polynomial inner products up to nmax. For the
// Romanovski family the admissible set is {(n,m): n+m < 2p-1}; pairs whose
// integrand decays like x^s with s >= -1 are flagged divergent without
// being integrated. tol is the orthogonality threshold the report is read
// against; the inner quadrature runs a few digits tighter than that (or at
// the explicitly supplied options).
GramReport gram_matrix(const FamilySpec& fs, unsigned nmax, double tol);
GramReport gram_matrix(const FamilySpec& fs, unsigned nmax, double tol,
                       const QuadOptions& opt);

// Closed-form squared norms of the q = 0 Romanovski polynomials
// R_n^{(a+1/2,0)}, n in {1,2,3}; each line is valid for a > n.
double romanovski_norm_closed(double a, unsigned n);

// Contour inner product of two Bessel polynomials over the unit circle
// against exp(-2/x), via the periodic trapezoid rule. nodes must be a
// power of two, at least 64.
Complex bessel_circle_inner(unsigned m, unsigned n, unsigned nodes);

// Lanczos gamma, relative error below 1e-12 on (0, 50]; reflection for
// x < 0.5; PoleError at nonpositive integers.
double gamma_fn(double x);

} // namespace rompoly

#endif
