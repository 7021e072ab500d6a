#ifndef ROMPOLY_MASTERFORMULA_HPP
#define ROMPOLY_MASTERFORMULA_HPP

#include <vector>

#include "rompoly/hyperclass.hpp"

namespace rompoly {

// Monic degree-n solution of the hypergeometric equation, built from
// terminating Gauss sums independently of the Rodrigues engine.
struct MonicCoeffs {
  unsigned n = 0;
  std::vector<double> coeffs; // ascending; leading coefficient is 1
  double max_imag = 0.0;      // largest |Im| dropped from the complex sums
  Complex discriminant_root;  // principal sqrt(b^2 - 4ac)
};

// Terminating 2F1 with nonpositive-integer first parameter: the series is
// the finite sum of |neg_int_a|+1 terms. Throws PoleInCError when a
// denominator factor (C)_j vanishes inside the truncated range.
Complex gauss2f1_terminating(int neg_int_a, Complex B, Complex C, Complex z);

// Koepf-Masjed-Jamei master formula for a != 0. Coefficient k of the monic
// polynomial is C(n,k) ((b+s)/(2a))^{n-k} 2F1(k-n, (2ae-bd)/(2as)+1-d/(2a)-n;
// 2-d/a-2n; 2s/(b+s)) with s the principal sqrt of b^2-4ac, evaluated in
// complex arithmetic throughout. The double-root case s = 0 (Bessel) is the
// degenerate limit and is built from the equivalent terminating descending
// recurrence on the monic coefficients. Throws ZeroLeadingTermError on
// eigenvalue collisions and DomainError when a = 0.
MonicCoeffs monic_master(const HyperParams& hp, unsigned n);

// Jacobi P_n^{(alpha,beta)}(z) for complex parameters and argument, via the
// terminating hypergeometric representation
//   P_n = ((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1; alpha+1; (1-z)/2).
Complex jacobi_complex(unsigned n, Complex alpha, Complex beta, Complex z);

} // namespace rompoly

#endif
