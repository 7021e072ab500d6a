#ifndef ROMPOLY_JET_HPP
#define ROMPOLY_JET_HPP

#include <cmath>

#include "rompoly/poly.hpp"

namespace rompoly {

// Value with first and second derivative; the product/chain rules below
// propagate them exactly, so closed-form wavefunctions get analytic
// derivatives without any finite differencing.
struct Jet {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

inline Jet jet_const(double c) { return {c, 0.0, 0.0}; }
inline Jet jet_var(double x) { return {x, 1.0, 0.0}; }

inline Jet operator+(const Jet& a, const Jet& b) {
  return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2};
}
inline Jet operator-(const Jet& a, const Jet& b) {
  return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2};
}
inline Jet operator-(const Jet& a) { return {-a.f, -a.d1, -a.d2}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.f * b.f, a.d1 * b.f + a.f * b.d1,
          a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}
inline Jet operator*(double s, const Jet& a) { return {s * a.f, s * a.d1, s * a.d2}; }
inline Jet operator*(const Jet& a, double s) { return s * a; }
inline Jet operator/(const Jet& a, const Jet& b) {
  const double inv = 1.0 / b.f;
  const double f = a.f * inv;
  const double d1 = (a.d1 - f * b.d1) * inv;
  const double d2 = (a.d2 - 2.0 * d1 * b.d1 - f * b.d2) * inv;
  return {f, d1, d2};
}
inline Jet operator+(const Jet& a, double c) { return {a.f + c, a.d1, a.d2}; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return {a.f - c, a.d1, a.d2}; }
inline Jet operator-(double c, const Jet& a) { return {c - a.f, -a.d1, -a.d2}; }
inline Jet operator/(const Jet& a, double s) { return (1.0 / s) * a; }
inline Jet operator/(double c, const Jet& b) {
  const double inv = 1.0 / b.f;
  const double f = c * inv;
  const double d1 = -f * b.d1 * inv;
  const double d2 = (-2.0 * d1 * b.d1 - f * b.d2) * inv;
  return {f, d1, d2};
}

// Composition (f o g) from the scalar values f(g), f'(g), f''(g).
inline Jet jet_chain(double f, double fp, double fpp, const Jet& g) {
  return {f, fp * g.d1, fpp * g.d1 * g.d1 + fp * g.d2};
}

inline Jet jet_exp(const Jet& g) {
  const double e = std::exp(g.f);
  return jet_chain(e, e, e, g);
}
inline Jet jet_log(const Jet& g) {
  return jet_chain(std::log(g.f), 1.0 / g.f, -1.0 / (g.f * g.f), g);
}
inline Jet jet_atan(const Jet& g) {
  const double d = 1.0 + g.f * g.f;
  return jet_chain(std::atan(g.f), 1.0 / d, -2.0 * g.f / (d * d), g);
}
inline Jet jet_pow(const Jet& g, double p) {
  const double f = std::pow(g.f, p);
  return jet_chain(f, p * f / g.f, p * (p - 1.0) * f / (g.f * g.f), g);
}
inline Jet jet_sqrt(const Jet& g) { return jet_pow(g, 0.5); }
inline Jet jet_sin(const Jet& g) {
  return jet_chain(std::sin(g.f), std::cos(g.f), -std::sin(g.f), g);
}
inline Jet jet_cos(const Jet& g) {
  return jet_chain(std::cos(g.f), -std::sin(g.f), -std::cos(g.f), g);
}
inline Jet jet_sinh(const Jet& g) {
  return jet_chain(std::sinh(g.f), std::cosh(g.f), std::sinh(g.f), g);
}
inline Jet jet_cosh(const Jet& g) {
  return jet_chain(std::cosh(g.f), std::sinh(g.f), std::cosh(g.f), g);
}
inline Jet jet_tanh(const Jet& g) {
  const double t = std::tanh(g.f);
  const double s2 = 1.0 - t * t; // sech^2
  return jet_chain(t, s2, -2.0 * t * s2, g);
}

// Horner evaluation of a polynomial at a jet argument.
inline Jet jet_poly(const DoublePoly& p, const Jet& x) {
  Jet acc = jet_const(0.0);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

} // namespace rompoly

#endif
