#ifndef ROMPOLY_POLY_HPP
#define ROMPOLY_POLY_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rompoly/rational.hpp"

namespace rompoly {

using Complex = std::complex<double>;

// Dense univariate polynomial, coefficients in ascending degree order.
// The zero polynomial is canonically the empty coefficient list, so the
// leading coefficient of a nonzero polynomial is always nonzero and
// degree() of zero is nullopt.
template <typename T>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  // c * x^k
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Poly(std::move(v));
  }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  // Coefficient of x^k (zero beyond the stored range).
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& p) {
    std::vector<T> r = p.c_;
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j)
        r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> r = p.c_;
    for (auto& v : r) v = s * v;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const T& s) { return s * p; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  // Formal derivative.
  Poly differentiate() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = T(static_cast<long long>(k)) * c_[k];
    return Poly(std::move(r));
  }

  // Horner evaluation in the coefficient type.
  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == T(0)) continue;
      if (!first) os << " + ";
      os << "(" << c_[k] << ")";
      if (k >= 1) {
        os << "*" << var;
        if (k >= 2) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPoly = Poly<Rational>;
using DoublePoly = Poly<double>;

// Horner evaluation of an exact polynomial in floating arithmetic.
inline double eval_double(const RationalPoly& p, double x) {
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].to_double();
  return acc;
}

inline Complex eval_complex(const RationalPoly& p, const Complex& x) {
  Complex acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].to_double();
  return acc;
}

inline DoublePoly to_double_poly(const RationalPoly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.to_double());
  return DoublePoly(std::move(c));
}

} // namespace rompoly

#endif
