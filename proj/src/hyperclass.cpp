#include "rompoly/hyperclass.hpp"

#include <cmath>
#include <sstream>

#include "rompoly/errors.hpp"

namespace rompoly {

Rational lambda_n(const HyperParams& hp, unsigned n) {
  const Rational nn(static_cast<long long>(n));
  return nn * (nn - Rational(1)) * hp.a + nn * hp.d;
}

std::string to_string(BochnerClass c) {
  switch (c) {
  case BochnerClass::ConstantSigma: return "ConstantSigma";
  case BochnerClass::LinearSigma: return "LinearSigma";
  case BochnerClass::TwoRealRoots: return "TwoRealRoots";
  case BochnerClass::DoubleRealRoot: return "DoubleRealRoot";
  case BochnerClass::ComplexRoots: return "ComplexRoots";
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
  case Family::Hermite: return "Hermite";
  case Family::Laguerre: return "Laguerre";
  case Family::Jacobi: return "Jacobi";
  case Family::Bessel: return "Bessel";
  case Family::Romanovski: return "Romanovski";
  case Family::General: return "General";
  }
  return "?";
}

BochnerClass classify(const HyperParams& hp) {
  if (!hp.a.is_zero()) {
    const Rational disc = hp.b * hp.b - Rational(4) * hp.a * hp.c;
    if (disc > Rational(0)) return BochnerClass::TwoRealRoots;
    if (disc.is_zero()) return BochnerClass::DoubleRealRoot;
    return BochnerClass::ComplexRoots;
  }
  if (!hp.b.is_zero()) return BochnerClass::LinearSigma;
  if (!hp.c.is_zero()) return BochnerClass::ConstantSigma;
  throw InvalidEquationError("sigma identically zero");
}

WeightSpec WeightSpec::hermite(const Rational& alpha) {
  HyperParams hp{Rational(0), Rational(0), Rational(1), Rational(-2) * alpha,
                 Rational(0)};
  return WeightSpec(Family::Hermite, alpha, Rational(0), hp, Support::RealLine);
}

WeightSpec WeightSpec::laguerre(const Rational& alpha, const Rational& beta) {
  HyperParams hp{Rational(0), Rational(1), Rational(0), -alpha, beta + Rational(1)};
  return WeightSpec(Family::Laguerre, alpha, beta, hp, Support::HalfLine);
}

WeightSpec WeightSpec::jacobi(const Rational& alpha, const Rational& beta) {
  HyperParams hp{Rational(-1), Rational(0), Rational(1),
                 -alpha - beta - Rational(2), -alpha + beta};
  return WeightSpec(Family::Jacobi, alpha, beta, hp, Support::IntervalM11);
}

WeightSpec WeightSpec::bessel(const Rational& alpha, const Rational& beta) {
  HyperParams hp{Rational(1), Rational(0), Rational(0), alpha + Rational(2), beta};
  return WeightSpec(Family::Bessel, alpha, beta, hp, Support::UnitCircle);
}

WeightSpec WeightSpec::bessel_tau(const Rational& alpha, const Rational& beta) {
  return bessel(alpha - Rational(2), beta);
}

WeightSpec WeightSpec::romanovski(const Rational& p, const Rational& q) {
  HyperParams hp{Rational(1), Rational(0), Rational(1),
                 Rational(2) * (Rational(1) - p), q};
  return WeightSpec(Family::Romanovski, p, q, hp, Support::RealLine);
}

WeightSpec WeightSpec::romanovski_beta_alpha(const Rational& beta,
                                             const Rational& alpha) {
  return romanovski(Rational(1, 2) - beta, -alpha);
}

WeightSpec WeightSpec::general(const HyperParams& hp) {
  classify(hp); // validates sigma != 0
  return WeightSpec(Family::General, Rational(0), Rational(0), hp, Support::Other);
}

Rational WeightSpec::romanovski_p() const {
  if (family_ != Family::Romanovski) throw DomainError("not a Romanovski weight");
  return p1_;
}

Rational WeightSpec::romanovski_q() const {
  if (family_ != Family::Romanovski) throw DomainError("not a Romanovski weight");
  return p2_;
}

Rational WeightSpec::romanovski_beta() const { return Rational(1, 2) - romanovski_p(); }

Rational WeightSpec::romanovski_alpha() const { return -romanovski_q(); }

bool WeightSpec::jacobi_orthogonal() const {
  if (family_ != Family::Jacobi) return false;
  return p1_ > Rational(-1) && p2_ > Rational(-1);
}

std::string WeightSpec::str() const {
  std::ostringstream os;
  switch (family_) {
  case Family::Hermite:
    os << "exp(-" << p1_ << "*x^2)";
    break;
  case Family::Laguerre:
    os << "x^(" << p2_ << ") exp(-" << p1_ << "*x)";
    break;
  case Family::Jacobi:
    os << "(1-x)^(" << p1_ << ") (1+x)^(" << p2_ << ")";
    break;
  case Family::Bessel:
    os << "x^(" << p1_ << ") exp(-" << p2_ << "/x)";
    break;
  case Family::Romanovski:
    os << "(1+x^2)^(-" << p1_ << ") exp(" << p2_ << "*atan(x))";
    break;
  case Family::General:
    os << weight_form(hp_).str();
    break;
  }
  return os.str();
}

std::function<double(double)> WeightSpec::evaluator() const {
  switch (family_) {
  case Family::Hermite: {
    const double a = p1_.to_double();
    return [a](double x) { return std::exp(-a * x * x); };
  }
  case Family::Laguerre: {
    const double a = p1_.to_double(), b = p2_.to_double();
    return [a, b](double x) { return std::pow(x, b) * std::exp(-a * x); };
  }
  case Family::Jacobi: {
    const double a = p1_.to_double(), b = p2_.to_double();
    return [a, b](double x) { return std::pow(1.0 - x, a) * std::pow(1.0 + x, b); };
  }
  case Family::Romanovski: {
    const double p = p1_.to_double(), q = p2_.to_double();
    return [p, q](double x) {
      return std::pow(1.0 + x * x, -p) * std::exp(q * std::atan(x));
    };
  }
  case Family::Bessel:
    throw DomainError("Bessel weight has no real support; use the contour inner product");
  case Family::General: {
    auto form = weight_form(hp_);
    return [form](double x) { return form.eval(x); };
  }
  }
  throw DomainError("unknown family");
}

std::string WeightForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ";
    first = false;
  };
  if (!exp_poly.is_zero()) {
    sep();
    os << "exp(" << exp_poly.str() << ")";
  }
  for (const auto& f : powers) {
    sep();
    os << "(x";
    if (f.root > Rational(0)) os << "-" << f.root;
    else if (f.root < Rational(0)) os << "+" << (-f.root);
    os << ")^(" << f.expo << ")";
  }
  if (inv.present) {
    sep();
    os << "exp((" << inv.coef << ")/(x";
    if (inv.root > Rational(0)) os << "-" << inv.root;
    else if (inv.root < Rational(0)) os << "+" << (-inv.root);
    os << "))";
  }
  if (arctan.present) {
    sep();
    os << "((x+" << arctan.shift << ")^2+" << arctan.scale_sq << ")^("
       << arctan.quad_expo << ")";
    const double k = std::sqrt(arctan.scale_sq.to_double());
    os << " exp(" << arctan.coef_times_scale.to_double() / k << "*atan((x+"
       << arctan.shift << ")/" << k << "))";
  }
  for (const auto& f : float_powers) {
    sep();
    os << "(x-(" << f.root << "))^(" << f.expo << ")";
  }
  if (first) os << "1";
  return os.str();
}

double WeightForm::eval(double x) const {
  double w = 1.0;
  if (!exp_poly.is_zero()) w *= std::exp(eval_double(exp_poly, x));
  for (const auto& f : powers)
    w *= std::pow(std::abs(x - f.root.to_double()), f.expo.to_double());
  if (inv.present) w *= std::exp(inv.coef.to_double() / (x - inv.root.to_double()));
  if (arctan.present) {
    const double h = arctan.shift.to_double();
    const double k = std::sqrt(arctan.scale_sq.to_double());
    const double g = arctan.quad_expo.to_double();
    const double m = arctan.coef_times_scale.to_double() / k;
    w *= std::pow((x + h) * (x + h) + k * k, g) * std::exp(m * std::atan((x + h) / k));
  }
  for (const auto& f : float_powers) w *= std::pow(std::abs(x - f.root), f.expo);
  return w;
}

namespace {

// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < Rational(0)) return std::nullopt;
  if (r.is_zero()) return Rational(0);
  const BigInt n = r.num(), d = r.den();
  const BigInt sn = boost::multiprecision::sqrt(n);
  const BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn == n && sd * sd == d) return Rational(sn, sd);
  return std::nullopt;
}

} // namespace

WeightForm weight_form(const HyperParams& hp) {
  WeightForm form;
  const BochnerClass cls = classify(hp);
  // L(x) = (d-2a)x + (e-b), w'/w = L/sigma
  const Rational L1 = hp.d - Rational(2) * hp.a;
  const Rational L0 = hp.e - hp.b;

  switch (cls) {
  case BochnerClass::ConstantSigma: {
    // int (L1 x + L0)/c = L1 x^2/(2c) + L0 x/c
    form.exp_poly = RationalPoly({Rational(0), L0 / hp.c, L1 / (Rational(2) * hp.c)});
    break;
  }
  case BochnerClass::LinearSigma: {
    // L/(bx+c) = L1/b + (L0 - L1 c/b)/(b (x + c/b))
    const Rational root = -hp.c / hp.b;
    form.exp_poly = RationalPoly({Rational(0), L1 / hp.b});
    form.powers.push_back({root, (L0 + L1 * root) / hp.b});
    break;
  }
  case BochnerClass::TwoRealRoots: {
    const Rational disc = hp.b * hp.b - Rational(4) * hp.a * hp.c;
    if (auto s = rational_sqrt(disc)) {
      const Rational r1 = (-hp.b - *s) / (Rational(2) * hp.a);
      const Rational r2 = (-hp.b + *s) / (Rational(2) * hp.a);
      // Partial fractions: L/sigma = e1/(x-r1) + e2/(x-r2)
      const Rational e1 = (L1 * r1 + L0) / (hp.a * (r1 - r2));
      const Rational e2 = (L1 * r2 + L0) / (hp.a * (r2 - r1));
      form.powers.push_back({r1, e1});
      form.powers.push_back({r2, e2});
    } else {
      const double a = hp.a.to_double(), b = hp.b.to_double(), c = hp.c.to_double();
      const double sq = std::sqrt(b * b - 4 * a * c);
      const double r1 = (-b - sq) / (2 * a), r2 = (-b + sq) / (2 * a);
      const double l1 = L1.to_double(), l0 = L0.to_double();
      form.float_powers.push_back({r1, (l1 * r1 + l0) / (a * (r1 - r2))});
      form.float_powers.push_back({r2, (l1 * r2 + l0) / (a * (r2 - r1))});
    }
    break;
  }
  case BochnerClass::DoubleRealRoot: {
    const Rational root = -hp.b / (Rational(2) * hp.a);
    // L/(a(x-r)^2) = (L1/a)/(x-r) + (L(r)/a)/(x-r)^2
    form.powers.push_back({root, L1 / hp.a});
    form.inv.present = true;
    form.inv.root = root;
    form.inv.coef = -(L1 * root + L0) / hp.a;
    break;
  }
  case BochnerClass::ComplexRoots: {
    // sigma = a((x+h)^2 + k^2), h = b/2a, k^2 = c/a - h^2
    const Rational h = hp.b / (Rational(2) * hp.a);
    const Rational k2 = hp.c / hp.a - h * h;
    form.arctan.present = true;
    form.arctan.quad_expo = L1 / (Rational(2) * hp.a);
    form.arctan.shift = h;
    form.arctan.scale_sq = k2;
    // L/sigma = (L1/2a) sigma'/sigma + (L0 - L1 h)/(a ((x+h)^2+k^2));
    // the second part integrates to ((L0 - L1 h)/(a k)) atan((x+h)/k).
    form.arctan.coef_times_scale = (L0 - L1 * h) / hp.a;
    break;
  }
  }
  return form;
}

WeightSpec pearson_weight(const HyperParams& hp) {
  classify(hp);
  const Rational zero(0), one(1);
  if (hp.a.is_zero() && hp.b.is_zero()) {
    // exp(d x^2/(2c) + e x/c): plain Gaussian only when e = 0 and d/c < 0.
    if (hp.e.is_zero() && (hp.d / hp.c) < zero)
      return WeightSpec::hermite(-hp.d / (Rational(2) * hp.c));
    return WeightSpec::general(hp);
  }
  if (hp.a.is_zero() && hp.c.is_zero() && hp.b == one) {
    const Rational alpha = -hp.d, beta = hp.e - one;
    return WeightSpec::laguerre(alpha, beta);
  }
  if (hp.a == Rational(-1) && hp.b.is_zero() && hp.c == one) {
    const Rational gamma = -(hp.d + hp.e + Rational(2)) / Rational(2);
    const Rational delta = (hp.e - hp.d - Rational(2)) / Rational(2);
    return WeightSpec::jacobi(gamma, delta);
  }
  if (hp.a == one && hp.b.is_zero() && hp.c.is_zero())
    return WeightSpec::bessel(hp.d - Rational(2), hp.e);
  if (hp.a == one && hp.b.is_zero() && hp.c == one)
    return WeightSpec::romanovski(one - hp.d / Rational(2), hp.e);
  return WeightSpec::general(hp);
}

HyperParams canonicalize(const WeightSpec& ws) {
  switch (ws.family()) {
  case Family::Hermite:
    return {Rational(0), Rational(0), Rational(1),
            Rational(-2) * ws.param1(), Rational(0)};
  case Family::Laguerre:
    return {Rational(0), Rational(1), Rational(0), -ws.param1(),
            ws.param2() + Rational(1)};
  case Family::Jacobi:
    return {Rational(-1), Rational(0), Rational(1),
            -ws.param1() - ws.param2() - Rational(2), -ws.param1() + ws.param2()};
  case Family::Bessel:
    return {Rational(1), Rational(0), Rational(0), ws.param1() + Rational(2),
            ws.param2()};
  case Family::Romanovski:
    return {Rational(1), Rational(0), Rational(1),
            Rational(2) * (Rational(1) - ws.param1()), ws.param2()};
  case Family::General:
    return ws.hp();
  }
  throw DomainError("unknown family");
}

} // namespace rompoly
