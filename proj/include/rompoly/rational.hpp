#ifndef ROMPOLY_RATIONAL_HPP
#define ROMPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "rompoly/errors.hpp"

namespace rompoly {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number with arbitrary-precision numerator and denominator.
// Always kept in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long long num, long long den) { assign(BigInt(num), BigInt(den)); }
  Rational(const BigInt& num, const BigInt& den) { assign(num, den); }

  // Parses "n", "n/d" with optional sign, e.g. "-3/2".
  static Rational parse(const std::string& text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  double to_double() const { return v_.convert_to<double>(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return v_ < 0 ? -*this : *this; }

  // Integer power, negative exponents allowed for nonzero values.
  Rational pow(long long e) const;

  // "num/den", or just "num" for integers.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  using Rep = boost::multiprecision::cpp_rational;

  void assign(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) v_ = Rep(-num, -den);
    else v_ = Rep(num, den);
  }

  Rep v_;
};

// n! as an exact integer.
BigInt factorial(unsigned n);

// Binomial coefficient C(n, k).
BigInt binomial(unsigned n, unsigned k);

} // namespace rompoly

#endif
