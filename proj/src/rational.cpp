#include "rompoly/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace rompoly {

Rational Rational::parse(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw DomainError("cannot parse rational: '" + text + "'");
    return Rational(BigInt(text));
  }
  const std::string ns = text.substr(0, slash);
  const std::string ds = text.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds))
    throw DomainError("cannot parse rational: '" + text + "'");
  return Rational(BigInt(ns), BigInt(ds));
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("zero to a negative power");
    return Rational(0);
  }
  Rational base = e > 0 ? *this : Rational(1) / *this;
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;
  }
  return c;
}

} // namespace rompoly
