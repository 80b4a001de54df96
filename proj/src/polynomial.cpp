#include "hypercorona/polynomial.hpp"

#include <sstream>

namespace hypercorona {

bool try_exact_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) {
    if (quotient) *quotient = IntPolynomial();
    return true;
  }
  const int db = b.degree();
  if (a.degree() < db) return false;
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1, BigInt(0));
  const BigInt lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % lead != 0) return false;
    const BigInt q = top / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  if (quotient) *quotient = IntPolynomial(std::move(quot));
  return true;
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial q;
  if (!try_exact_divide(a, b, &q)) throw std::domain_error("exact_divide: divisor does not divide");
  return q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  std::vector<BigInt> rem = a.coefficients();
  const int db = b.degree();
  const BigInt lead = b.leading();
  int da = a.degree();
  while (da >= db && da >= 0) {
    const BigInt top = rem[static_cast<std::size_t>(da)];
    for (auto& c : rem) c *= lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(da - db + j)] -= top * b[j];
    IntPolynomial trimmed(rem);
    rem = trimmed.coefficients();
    da = trimmed.degree();
  }
  return IntPolynomial(std::move(rem));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  std::vector<BigInt> v = p.coefficients();
  for (auto& x : v) x /= c;
  IntPolynomial out(std::move(v));
  return sign_normalized(out);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b) * IntPolynomial(content(b));
  if (b.is_zero()) return primitive_part(a) * IntPolynomial(content(a));
  const BigInt c = boost::multiprecision::gcd(content(a), content(b));
  IntPolynomial u = primitive_part(a);
  IntPolynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPolynomial() : primitive_part(r);
  }
  return sign_normalized(primitive_part(u) * IntPolynomial(c));
}

IntPolynomial shift(const IntPolynomial& p, const BigInt& s) {
  return compose(p, IntPolynomial(std::vector<BigInt>{s, BigInt(1)}));
}

IntPolynomial sign_normalized(const IntPolynomial& p) { return p.leading() < 0 ? -p : p; }

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial to_int_polynomial(const RatPolynomial& p) {
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!c.is_integer()) throw std::domain_error("to_int_polynomial: non-integral coefficient");
    v.push_back(c.numerator());
  }
  return IntPolynomial(std::move(v));
}

RatPolynomial to_rat_polynomial(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial from_int_roots(const std::vector<long long>& roots) {
  IntPolynomial out(BigInt(1));
  for (long long r : roots) out *= IntPolynomial::linear_root(BigInt(r));
  return out;
}

}  // namespace hypercorona
