#include "hypercorona/rational_function.hpp"

#include <stdexcept>

namespace hypercorona {

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator) {
  if (denominator.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (numerator.is_zero()) {
    den_ = IntPolynomial(BigInt(1));
    return;
  }
  const IntPolynomial g = primitive_part(gcd(numerator, denominator));
  if (g.degree() > 0) {
    numerator = exact_divide(numerator, g);
    denominator = exact_divide(denominator, g);
  }
  const BigInt c = boost::multiprecision::gcd(content(numerator), content(denominator));
  if (c != 1) {
    std::vector<BigInt> n = numerator.coefficients();
    std::vector<BigInt> d = denominator.coefficients();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    numerator = IntPolynomial(std::move(n));
    denominator = IntPolynomial(std::move(d));
  }
  if (denominator.leading() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  num_ = std::move(numerator);
  den_ = std::move(denominator);
}

IntPolynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + str());
  return num_;
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate<Rational>(at);
  if (d == Rational(0)) throw std::domain_error("RationalFunction: evaluation at a pole");
  return num_.evaluate<Rational>(at) / d;
}

long double RationalFunction::evaluate(long double at) const {
  return num_.evaluate<long double>(at) / den_.evaluate<long double>(at);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return to_string(num_, var);
  return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

RationalFunction pow(const RationalFunction& f, int e) {
  if (e < 0) return RationalFunction(BigInt(1)) / pow(f, -e);
  return {pow(f.numerator(), e), pow(f.denominator(), e)};
}

RationalFunction compose(const IntPolynomial& p, const RationalFunction& f) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  const IntPolynomial& n = f.numerator();
  const IntPolynomial& q = f.denominator();
  // Horner in homogeneous form: acc_j = acc_{j+1} * n + p_j * q^(d - j).
  IntPolynomial acc(p[d]);
  IntPolynomial qpow(BigInt(1));
  for (int j = d - 1; j >= 0; --j) {
    qpow *= q;
    acc = acc * n + IntPolynomial(p[j]) * qpow;
  }
  return {acc, pow(q, d)};
}

}  // namespace hypercorona
