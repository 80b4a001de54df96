#pragma once

#include <string>

#include "hypercorona/polynomial.hpp"

namespace hypercorona {

/// Ratio of two integer polynomials in canonical form: numerator and
/// denominator coprime over Q[x], jointly content-free over Z, and the
/// denominator's leading coefficient positive. Canonical form makes
/// equality structural.
class RationalFunction {
 public:
  RationalFunction() : den_(BigInt(1)) {}
  RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(BigInt(1)) {}  // NOLINT
  RationalFunction(BigInt c) : RationalFunction(IntPolynomial(std::move(c))) {}  // NOLINT
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is exactly 1.
  bool is_polynomial() const { return den_ == IntPolynomial(BigInt(1)); }
  /// Throws std::domain_error unless is_polynomial().
  IntPolynomial as_polynomial() const;

  /// Throws std::domain_error at a pole.
  Rational evaluate(const Rational& at) const;
  long double evaluate(long double at) const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Canonical{}); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

 private:
  struct Canonical {};
  RationalFunction(IntPolynomial n, IntPolynomial d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}
  IntPolynomial num_;
  IntPolynomial den_;
};

RationalFunction pow(const RationalFunction& f, int e);

/// p(f(x)) evaluated in the field of rational functions. The homogenized sum
/// of p_j * N^j * D^(deg p - j) is formed over Z[x] before a single reduction.
RationalFunction compose(const IntPolynomial& p, const RationalFunction& f);

}  // namespace hypercorona
