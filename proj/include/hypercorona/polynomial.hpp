#pragma once

// Dense univariate polynomials over an exact ring, stored by ascending
// degree with no trailing zero coefficients.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypercorona/numbers.hpp"

namespace hypercorona {

template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar constant) {  // NOLINT(google-explicit-constructor)
    if (!(constant == Scalar(0))) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }
  /// x - root
  static Polynomial linear_root(const Scalar& root) { return Polynomial(std::vector<Scalar>{-root, Scalar(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Scalar operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)]
                                                           : Scalar(0);
  }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + static_cast<T>(*it);
    return acc;
  }
  Scalar operator()(const Scalar& at) const { return evaluate<Scalar>(at); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, int e) {
  if (e < 0) throw std::domain_error("negative polynomial power");
  Polynomial<Scalar> result(Scalar(1));
  Polynomial<Scalar> base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// p(q(x)) by Horner's scheme.
template <class Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<Scalar>(*it);
  return acc;
}

/// Quotient and remainder over a field.
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a,
                                                       const Polynomial<Field>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Field> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Field>(), a};
  std::vector<Field> quot(static_cast<std::size_t>(a.degree() - db) + 1, Field(0));
  const Field lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Field q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == Field(0)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
  }
  return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

// Integer polynomial algorithms (src/polynomial.cpp).

/// Exact quotient a / b over Z; throws std::domain_error if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
/// True and sets quotient when b divides a over Z.
bool try_exact_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient);
/// Remainder of lc(b)^e * a modulo b over Z, e at most deg a - deg b + 1.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
BigInt content(const IntPolynomial& p);
/// p / content(p) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Greatest common divisor over Z, positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// p(x + shift)
IntPolynomial shift(const IntPolynomial& p, const BigInt& s);
/// Makes the leading coefficient positive.
IntPolynomial sign_normalized(const IntPolynomial& p);
/// Human-readable form, e.g. "-x^3 + 3x + 2".
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
IntPolynomial to_int_polynomial(const RatPolynomial& p);  // throws if non-integral
RatPolynomial to_rat_polynomial(const IntPolynomial& p);

/// Product of (x - root) over integer roots, used for assembling expected factorizations.
IntPolynomial from_int_roots(const std::vector<long long>& roots);

}  // namespace hypercorona
