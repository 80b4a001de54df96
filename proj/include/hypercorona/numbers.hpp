#pragma once

// Exact scalar types shared by every module: arbitrary-precision integers,
// rationals usable as an Eigen scalar, and the binomial convention used by
// the corona constants.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hypercorona {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.
///
/// Thin value wrapper over Boost's cpp_rational. The wrapper exists so the
/// type can be used as an Eigen scalar: Boost 1.74's expression-template
/// constructors misfire on Eigen's scalar-promotion traits under C++20.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}        // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  explicit operator double() const { return value_.convert_to<double>(); }
  explicit operator long double() const { return value_.convert_to<long double>(); }

  Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& r);

/// Binomial coefficient with the convention C(x, y) = 0 whenever x < y or
/// either argument is negative.
std::int64_t binomial(std::int64_t x, std::int64_t y);

/// Exact binomial for enumeration counts that may leave 64 bits.
BigInt big_binomial(std::int64_t x, std::int64_t y);

/// Integer square root (floor) of a non-negative big integer.
BigInt isqrt(const BigInt& v);

/// Writes v = f^2 * d with d squarefree (d = 0 when v = 0). Trial division,
/// adequate for the discriminants produced at desk scale.
std::pair<BigInt, BigInt> split_square(const BigInt& v);

}  // namespace hypercorona

namespace Eigen {

template <>
struct NumTraits<hypercorona::Rational> : GenericNumTraits<hypercorona::Rational> {
  using Real = hypercorona::Rational;
  using NonInteger = hypercorona::Rational;
  using Literal = hypercorona::Rational;
  using Nested = hypercorona::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen
