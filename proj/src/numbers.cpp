#include "hypercorona/numbers.hpp"

#include <ostream>
#include <stdexcept>

namespace hypercorona {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::int64_t binomial(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || x < y) return 0;
  if (y > x - y) y = x - y;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    result = result * (x - y + i) / i;
  }
  return result;
}

BigInt big_binomial(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || x < y) return 0;
  if (y > x - y) y = x - y;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    result = result * (x - y + i) / i;
  }
  return result;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

std::pair<BigInt, BigInt> split_square(const BigInt& v) {
  if (v < 0) throw std::domain_error("split_square of negative value");
  if (v == 0) return {0, 0};
  BigInt f = 1;
  BigInt d = v;
  for (BigInt p = 2; p * p <= d; ++p) {
    const BigInt sq = p * p;
    while (d % sq == 0) {
      d /= sq;
      f *= p;
    }
  }
  return {f, d};
}

}  // namespace hypercorona
