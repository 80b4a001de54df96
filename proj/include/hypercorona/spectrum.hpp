#pragma once

#include <string>
#include <vector>

#include "hypercorona/linalg.hpp"

namespace hypercorona {

/// (u + c * sqrt(d)) / w with d squarefree, w > 0 and gcd(u, c, w) = 1.
/// Rationals have c = 0 and d = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() : u_(0), c_(0), d_(0), w_(1) {}
  /// (u + c * sqrt(radicand)) / w for any radicand >= 0 and w != 0.
  QuadraticSurd(BigInt u, BigInt c, const BigInt& radicand, BigInt w);
  static QuadraticSurd rational(const Rational& q);

  const BigInt& u() const { return u_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  const BigInt& w() const { return w_; }
  bool is_rational() const { return c_ == 0; }
  Rational as_rational() const;  // throws unless is_rational()
  long double value() const;
  std::string str() const;

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.u_ == b.u_ && a.c_ == b.c_ && a.d_ == b.d_ && a.w_ == b.w_;
  }

 private:
  BigInt u_, c_, d_, w_;
};

/// An eigenvalue description: exact rational, exact quadratic surd, or a real
/// root of an integer polynomial known only to floating precision.
struct AlgebraicValue {
  enum class Kind { Rational, Surd, RootOf };
  Kind kind = Kind::Rational;
  QuadraticSurd surd;   // Rational and Surd kinds
  IntPolynomial factor; // RootOf: polynomial the value is a root of
  long double approx = 0;

  static AlgebraicValue exact(const QuadraticSurd& s);
  static AlgebraicValue root_of(IntPolynomial p, long double approx);
  bool is_exact() const { return kind != Kind::RootOf; }
  std::string str() const;
};

struct SpectrumEntry {
  AlgebraicValue value;
  int multiplicity = 1;
  /// |P(v)| / sum |c_i| |v|^i for the matrix's char poly P; zero for exact values.
  long double residual = 0;
  bool certified = true;  ///< residual within the requested tolerance
};

struct Spectrum {
  IntPolynomial char_poly;           // det(M - xI)
  std::vector<SpectrumEntry> entries;  // descending by value
  int order() const;
  long double spectral_radius() const;  // largest absolute value
  long double largest() const;
  /// Values repeated by multiplicity, descending.
  std::vector<long double> flattened() const;
};

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues of a symmetric integer matrix, descending (Eigen's
/// tridiagonal QR). Throws EigenSolverError on non-convergence and
/// std::invalid_argument for non-symmetric input.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

/// Grouped spectrum. Integer roots and quadratic factors of the exact char
/// poly are extracted first; the remaining roots are grouped numerically at
/// tol * max(1, spectral radius); each of those carries its char-poly
/// residual and is marked uncertified when the residual exceeds tol.
Spectrum numeric_spectrum(const IntMatrix& m, double tol = 1e-8);

/// Relative residual |P(v)| / sum |c_i| |v|^i.
long double relative_residual(const IntPolynomial& p, long double v);

/// Largest deviation between two multisets of reals after sorting; infinity
/// when sizes differ.
long double multiset_distance(std::vector<long double> a, std::vector<long double> b);

}  // namespace hypercorona
