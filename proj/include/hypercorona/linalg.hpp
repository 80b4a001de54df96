#pragma once

// Matrix kernels. Integer matrices are Eigen int64 matrices; exact work goes
// through division-free Berkowitz over BigInt or Rational, so floating point
// never serves as ground truth.

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hypercorona/hypergraph.hpp"
#include "hypercorona/numbers.hpp"
#include "hypercorona/polynomial.hpp"
#include "hypercorona/rational_function.hpp"

namespace hypercorona {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// a_ij = number of edges containing both i and j; zero diagonal.
IntMatrix adjacency_matrix(const Hypergraph& h);
/// J - I - 2A.
IntMatrix seidel_matrix(const Hypergraph& h);
IntMatrix seidel_from_adjacency(const IntMatrix& a);

IntMatrix ones(Eigen::Index rows, Eigen::Index cols);
bool is_symmetric(const IntMatrix& m);

/// Descending coefficients of det(xI - M) for the n x n matrix whose (i, j)
/// entry is entry(i, j), computed without division over any commutative ring.
template <class Ring, class EntryFn>
std::vector<Ring> berkowitz(int n, EntryFn&& entry, const Ring& one) {
  const Ring zero = one - one;
  std::vector<Ring> vect{one};
  std::vector<Ring> v;
  std::vector<Ring> next;
  for (int r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R A^j C for j = 0..r-1.
    std::vector<Ring> t;
    t.reserve(static_cast<std::size_t>(r) + 2);
    t.push_back(one);
    t.push_back(zero - entry(r, r));
    v.assign(static_cast<std::size_t>(r), zero);
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = entry(i, r);
    for (int j = 0; j < r; ++j) {
      Ring dot = zero;
      for (int i = 0; i < r; ++i) dot += entry(r, i) * v[static_cast<std::size_t>(i)];
      t.push_back(zero - dot);
      if (j + 1 < r) {
        next.assign(static_cast<std::size_t>(r), zero);
        for (int i = 0; i < r; ++i) {
          Ring acc = zero;
          for (int l = 0; l < r; ++l) acc += entry(i, l) * v[static_cast<std::size_t>(l)];
          next[static_cast<std::size_t>(i)] = std::move(acc);
        }
        std::swap(v, next);
      }
    }
    std::vector<Ring> out(static_cast<std::size_t>(r) + 2, zero);
    for (int i = 0; i <= r + 1; ++i) {
      for (int j = std::max(0, i - r - 1); j <= std::min(i, r); ++j) {
        out[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i - j)] * vect[static_cast<std::size_t>(j)];
      }
    }
    vect = std::move(out);
  }
  return vect;
}

/// Determinant over a commutative ring, division-free.
template <class Ring, class EntryFn>
Ring ring_determinant(int n, EntryFn&& entry, const Ring& one) {
  std::vector<Ring> coeffs = berkowitz<Ring>(n, std::forward<EntryFn>(entry), one);
  Ring d = std::move(coeffs.back());
  return (n % 2 == 0) ? d : (one - one) - d;
}

namespace detail {
template <class Scalar>
struct ExactRing {
  using type = BigInt;
};
template <>
struct ExactRing<Rational> {
  using type = Rational;
};
}  // namespace detail

/// Exact ring an integer or rational scalar is lifted to.
template <class Scalar>
using ExactRing = typename detail::ExactRing<Scalar>::type;

/// det(M - xI) with exact coefficients in ascending order. Integer matrices
/// give an IntPolynomial, rational matrices a RatPolynomial.
template <class Derived>
Polynomial<ExactRing<typename Derived::Scalar>> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Ring = ExactRing<typename Derived::Scalar>;
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int n = static_cast<int>(m.rows());
  const auto desc = berkowitz<Ring>(
      n, [&](int i, int j) { return Ring(m(i, j)); }, Ring(1));
  std::vector<Ring> asc(desc.rbegin(), desc.rend());
  if (n % 2 == 1) {
    for (auto& c : asc) c = -c;
  }
  return Polynomial<Ring>(std::move(asc));
}

template <class Derived>
ExactRing<typename Derived::Scalar> determinant(const Eigen::MatrixBase<Derived>& m) {
  using Ring = ExactRing<typename Derived::Scalar>;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  return ring_determinant<Ring>(
      static_cast<int>(m.rows()), [&](int i, int j) { return Ring(m(i, j)); }, Ring(1));
}

template <class Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long long>(m(i, j)));
  }
  return out;
}

/// Solves A x = b exactly by Gaussian elimination; throws std::domain_error
/// when A is singular.
RatVector solve_exact(RatMatrix a, RatVector b);
RatMatrix inverse_exact(const RatMatrix& a);

/// (rI - sJ)^{-1} = alpha I + beta J.
struct JIInverse {
  Rational alpha;
  Rational beta;
};
/// Throws std::domain_error when r = 0 or r = ns.
JIInverse ji_inverse(const Rational& r, const Rational& s, int n);

/// det(u w^T + M) = (1 + w^T M^{-1} u) det M. Throws std::domain_error for
/// singular M.
Rational rank_one_det(const RatMatrix& m, const RatVector& u, const RatVector& w);

/// Both sides of sum_{j<m} 2^j n(n-1)(n+1)^{m-j-1} + 2^m n = n(n+1)^m.
struct CountingIdentity {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};
CountingIdentity counting_identity(int n, int m);
bool counting_identity_check(int n, int m);

/// 1^T (M - xI)^{-1} 1 as det(M + J - xI) / det(M - xI) - 1.
RationalFunction coronal(const IntMatrix& m);

/// The coronal of a (k, r)-regular hypergraph on m vertices: m / (r(k-1) - x).
RationalFunction regular_coronal(int m, int r, int k);

/// Kronecker product of integer matrices.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

}  // namespace hypercorona
