#include "hypercorona/linalg.hpp"

namespace hypercorona {

IntMatrix adjacency_matrix(const Hypergraph& h) {
  IntMatrix a = IntMatrix::Zero(h.order(), h.order());
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        ++a(e[i], e[j]);
        ++a(e[j], e[i]);
      }
    }
  }
  return a;
}

IntMatrix seidel_from_adjacency(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  return ones(n, n) - IntMatrix::Identity(n, n) - 2 * a;
}

IntMatrix seidel_matrix(const Hypergraph& h) { return seidel_from_adjacency(adjacency_matrix(h)); }

IntMatrix ones(Eigen::Index rows, Eigen::Index cols) { return IntMatrix::Ones(rows, cols); }

bool is_symmetric(const IntMatrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

RatVector solve_exact(RatMatrix a, RatVector b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Rational(0)) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    const Rational inv = Rational(1) / a(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (a(row, col) == Rational(0)) continue;
      const Rational f = a(row, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(row, j) -= f * a(col, j);
      b(row) -= f * b(col);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return x;
}

RatMatrix inverse_exact(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  RatMatrix inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RatVector e = RatVector::Constant(n, Rational(0));
    e(j) = Rational(1);
    inv.col(j) = solve_exact(a, e);
  }
  return inv;
}

JIInverse ji_inverse(const Rational& r, const Rational& s, int n) {
  const Rational denom = r - Rational(n) * s;
  if (r == Rational(0) || denom == Rational(0)) {
    throw std::domain_error("ji_inverse: rI - sJ is singular (r = 0 or r = ns)");
  }
  return {Rational(1) / r, s / (r * denom)};
}

Rational rank_one_det(const RatMatrix& m, const RatVector& u, const RatVector& w) {
  const Rational d = determinant(m);
  if (d == Rational(0)) throw std::domain_error("rank_one_det: singular matrix");
  const RatVector y = solve_exact(m, u);
  Rational dot(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) dot += w(i) * y(i);
  return (Rational(1) + dot) * d;
}

CountingIdentity counting_identity(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("counting_identity: need n >= 1 and m >= 1");
  const BigInt bn(n);
  CountingIdentity out;
  for (int j = 0; j < m; ++j) {
    out.lhs += pow(BigInt(2), static_cast<unsigned>(j)) * bn * (bn - 1) * pow(bn + 1, static_cast<unsigned>(m - j - 1));
  }
  out.lhs += pow(BigInt(2), static_cast<unsigned>(m)) * bn;
  out.rhs = bn * pow(bn + 1, static_cast<unsigned>(m));
  return out;
}

bool counting_identity_check(int n, int m) { return counting_identity(n, m).holds(); }

RationalFunction coronal(const IntMatrix& m) {
  const IntPolynomial base = char_poly(m);
  const IntPolynomial shifted = char_poly(m + ones(m.rows(), m.cols()));
  return RationalFunction(shifted - base, base);
}

RationalFunction regular_coronal(int m, int r, int k) {
  return RationalFunction(IntPolynomial(BigInt(m)),
                          IntPolynomial(std::vector<BigInt>{BigInt(r) * (k - 1), BigInt(-1)}));
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace hypercorona
