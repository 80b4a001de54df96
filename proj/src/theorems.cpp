#include "hypercorona/theorems.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/Householder>
#include <Eigen/QR>

namespace hypercorona {

namespace {

IntPolynomial constant(const BigInt& v) { return IntPolynomial(v); }
IntPolynomial linear(const BigInt& c0, const BigInt& c1) { return IntPolynomial(std::vector<BigInt>{c0, c1}); }
const IntPolynomial& var() {
  static const IntPolynomial x = IntPolynomial::x();
  return x;
}

// Determinant of an n x n matrix of integer polynomials given row-major.
IntPolynomial poly_det(int n, const std::vector<IntPolynomial>& entries) {
  return ring_determinant<IntPolynomial>(
      n, [&](int i, int j) -> const IntPolynomial& { return entries[static_cast<std::size_t>(i * n + j)]; },
      constant(1));
}

// sum_j f_j num^j den^(d - j), i.e. den^d f(num / den) without reduction.
IntPolynomial homogenized(const IntPolynomial& f, const IntPolynomial& num, const IntPolynomial& den) {
  const int d = f.degree();
  if (d < 0) return {};
  IntPolynomial acc = constant(f[d]);
  IntPolynomial den_pow = constant(1);
  for (int j = d - 1; j >= 0; --j) {
    den_pow *= den;
    acc = acc * num + constant(f[j]) * den_pow;
  }
  return acc;
}

// Integer polynomial whose roots include the exact or numeric value.
IntPolynomial defining_polynomial(const AlgebraicValue& v) {
  if (v.kind == AlgebraicValue::Kind::RootOf) return v.factor;
  const QuadraticSurd& s = v.surd;
  if (s.is_rational()) return linear(-s.u(), s.w());
  // (w x - u)^2 - c^2 d
  return IntPolynomial(std::vector<BigInt>{s.u() * s.u() - s.c() * s.c() * s.d(), -2 * s.u() * s.w(), s.w() * s.w()});
}

AlgebraicValue rational_value(const BigInt& v) { return AlgebraicValue::exact(QuadraticSurd::rational(Rational(v))); }

bool equals_integer(const AlgebraicValue& v, const BigInt& target) {
  return v.is_exact() && v.surd.is_rational() && v.surd.w() == 1 && v.surd.u() == target;
}

// Copy of `spec` with one occurrence of the integer `perron` removed.
std::vector<SpectrumEntry> drop_perron(const Spectrum& spec, const BigInt& perron, const std::string& what) {
  std::vector<SpectrumEntry> out = spec.entries;
  for (auto it = out.begin(); it != out.end(); ++it) {
    if (equals_integer(it->value, perron)) {
      if (--it->multiplicity == 0) out.erase(it);
      return out;
    }
  }
  throw CoronaError(what + " spectrum lacks its Perron value " + perron.str());
}

void sort_pieces(std::vector<ClosedFormPiece>& pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), [](const ClosedFormPiece& a, const ClosedFormPiece& b) {
    return a.value.approx > b.value.approx;
  });
}

}  // namespace

IntPolynomial remove_root(const IntPolynomial& p, const BigInt& value) {
  IntPolynomial q;
  if (!try_exact_divide(p, linear(value, BigInt(-1)), &q)) {
    throw CoronaError(value.str() + " is not a root of " + to_string(p));
  }
  return q;
}

IntPolynomial charpoly_generalized_adjacency(const CoronaConfig& cfg) {
  const CoronaConstants cc = corona_constants(cfg);
  const int n = cfg.n();
  const int p = cc.p;
  const IntMatrix a0 = permute(adjacency_matrix(cfg.base), cfg.partition.flattened());
  const IntPolynomial d = linear(BigInt(cc.copy_row_sum()), BigInt(-1));
  // Entries of D * inner, all polynomial.
  const IntPolynomial j_coeff = constant(BigInt(cc.a)) * d - constant(BigInt(cc.b) * cc.b * p * cc.m);
  const IntPolynomial diag = (constant(BigInt(cc.a)) + var()) * d;
  std::vector<IntPolynomial> entries(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntPolynomial e = constant(BigInt(a0(i, j))) * d;
      if (i / p == j / p) e += j_coeff;
      if (i == j) e -= diag;
      entries[static_cast<std::size_t>(i * n + j)] = std::move(e);
    }
  }
  const RationalFunction inner(poly_det(n, entries), pow(d, n));
  IntPolynomial copies = constant(1);
  for (const auto& g : cfg.attachments) {
    const IntMatrix yi = adjacency_matrix(g) + cc.c * (ones(cc.m, cc.m) - IntMatrix::Identity(cc.m, cc.m));
    copies *= pow(char_poly(yi), p);
  }
  return (RationalFunction(copies) * inner).as_polynomial();
}

std::string sign_name(CTermSign s) { return s == CTermSign::Plus ? "plus" : "minus"; }

RationalFunction charpoly_regular_corona(const Spectrum& g0, const std::vector<Spectrum>& attachments, int r, int k, int m,
                                CTermSign sign) {
  const int n = g0.order();
  if (static_cast<int>(attachments.size()) != n) {
    throw CoronaError("need one attachment spectrum per base vertex");
  }
  const BigInt b = binomial(m - 1, k - 2);
  const BigInt c = b - binomial(m - 2, k - 2);
  const BigInt perron = BigInt(r) * (k - 1);
  const BigInt row = perron + c * (m - 1);
  const BigInt lead_root = sign == CTermSign::Plus ? row : perron - c * (m - 1);

  IntPolynomial copies = constant(1);
  for (const auto& s : attachments) {
    if (s.order() != m) throw CoronaError("attachment spectrum order differs from m");
    copies *= shift(remove_root(s.char_poly, perron), c);
  }
  // prod_i (lambda_i' + f) = P0(-f), f = (x^2 - row x - b^2 m) / (row - x).
  const RationalFunction minus_f(
      IntPolynomial(std::vector<BigInt>{b * b * m, row, BigInt(-1)}), linear(row, BigInt(-1)));
  const RationalFunction base = compose(g0.char_poly, minus_f);
  return RationalFunction(pow(linear(lead_root, BigInt(-1)), n) * copies) * base;
}

IntPolynomial charpoly_generalized_seidel(const CoronaConfig& cfg) {
  const CoronaConstants cc = corona_constants(cfg);
  const int n = cfg.n();
  const int p = cc.p;
  const int t = cc.t;
  const BigInt pm = BigInt(p) * cc.m;
  const BigInt a(cc.a);
  const BigInt b(cc.b);
  const IntPolynomial h = cc.h();
  const IntPolynomial hp = h + constant(pm * t);
  const IntPolynomial q = h * hp;
  const IntMatrix s0 = permute(seidel_matrix(cfg.base), cfg.partition.flattened());

  const IntPolynomial all_coeff =
      constant(-pm) * (constant(BigInt(t) - 4 * b) * hp - constant(pm * (t - 2 * b) * (t - 2 * b)));
  const IntPolynomial block_coeff = -(constant(2 * a) * q + constant(4 * pm * b * b) * hp);
  const IntPolynomial diag = (constant(2 * a) - var()) * q;
  std::vector<IntPolynomial> entries(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntPolynomial e = constant(BigInt(s0(i, j))) * q + all_coeff;
      if (i / p == j / p) e += block_coeff;
      if (i == j) e += diag;
      entries[static_cast<std::size_t>(i * n + j)] = std::move(e);
    }
  }
  const RationalFunction inner(poly_det(n, entries), pow(q, n));
  IntPolynomial copies = constant(1);
  for (const auto& g : cfg.attachments) {
    const IntMatrix ysi = seidel_matrix(g) - 2 * cc.c * (ones(cc.m, cc.m) - IntMatrix::Identity(cc.m, cc.m));
    copies *= pow(char_poly(ysi - ones(cc.m, cc.m)), p);
  }
  return (RationalFunction(hp, h) * RationalFunction(copies) * inner).as_polynomial();
}

SeidelP1Factors charpoly_seidel_p1(const Spectrum& g0_seidel, const std::vector<Spectrum>& gi_seidel, int r0, int r,
                                   int k, int m) {
  const int n = g0_seidel.order();
  if (static_cast<int>(gi_seidel.size()) != n) throw CoronaError("need one attachment spectrum per base vertex");
  const BigInt b = binomial(m - 1, k - 2);
  const BigInt c = b - binomial(m - 2, k - 2);
  const IntPolynomial h = corona_constants(1, n, k, m, r).h();
  const BigInt mu1 = BigInt(n - 1) - 2 * BigInt(r0) * (k - 1);

  SeidelP1Factors f;
  f.perron = linear(mu1, BigInt(-1)) * (h + constant(BigInt(m) * n)) - constant(BigInt(m) * (n - 2 * b) * (n - 2 * b));

  const IntPolynomial q0 = remove_root(g0_seidel.char_poly, mu1);
  // h^(n-1) Q0(x + 4mb^2/h)
  f.base = homogenized(q0, var() * h + constant(4 * BigInt(m) * b * b), h);
  for (int i = q0.degree(); i < n - 1; ++i) f.base *= h;

  const BigInt mu1_att = BigInt(m - 1) - 2 * BigInt(r) * (k - 1);
  f.attachments = constant(1);
  for (const auto& s : gi_seidel) {
    if (s.order() != m) throw CoronaError("attachment spectrum order differs from m");
    f.attachments *= shift(remove_root(s.char_poly, mu1_att), -2 * c);
  }
  return f;
}

int ClosedFormSpectrum::order() const {
  int total = 0;
  for (const auto& p : pieces) total += p.multiplicity;
  return total;
}

std::vector<long double> ClosedFormSpectrum::flattened() const {
  std::vector<long double> out;
  for (const auto& p : pieces) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.value.approx);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

long double ClosedFormSpectrum::largest() const {
  long double best = -INFINITY;
  for (const auto& p : pieces) best = std::max(best, p.value.approx);
  return best;
}

std::pair<AlgebraicValue, AlgebraicValue> lift_pair(const AlgebraicValue& v, const BigInt& shift_value,
                                                    const BigInt& coupling) {
  const long double lambda = v.approx;
  const long double r = shift_value.convert_to<long double>();
  const long double root = std::sqrt((lambda - r) * (lambda - r) + 4 * coupling.convert_to<long double>());
  const long double plus = (lambda + r + root) / 2;
  const long double minus = (lambda + r - root) / 2;
  if (coupling == 0) {
    const AlgebraicValue rv = rational_value(shift_value);
    return lambda >= r ? std::pair{v, rv} : std::pair{rv, v};
  }
  if (v.is_exact() && v.surd.is_rational()) {
    const BigInt& u = v.surd.u();
    const BigInt& w = v.surd.w();
    const BigInt disc = (u - shift_value * w) * (u - shift_value * w) + 4 * coupling * w * w;
    return {AlgebraicValue::exact(QuadraticSurd(u + shift_value * w, BigInt(1), disc, 2 * w)),
            AlgebraicValue::exact(QuadraticSurd(u + shift_value * w, BigInt(-1), disc, 2 * w))};
  }
  // y - coupling / (y - shift) = (y (y - shift) - coupling) / (y - shift)
  const IntPolynomial den = linear(-shift_value, BigInt(1));
  const IntPolynomial num = var() * den - constant(coupling);
  const IntPolynomial lifted = sign_normalized(homogenized(defining_polynomial(v), num, den));
  return {AlgebraicValue::root_of(lifted, plus), AlgebraicValue::root_of(lifted, minus)};
}

ClosedFormSpectrum corona_two_closed_form(const Spectrum& g0, const Spectrum& g1, int r, int k, int m) {
  const int n = g0.order();
  if (g1.order() != m) throw CoronaError("attachment spectrum order differs from m");
  const BigInt perron = BigInt(r) * (k - 1);
  const BigInt b = binomial(m - 1, k - 2);
  ClosedFormSpectrum out;
  out.theorem = "4.1";
  out.target = CoronaModel::Kronecker;
  for (const auto& e : g0.entries) {
    const auto [plus, minus] = lift_pair(e.value, perron, BigInt(m) * b * b);
    out.pieces.push_back({plus, e.multiplicity, "base-lift+ " + e.value.str()});
    out.pieces.push_back({minus, e.multiplicity, "base-lift- " + e.value.str()});
  }
  for (const auto& e : drop_perron(g1, perron, "attachment")) {
    out.pieces.push_back({e.value, e.multiplicity * n, "copy-difference " + e.value.str()});
  }
  sort_pieces(out.pieces);
  return out;
}

CoronaTwoSpectrum spectrum_corona_two(const Hypergraph& g0, const Hypergraph& g1, double tol) {
  const DegreeProfile deg = degree_profile(g1);
  if (!deg.regular) throw CoronaError("attached hypergraph is not regular");
  const int n = g0.order();
  const int m = g1.order();
  const int k = g0.uniformity();
  const int r = *deg.regular;
  const IntMatrix a0 = adjacency_matrix(g0);
  const IntMatrix a1 = adjacency_matrix(g1);

  CoronaTwoSpectrum out;
  const Spectrum s0 = numeric_spectrum(a0, tol);
  out.closed_form = corona_two_closed_form(s0, numeric_spectrum(a1, tol), r, k, m);

  const CoronaTwo model = corona_two(g0, g1, CoronaModel::Kronecker);
  const Eigen::MatrixXd big = model.adjacency.cast<double>();
  const double bd = static_cast<double>(model.b);
  const double perron = static_cast<double>(r) * (k - 1);
  const Eigen::Index total = n + static_cast<Eigen::Index>(n) * m;

  auto record = [&](EigenpairWitness w) {
    const Eigen::VectorXd res = big * w.vector - static_cast<double>(w.eigenvalue) * w.vector;
    const double scale = w.vector.cwiseAbs().maxCoeff();
    w.residual = scale == 0 ? INFINITY : res.cwiseAbs().maxCoeff() / scale;
    out.max_residual = std::max(out.max_residual, w.residual);
    out.witnesses.push_back(std::move(w));
  };

  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> base(a0.cast<double>());
    if (base.info() != Eigen::Success) throw EigenSolverError("base eigensolver did not converge");
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lambda = base.eigenvalues()(i);
      const Eigen::VectorXd x = base.eigenvectors().col(i);
      const double root = std::sqrt((lambda - perron) * (lambda - perron) + 4.0 * m * bd * bd);
      for (int branch : {+1, -1}) {
        const double theta = (lambda + perron + branch * root) / 2;
        // Eigenvector (alpha, beta) of [[lambda, m b], [b, r(k-1)]].
        double alpha;
        double beta;
        if (model.b == 0) {
          const bool base_side = (branch > 0) == (lambda >= perron);
          alpha = base_side ? 1.0 : 0.0;
          beta = base_side ? 0.0 : 1.0;
        } else {
          const double a1v = m * bd;
          const double b1v = theta - lambda;
          const double a2v = theta - perron;
          const double b2v = bd;
          if (std::hypot(a1v, b1v) >= std::hypot(a2v, b2v)) {
            alpha = a1v;
            beta = b1v;
          } else {
            alpha = a2v;
            beta = b2v;
          }
        }
        EigenpairWitness w;
        w.construction = EigenpairWitness::Construction::BaseLift;
        w.eigenvalue = theta;
        w.vector = Eigen::VectorXd::Zero(total);
        w.vector.head(n) = alpha * x;
        for (int j = 0; j < m; ++j) w.vector.segment(n + static_cast<Eigen::Index>(j) * n, n) = beta * x;
        record(std::move(w));
      }
    }
  }

  if (m > 1) {
    // Orthonormal basis of the complement of the all-ones vector; A(G1)
    // preserves it because G1 is regular.
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(Eigen::MatrixXd::Ones(m, 1)).householderQ();
    const Eigen::MatrixXd perp = q.rightCols(m - 1);
    const Eigen::MatrixXd reduced = perp.transpose() * a1.cast<double>() * perp;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> att(reduced);
    if (att.info() != Eigen::Success) throw EigenSolverError("attachment eigensolver did not converge");
    for (Eigen::Index j = 0; j < m - 1; ++j) {
      const Eigen::VectorXd y = perp * att.eigenvectors().col(j);
      for (int i = 0; i < n; ++i) {
        EigenpairWitness w;
        w.construction = EigenpairWitness::Construction::CopyDifference;
        w.eigenvalue = att.eigenvalues()(j);
        w.vector = Eigen::VectorXd::Zero(total);
        for (int l = 0; l < m; ++l) w.vector(n + static_cast<Eigen::Index>(l) * n + i) = y(l);
        record(std::move(w));
      }
    }
  }

  const long double top = s0.largest();
  const long double pr = static_cast<long double>(perron);
  out.spectral_radius = (top + pr + std::sqrt((top - pr) * (top - pr) + 4.0L * m * bd * bd)) / 2;
  return out;
}

ClosedFormSpectrum spectrum_corona_complete(const Spectrum& g0, int m) {
  if (m < 2) throw CoronaError("complete attachment needs m >= 2");
  Spectrum km;
  km.char_poly = linear(BigInt(m - 1), BigInt(-1)) * pow(linear(BigInt(-1), BigInt(-1)), m - 1);
  km.entries.push_back({rational_value(BigInt(m - 1)), 1, 0, true});
  km.entries.push_back({rational_value(BigInt(-1)), m - 1, 0, true});
  ClosedFormSpectrum out = corona_two_closed_form(g0, km, 1, m, m);
  out.theorem = "4.2";
  return out;
}

ClosedFormSpectrum seidel_spectrum_corona_two(const Spectrum& g0_seidel, const Spectrum& g1_seidel, int r0, int r1,
                                              int k, int m, int n) {
  if (g0_seidel.order() != n || g1_seidel.order() != m) throw CoronaError("spectrum orders differ from n, m");
  const BigInt b = binomial(m - 1, k - 2);
  const BigInt s = 1 + 2 * BigInt(r1) * (k - 1);
  const BigInt mu0 = BigInt(n - 1) - 2 * BigInt(r0) * (k - 1);
  const BigInt mu1 = BigInt(m - 1) - 2 * BigInt(r1) * (k - 1);

  ClosedFormSpectrum out;
  out.theorem = "seidel-4";
  out.target = CoronaModel::Kronecker;
  for (const auto& e : g0_seidel.entries) {
    if (equals_integer(e.value, mu0) && e.multiplicity > 1) {
      throw CoronaError("base Seidel Perron value " + mu0.str() + " is repeated; cannot tell which copy is Perron");
    }
  }
  for (const auto& e : drop_perron(g0_seidel, mu0, "base Seidel")) {
    const auto [plus, minus] = lift_pair(e.value, -s, 4 * BigInt(m) * b * b);
    out.pieces.push_back({plus, e.multiplicity, "base-lift+ " + e.value.str()});
    out.pieces.push_back({minus, e.multiplicity, "base-lift- " + e.value.str()});
  }
  for (const auto& e : drop_perron(g1_seidel, mu1, "attachment Seidel")) {
    out.pieces.push_back({e.value, e.multiplicity * n, "copy-difference " + e.value.str()});
  }
  const BigInt lin = 2 - BigInt(n) * (m + 1) + 2 * BigInt(r0 + r1) * (k - 1);
  const BigInt con = mu0 * (BigInt(m) * n - 1 - 2 * BigInt(r1) * (k - 1)) - BigInt(m) * (n - 2 * b) * (n - 2 * b);
  const BigInt disc = lin * lin - 4 * con;
  if (disc < 0) throw CoronaError("quotient quadratic has complex roots");
  out.pieces.push_back({AlgebraicValue::exact(QuadraticSurd(-lin, BigInt(1), disc, BigInt(2))), 1, "quotient+"});
  out.pieces.push_back({AlgebraicValue::exact(QuadraticSurd(-lin, BigInt(-1), disc, BigInt(2))), 1, "quotient-"});
  sort_pieces(out.pieces);
  return out;
}

IntPolynomial charpoly_via_coronal(const IntPolynomial& p0, const IntPolynomial& p1, const RationalFunction& chi1,
                                   const BigInt& b, int n) {
  const RationalFunction arg = RationalFunction(var()) + RationalFunction(b * b) * chi1;
  return (RationalFunction(pow(p1, n)) * compose(p0, arg)).as_polynomial();
}

}  // namespace hypercorona
