#include "hypercorona/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace hypercorona {

namespace {

long double to_ld(const BigInt& v) { return v.convert_to<long double>(); }

bool near_integer(long double v, BigInt* out) {
  const long double r = std::round(v);
  if (std::fabs(v - r) > 1e-6L * std::max(1.0L, std::fabs(v))) return false;
  *out = BigInt(static_cast<long long>(r));
  return true;
}

struct Cluster {
  long double sum = 0;
  int count = 0;
  long double mean() const { return sum / count; }
};

// Groups sorted (descending) values whose consecutive gaps are within tol.
std::vector<Cluster> cluster_values(const std::vector<long double>& values, long double tol) {
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || std::fabs(values[i - 1] - values[i]) > tol) out.emplace_back();
    out.back().sum += values[i];
    ++out.back().count;
  }
  return out;
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt u, BigInt c, const BigInt& radicand, BigInt w)
    : u_(std::move(u)), c_(std::move(c)), w_(std::move(w)) {
  if (w_ == 0) throw std::domain_error("QuadraticSurd: zero denominator");
  if (radicand < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  auto [f, d] = split_square(radicand);
  c_ *= f;
  d_ = d;
  if (c_ == 0 || d_ == 0) {
    c_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    u_ += c_;
    c_ = 0;
    d_ = 0;
  }
  if (w_ < 0) {
    u_ = -u_;
    c_ = -c_;
    w_ = -w_;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(u_, c_), w_);
  if (g > 1) {
    u_ /= g;
    c_ /= g;
    w_ /= g;
  }
}

QuadraticSurd QuadraticSurd::rational(const Rational& q) {
  return QuadraticSurd(q.numerator(), BigInt(0), BigInt(0), q.denominator());
}

Rational QuadraticSurd::as_rational() const {
  if (!is_rational()) throw std::domain_error("QuadraticSurd: value is irrational");
  return Rational(u_, w_);
}

long double QuadraticSurd::value() const {
  return (to_ld(u_) + to_ld(c_) * std::sqrt(to_ld(d_))) / to_ld(w_);
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << u_;
    if (w_ != 1) os << "/" << w_;
    return os.str();
  }
  std::ostringstream root;
  const BigInt ac = abs(c_);
  if (ac != 1) root << ac << "*";
  root << "sqrt(" << d_ << ")";
  std::string body;
  if (u_ != 0) {
    os << u_ << (c_ < 0 ? " - " : " + ") << root.str();
  } else {
    os << (c_ < 0 ? "-" : "") << root.str();
  }
  body = os.str();
  if (w_ == 1) return body;
  return (u_ != 0 ? "(" + body + ")" : body) + "/" + w_.str();
}

AlgebraicValue AlgebraicValue::exact(const QuadraticSurd& s) {
  AlgebraicValue v;
  v.kind = s.is_rational() ? Kind::Rational : Kind::Surd;
  v.surd = s;
  v.approx = s.value();
  return v;
}

AlgebraicValue AlgebraicValue::root_of(IntPolynomial p, long double approx) {
  AlgebraicValue v;
  v.kind = Kind::RootOf;
  v.factor = std::move(p);
  v.approx = approx;
  return v;
}

std::string AlgebraicValue::str() const {
  if (is_exact()) return surd.str();
  std::ostringstream os;
  os.precision(17);
  os << "root(" << to_string(factor) << ") ~ " << static_cast<double>(approx);
  return os.str();
}

int Spectrum::order() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

long double Spectrum::spectral_radius() const {
  long double r = 0;
  for (const auto& e : entries) r = std::max(r, std::fabs(e.value.approx));
  return r;
}

long double Spectrum::largest() const {
  return entries.empty() ? 0.0L : entries.front().value.approx;
}

std::vector<long double> Spectrum::flattened() const {
  std::vector<long double> out;
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.approx);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.cast<double>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigenSolverError("symmetric eigensolver did not converge");
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

long double relative_residual(const IntPolynomial& p, long double v) {
  long double value = 0;
  long double scale = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    value = value * v + to_ld(*it);
    scale = scale * std::fabs(v) + std::fabs(to_ld(*it));
  }
  return scale == 0 ? 0 : std::fabs(value) / scale;
}

Spectrum numeric_spectrum(const IntMatrix& m, double tol) {
  Spectrum spec;
  spec.char_poly = char_poly(m);
  const std::vector<double> raw = symmetric_eigenvalues(m);
  std::vector<long double> pending(raw.begin(), raw.end());
  long double radius = 0;
  for (long double v : pending) radius = std::max(radius, std::fabs(v));
  const long double group_tol = static_cast<long double>(tol) * std::max(1.0L, radius);

  // Takes the `count` pending values closest to `target` out of the list.
  auto take = [&](long double target, int count) {
    for (int i = 0; i < count && !pending.empty(); ++i) {
      auto it = std::min_element(pending.begin(), pending.end(), [&](long double a, long double b) {
        return std::fabs(a - target) < std::fabs(b - target);
      });
      pending.erase(it);
    }
  };

  IntPolynomial rest = sign_normalized(spec.char_poly);

  // Integer roots; the char poly is monic up to sign, so rational roots are integral.
  std::vector<BigInt> candidates;
  for (long double v : pending) {
    BigInt z;
    if (near_integer(v, &z) && std::find(candidates.begin(), candidates.end(), z) == candidates.end()) {
      candidates.push_back(z);
    }
  }
  for (const BigInt& z : candidates) {
    int mult = 0;
    const IntPolynomial linear(std::vector<BigInt>{-z, BigInt(1)});
    IntPolynomial q;
    while (rest.degree() > 0 && try_exact_divide(rest, linear, &q)) {
      rest = q;
      ++mult;
    }
    if (mult == 0) continue;
    take(to_ld(z), mult);
    spec.entries.push_back({AlgebraicValue::exact(QuadraticSurd::rational(Rational(z))), mult, 0, true});
  }

  // Quadratic factors x^2 - Sx + P from pairs of distinct numeric clusters.
  bool found = true;
  while (found && rest.degree() >= 2) {
    found = false;
    std::sort(pending.begin(), pending.end(), std::greater<>());
    const std::vector<Cluster> clusters = cluster_values(pending, group_tol);
    for (std::size_t i = 0; i < clusters.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < clusters.size() && !found; ++j) {
        const long double a = clusters[i].mean();
        const long double b = clusters[j].mean();
        BigInt s;
        BigInt p;
        if (!near_integer(a + b, &s) || !near_integer(a * b, &p)) continue;
        const BigInt disc = s * s - 4 * p;
        if (disc <= 0) continue;
        const BigInt root = isqrt(disc);
        if (root * root == disc) continue;
        const IntPolynomial quad(std::vector<BigInt>{p, -s, BigInt(1)});
        int mult = 0;
        IntPolynomial q;
        while (rest.degree() >= 2 && try_exact_divide(rest, quad, &q)) {
          rest = q;
          ++mult;
        }
        if (mult == 0) continue;
        found = true;
        const QuadraticSurd hi(s, BigInt(1), disc, BigInt(2));
        const QuadraticSurd lo(s, BigInt(-1), disc, BigInt(2));
        take(hi.value(), mult);
        take(lo.value(), mult);
        spec.entries.push_back({AlgebraicValue::exact(hi), mult, 0, true});
        spec.entries.push_back({AlgebraicValue::exact(lo), mult, 0, true});
      }
    }
  }

  std::sort(pending.begin(), pending.end(), std::greater<>());
  for (const Cluster& c : cluster_values(pending, group_tol)) {
    const long double v = c.mean();
    const long double res = relative_residual(spec.char_poly, v);
    spec.entries.push_back({AlgebraicValue::root_of(rest, v), c.count, res, res <= static_cast<long double>(tol)});
  }
  std::stable_sort(spec.entries.begin(), spec.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.value.approx > b.value.approx;
  });
  return spec;
}

long double multiset_distance(std::vector<long double> a, std::vector<long double> b) {
  if (a.size() != b.size()) return std::numeric_limits<long double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  long double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace hypercorona
