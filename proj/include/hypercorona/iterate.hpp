#pragma once

// The corona hypergraph G0^(m): G0^(1) = G0 and G0^(m) attaches one copy of
// G0 to every vertex of G0^(m-1).

#include <string>
#include <vector>

#include "hypercorona/corona.hpp"
#include "hypercorona/spectrum.hpp"
#include "hypercorona/theorems.hpp"

namespace hypercorona {

/// Throws CoronaError for depth < 1.
Hypergraph corona_hypergraph(const Hypergraph& g0, int depth);

/// n (n+1)^(depth-1)
BigInt corona_hypergraph_order(int n, int depth);

struct SizeReport {
  BigInt combinatorial;  ///< edges of the constructed hypergraph
  /// e (n+1)^(m-1) + C(n, k-1) ((n+1)^(m-2) - 1) as stated; at depth 1 the
  /// exponent m-2 is negative and the base case e is reported instead.
  Rational reference_formula;
  bool reference_defined = true;  ///< false at depth 1
  /// e (n+1)^(m-1) + C(n, k-1) ((n+1)^(m-1) - 1), solved from the recurrence
  /// e_m = e_(m-1) + |V(G0^(m-1))| (e + C(n, k-1)).
  BigInt recurrence_formula;
  bool discrepancy() const { return reference_formula != Rational(combinatorial); }
};
SizeReport corona_hypergraph_size(const Hypergraph& g0, int depth);

/// phi(x) = (x + r(k-1) +- sqrt((x - r(k-1))^2 + 4 n C(n-1, k-2)^2)) / 2.
struct PhiMap {
  int r = 0, k = 2, n = 1;
  BigInt shift() const { return BigInt(r) * (k - 1); }
  BigInt coupling() const;
  long double plus(long double x) const;
  long double minus(long double x) const;
  std::pair<AlgebraicValue, AlgebraicValue> apply(const AlgebraicValue& v) const;
};

struct IteratedValue {
  AlgebraicValue value;
  int multiplicity = 1;
  int depth = 0;        ///< number of phi applications
  std::string lineage;  ///< source eigenvalue, then one '+'/'-' per application
};

struct IteratedSpectrum {
  int depth = 1;
  std::vector<IteratedValue> values;
  int order() const;
  std::vector<long double> flattened() const;  // descending
  /// Per-level totals: level j < depth-1 counts 2^j n(n-1)(n+1)^(depth-j-2),
  /// the top level 2^(depth-1) n.
  std::vector<BigInt> level_totals() const;
};

/// Closed-form spectrum of the Kronecker-model iterated matrix for a
/// (k, r)-regular G0 with full adjacency spectrum. Throws CoronaError when the
/// spectrum lacks the Perron value or the multiplicity accounting fails.
IteratedSpectrum iterated_spectrum(const Spectrum& g0, int r, int k, int depth);

/// A^(1) = A(G0); A^(m) = corona_literal_matrix(A^(m-1), A(G0), C(n-1, k-2)).
IntMatrix iterated_literal_matrix(const Hypergraph& g0, int depth);

}  // namespace hypercorona
