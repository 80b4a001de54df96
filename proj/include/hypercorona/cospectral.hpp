#pragma once

// Seidel switching on paired vertex blocks and certification of cospectral,
// non-isomorphic hypergraph pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercorona/corona.hpp"
#include "hypercorona/linalg.hpp"

namespace hypercorona {

class CospectralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Blocks U_1..U_2t of a common size m, paired (U_1, U_2), (U_3, U_4), ...,
/// and a residual block U of size k - 1.
struct SwitchingPlan {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> residual;

  int pair_count() const { return static_cast<int>(blocks.size() / 2); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
  /// Blocks then residual: the row order of the partitioned Seidel matrix.
  std::vector<Vertex> ordering() const;
  /// Each pair swapped, so the plan undoes its own switching.
  SwitchingPlan reversed() const;
  /// Throws CospectralError unless the blocks and residual partition 0..n-1
  /// with an even number of equal-size blocks and |U| = k - 1.
  void validate(int n, int k) const;
};

/// Row/column-sum condition for one pair of block pairs (i, i+1), (j, j+1).
struct PairSums {
  int i = 0;  ///< first block of the row pair (0-based, even)
  int j = 0;  ///< first block of the column pair
  bool holds = false;
  std::optional<std::int64_t> l;  ///< common value when all sums agree
  std::string failure;            ///< first violated equality
};

struct ConditionReport {
  std::string plan_error;  ///< non-empty when the plan is malformed
  /// Per pair: N(U) meets U_i u U_(i+1) in exactly U_i.
  std::vector<bool> neighbourhood;
  /// Per pair: for every u in U, the U_i part of column u of S sums to 2m
  /// less than the U_(i+1) part. The similarity argument relies on this; the
  /// neighbourhood condition alone does not force it when other edges meet U.
  std::vector<bool> residual_blocks;
  std::vector<PairSums> sums;
  /// Per (i, j): rows and columns exchanged relative to `sums`, i.e.
  /// w = (1, -1) per block pair is a left and right eigenvector of the pair's
  /// Seidel blocks. The stated sums do not imply this unless S(i,j+1) is
  /// symmetric, and without it P S P can differ from S~.
  std::vector<PairSums> balanced_sums;
  /// All pairs share one l (reported, not required).
  bool uniform_l = true;

  bool admissible() const;
  std::string summary() const;
};

/// N(U) = { v : {v} u U is an edge }.
std::vector<Vertex> neighbourhood(const Hypergraph& h, std::span<const Vertex> u);

ConditionReport check_switching_conditions(const Hypergraph& h, const SwitchingPlan& plan);

/// Replaces every edge {u} u U, u in U_i, by the edges {u'} u U, u' in U_(i+1),
/// for each pair. Throws CospectralError unless the plan is admissible.
Hypergraph apply_switching(const Hypergraph& h, const SwitchingPlan& plan);
/// The same edge replacement without checking the conditions.
Hypergraph apply_switching_unchecked(const Hypergraph& h, const SwitchingPlan& plan);

/// The orthogonal matrix with blocks [[P1, P2], [P2, P1]] per pair,
/// P1 = I - J/m and P2 = J/m, and I on the residual, in plan ordering.
RatMatrix switching_matrix(const SwitchingPlan& plan);

/// Exact check that P S(H) P = S(H') with both Seidel matrices in plan order.
bool conjugation_identity(const Hypergraph& h, const Hypergraph& switched, const SwitchingPlan& plan);

struct IsomorphismEvidence {
  enum class Verdict { Isomorphic, NonIsomorphic, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;  ///< which test decided: invariant name, search, or budget
  std::string detail;
  std::optional<std::vector<Vertex>> mapping;  ///< H1 vertex -> H2 vertex
  std::uint64_t nodes = 0;
};
std::string verdict_name(IsomorphismEvidence::Verdict v);

/// Invariants first (size, degree sequence, pair multiplicities, colour
/// refinement), then backtracking. Exceeding `budget` search nodes yields
/// Inconclusive, never a refutation.
IsomorphismEvidence refute_isomorphism(const Hypergraph& h1, const Hypergraph& h2, std::uint64_t budget = 10'000'000);

enum class MatrixKind { Adjacency, Seidel };
std::string kind_name(MatrixKind k);
MatrixKind parse_kind(const std::string& name);

struct CospectralCertificate {
  Hypergraph first{2};
  Hypergraph second{2};
  MatrixKind kind = MatrixKind::Seidel;
  std::string model;  ///< matrix model the char polys come from
  IntPolynomial first_poly;
  IntPolynomial second_poly;
  bool cospectral = false;  ///< exact polynomial equality
  IsomorphismEvidence evidence;
  /// Cospectral and refuted isomorphic.
  bool is_mate() const {
    return cospectral && evidence.verdict == IsomorphismEvidence::Verdict::NonIsomorphic;
  }
};

/// Char polys of the hypergraphs' own matrices plus isomorphism evidence.
CospectralCertificate certify(const Hypergraph& a, const Hypergraph& b, MatrixKind kind,
                              std::uint64_t budget = 10'000'000);

struct CoronaPairCertificate {
  CospectralCertificate certificate;  ///< coronas and their matrix char polys
  bool coronals_equal = false;        ///< coronal of G0 equals coronal of H0
};

/// G0 corona G1 versus H0 corona G1, adjacency. Throws CospectralError when
/// G0 and H0 are not adjacency-cospectral.
CoronaPairCertificate corona_cospectral_pair(const Hypergraph& g0, const Hypergraph& h0, const Hypergraph& g1,
                                             CoronaModel model = CoronaModel::Kronecker,
                                             std::uint64_t budget = 10'000'000);

/// G0 corona G1 versus G0 corona H1, Seidel. Throws CospectralError unless G1
/// and H1 are (k, r)-regular of equal order with equal char polys and G0 is
/// regular.
CospectralCertificate seidel_cospectral_corona(const Hypergraph& g1, const Hypergraph& h1, const Hypergraph& g0,
                                               CoronaModel model = CoronaModel::Induced,
                                               std::uint64_t budget = 10'000'000);

/// Combinatorial G0 corona G1 with one copy per base vertex.
Hypergraph corona_of(const Hypergraph& g0, const Hypergraph& g1);

}  // namespace hypercorona
