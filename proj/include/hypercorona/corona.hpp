#pragma once

// Generalized corona products: the explicit edge-set construction and the
// block-matrix models built from the constants a, b, c, h.
//
// Block-matrix vertex ordering: base vertices block by block in partition
// order, then attachment copies grouped by block, then copy index, each copy
// listing its own vertices in order. The combinatorial construction uses the
// base hypergraph's own labels for base vertices and the same copy order, so
// block_order() is the only permutation between the two.

#include <cstdint>
#include <string>
#include <vector>

#include "hypercorona/hypergraph.hpp"
#include "hypercorona/linalg.hpp"

namespace hypercorona {

class CoronaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoronaConfig {
  Hypergraph base{2};
  VertexPartition partition;
  std::vector<Hypergraph> attachments;  // one per partition block

  /// Blocks {0..p-1}, {p..2p-1}, ... of the base.
  static CoronaConfig contiguous(Hypergraph base, int p, std::vector<Hypergraph> attachments);

  int n() const { return base.order(); }
  int k() const { return base.uniformity(); }
  int t() const { return static_cast<int>(partition.block_count()); }
  /// Common block size; throws CoronaError when blocks differ in size.
  int p() const;
  /// Throws CoronaError for an invalid partition, a block/attachment count
  /// mismatch or a uniformity mismatch.
  void validate() const;
};

/// Regularity data the matrix models need: all attachments (k, r)-regular of
/// a common order m. Throws CoronaError otherwise.
struct AttachmentData {
  int m = 0;
  int r = 0;
};
AttachmentData regular_attachments(const CoronaConfig& cfg);

struct CoronaConstants {
  int p = 1, t = 1, k = 2, m = 1, r = 0;
  std::int64_t a = 0, b = 0, c = 0;
  /// h(x) = -(1 + 2r(k-1) + 2c(m-1) + x)
  IntPolynomial h() const;
  /// r(k-1) + c(m-1): row sum inside an attachment copy.
  std::int64_t copy_row_sum() const { return static_cast<std::int64_t>(r) * (k - 1) + c * (m - 1); }
};
CoronaConstants corona_constants(int p, int t, int k, int m, int r);
CoronaConstants corona_constants(const CoronaConfig& cfg);

struct VertexOrigin {
  enum class Kind { Base, Copy };
  Kind kind = Kind::Base;
  int base_vertex = -1;       // Base
  int block = -1;             // Copy
  int copy = -1;              // Copy
  int attachment_vertex = -1; // Copy
};

struct CoronaResult {
  Hypergraph hypergraph{2};
  std::vector<VertexOrigin> vertex_map;
};

/// Attaches p copies of attachment i to block i by the star operation.
/// Attachments of different orders are allowed here.
CoronaResult corona_combinatorial(const CoronaConfig& cfg);

/// block_order(cfg)[i] is the combinatorial vertex at block-matrix index i.
std::vector<int> block_order(const CoronaConfig& cfg);

/// Rows and columns of m reordered so entry (i, j) is m(order[i], order[j]).
IntMatrix permute(const IntMatrix& m, const std::vector<int>& order);

/// [[X, H], [H^T, Y]] with X = A(G0) + a I_t (x) (J_p - I_p), H = b I_t (x) J_{p,pm},
/// Y = diag(I_p (x) (A(G_i) + c(J_m - I_m))).
IntMatrix corona_adjacency_blocks(const CoronaConfig& cfg);

/// [[X_S, H_S], [H_S^T, Y_S]] with X_S = S(G0) - 2a I_t (x) (J_p - I_p),
/// H_S = (J_t - 2b I_t) (x) J_{p,pm}, Y_S = J + diag(I_p (x) (Y_Si - J)).
IntMatrix corona_seidel_blocks(const CoronaConfig& cfg);

/// Which matrix the two-hypergraph corona is read as.
///  Kronecker: A(G1) (x) I_n inside the copies.
///  Induced: additionally c(J_m - I_m) (x) I_n, the within-copy pairs
///  the join adds when k >= 3.
enum class CoronaModel { Kronecker, Induced };
std::string model_name(CoronaModel model);  // "paper4" / "sec3"
CoronaModel parse_model(const std::string& name);

/// Corona of a base matrix with one copy of an attachment per base vertex, in
/// Kronecker ordering: attachment vertex j of the copy on base vertex i sits
/// at index n + j n + i.
///   [[A0, b J_{1,m} (x) I_n], [b J_{m,1} (x) I_n, (A1 + within (J_m - I_m)) (x) I_n]]
IntMatrix corona_literal_matrix(const IntMatrix& a0, const IntMatrix& a1, std::int64_t b,
                                std::int64_t within = 0);

struct CoronaTwo {
  IntMatrix adjacency;
  IntMatrix seidel;
  CoronaModel model = CoronaModel::Kronecker;
  std::int64_t b = 0;
  std::int64_t c = 0;
};
/// G0 corona G1 (p = 1, t = n) in Kronecker ordering. The matrices are
/// defined for any G1; require_regular enforces the theorems' hypothesis.
CoronaTwo corona_two(const Hypergraph& g0, const Hypergraph& g1, CoronaModel model,
                     bool require_regular = true);

/// Vertex of corona_combinatorial(G0 corona G1) at Kronecker index i.
std::vector<int> kronecker_order(int n, int m);

}  // namespace hypercorona
