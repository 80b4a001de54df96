#pragma once

// Finite simple k-uniform hypergraphs on the vertex set {0, ..., n-1} and
// the set-level operations the corona constructions are assembled from.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercorona {

using Vertex = int;
using Edge = std::vector<Vertex>;

class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable k-uniform hypergraph. Every edge is a sorted k-subset of
/// {0, ..., n-1}; the edge list is strictly lexicographically sorted.
class Hypergraph {
 public:
  /// Empty hypergraph on zero vertices.
  explicit Hypergraph(int k);
  /// Validates and canonicalizes. Edges may arrive unsorted; repeated
  /// vertices inside an edge, out-of-range vertices, wrong edge sizes and
  /// duplicate edges throw HypergraphError.
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int order() const { return n_; }
  int uniformity() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// `edge` must be sorted.
  bool has_edge(std::span<const Vertex> edge) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int k_ = 2;
  std::vector<Edge> edges_;
};

/// Blocks of a vertex partition, in the order the corona constructions use.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  /// Throws HypergraphError unless the blocks are disjoint and cover 0..n-1.
  void validate(int n) const;
  /// Common block size, or nullopt when sizes differ.
  std::optional<int> uniform_block_size() const;
  /// Vertices listed block by block.
  std::vector<Vertex> flattened() const;
};

/// Blocks {0..p-1}, {p..2p-1}, ...; requires p to divide n.
VertexPartition contiguous_partition(int n, int p);

struct DegreeProfile {
  std::vector<int> degrees;
  std::optional<int> regular;  ///< common degree when all degrees agree
};

/// Every k-subset of {0..n-1} in lexicographic order; calls `visit` per subset.
template <class Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(std::span<const Vertex>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Hypergraph complete_hypergraph(int n, int k);
Hypergraph empty_hypergraph(int n, int k);
DegreeProfile degree_profile(const Hypergraph& h);

/// Subhypergraph induced by `subset`; vertices are relabelled 0..|S|-1 in
/// increasing original order.
Hypergraph induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> subset);

/// Join: H2's vertices are shifted by H1.order(). Edges are those of both
/// operands plus every k-subset of the union meeting both sides.
Hypergraph join(const Hypergraph& h1, const Hypergraph& h2);

/// H1[S] joined to H2, overlaid on H1. Vertex set V(H1) followed by V(H2)
/// shifted by H1.order(); the induced part keeps its original labels.
Hypergraph star_operation(const Hypergraph& h1, std::span<const Vertex> subset, const Hypergraph& h2);

/// Disjoint union with the second operand shifted by h1.order().
Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);

/// Applies a vertex relabelling (old -> new) that must be a permutation.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label);

/// Number of connected components (isolated vertices count).
int connected_components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

}  // namespace hypercorona
