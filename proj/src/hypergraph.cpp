#include "hypercorona/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hypercorona {

namespace {

void check_uniformity(int k) {
  if (k < 2) throw HypergraphError("uniformity must be at least 2, got " + std::to_string(k));
}

void check_same_uniformity(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity()) {
    throw HypergraphError("uniformity mismatch: " + std::to_string(a.uniformity()) + " vs " +
                          std::to_string(b.uniformity()));
  }
}

std::vector<Vertex> checked_subset(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw HypergraphError("vertex set has repeats");
  for (Vertex v : s) {
    if (v < 0 || v >= h.order()) throw HypergraphError("vertex " + std::to_string(v) + " out of range");
  }
  return s;
}

// Find-with-path-halving over a parent array.
int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

Hypergraph::Hypergraph(int k) : n_(0), k_(k) { check_uniformity(k); }

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k), edges_(std::move(edges)) {
  check_uniformity(k);
  if (n < 0) throw HypergraphError("negative vertex count");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != k) {
      throw HypergraphError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) +
                            "-uniform hypergraph");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw HypergraphError("edge with repeated vertex");
    if (e.front() < 0 || e.back() >= n) {
      throw HypergraphError("edge vertex out of range 0.." + std::to_string(n - 1));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw HypergraphError("duplicate edge");
}

bool Hypergraph::has_edge(std::span<const Vertex> edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                            });
}

void VertexPartition::validate(int n) const {
  std::vector<char> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
  int count = 0;
  for (const auto& block : blocks) {
    for (Vertex v : block) {
      if (v < 0 || v >= n) throw HypergraphError("partition vertex " + std::to_string(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)]) throw HypergraphError("partition blocks overlap at vertex " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  if (count != n) throw HypergraphError("partition does not cover the vertex set");
}

std::optional<int> VertexPartition::uniform_block_size() const {
  if (blocks.empty()) return std::nullopt;
  const std::size_t p = blocks.front().size();
  for (const auto& b : blocks) {
    if (b.size() != p) return std::nullopt;
  }
  return static_cast<int>(p);
}

std::vector<Vertex> VertexPartition::flattened() const {
  std::vector<Vertex> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

VertexPartition contiguous_partition(int n, int p) {
  if (p <= 0 || n % p != 0) throw HypergraphError("block size must divide the vertex count");
  VertexPartition part;
  for (int start = 0; start < n; start += p) {
    std::vector<Vertex> block(static_cast<std::size_t>(p));
    std::iota(block.begin(), block.end(), start);
    part.blocks.push_back(std::move(block));
  }
  return part;
}

Hypergraph complete_hypergraph(int n, int k) {
  check_uniformity(k);
  if (k > n) throw HypergraphError("complete hypergraph needs k <= n");
  std::vector<Edge> edges;
  for_each_k_subset(n, k, [&](std::span<const Vertex> s) { edges.emplace_back(s.begin(), s.end()); });
  return {n, k, std::move(edges)};
}

Hypergraph empty_hypergraph(int n, int k) { return {n, k, {}}; }

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile profile;
  profile.degrees.assign(static_cast<std::size_t>(h.order()), 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e) ++profile.degrees[static_cast<std::size_t>(v)];
  }
  if (!profile.degrees.empty() &&
      std::all_of(profile.degrees.begin(), profile.degrees.end(),
                  [&](int d) { return d == profile.degrees.front(); })) {
    profile.regular = profile.degrees.front();
  }
  return profile;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> subset) {
  const std::vector<Vertex> s = checked_subset(h, subset);
  std::vector<int> index(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      if (index[static_cast<std::size_t>(v)] < 0) break;
      mapped.push_back(index[static_cast<std::size_t>(v)]);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return {static_cast<int>(s.size()), h.uniformity(), std::move(edges)};
}

Hypergraph join(const Hypergraph& h1, const Hypergraph& h2) {
  check_same_uniformity(h1, h2);
  const int k = h1.uniformity();
  const int n1 = h1.order();
  const int n2 = h2.order();
  std::vector<Edge> edges = h1.edges();
  for (const auto& e : h2.edges()) {
    Edge shifted(e);
    for (auto& v : shifted) v += n1;
    edges.push_back(std::move(shifted));
  }
  // s vertices from the first side, k - s from the second.
  for (int s = 1; s < k; ++s) {
    for_each_k_subset(n1, s, [&](std::span<const Vertex> left) {
      for_each_k_subset(n2, k - s, [&](std::span<const Vertex> right) {
        Edge e(left.begin(), left.end());
        for (Vertex v : right) e.push_back(v + n1);
        edges.push_back(std::move(e));
      });
    });
  }
  return {n1 + n2, k, std::move(edges)};
}

Hypergraph star_operation(const Hypergraph& h1, std::span<const Vertex> subset, const Hypergraph& h2) {
  check_same_uniformity(h1, h2);
  const std::vector<Vertex> s = checked_subset(h1, subset);
  const Hypergraph joined = join(induced_subhypergraph(h1, s), h2);
  const int ns = static_cast<int>(s.size());
  std::vector<Edge> edges = h1.edges();
  for (const auto& e : joined.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) mapped.push_back(v < ns ? s[static_cast<std::size_t>(v)] : v - ns + h1.order());
    edges.push_back(std::move(mapped));
  }
  // Edges of H1[S] appear twice; drop the copies before validation.
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {h1.order() + h2.order(), h1.uniformity(), std::move(edges)};
}

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  check_same_uniformity(h1, h2);
  std::vector<Edge> edges = h1.edges();
  for (const auto& e : h2.edges()) {
    Edge shifted(e);
    for (auto& v : shifted) v += h1.order();
    edges.push_back(std::move(shifted));
  }
  return {h1.order() + h2.order(), h1.uniformity(), std::move(edges)};
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label) {
  if (static_cast<int>(new_label.size()) != h.order()) throw HypergraphError("relabel: size mismatch");
  std::vector<char> hit(new_label.size(), 0);
  for (Vertex v : new_label) {
    if (v < 0 || v >= h.order() || hit[static_cast<std::size_t>(v)]) throw HypergraphError("relabel: not a permutation");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(new_label[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  return {h.order(), h.uniformity(), std::move(edges)};
}

int connected_components(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.order()));
  std::iota(parent.begin(), parent.end(), 0);
  int components = h.order();
  for (const auto& e : h.edges()) {
    const int root = find_root(parent, e.front());
    for (std::size_t i = 1; i < e.size(); ++i) {
      const int other = find_root(parent, e[i]);
      if (other != root) {
        parent[static_cast<std::size_t>(other)] = root;
        --components;
      }
    }
  }
  return components;
}

bool is_connected(const Hypergraph& h) { return connected_components(h) <= 1; }

}  // namespace hypercorona
