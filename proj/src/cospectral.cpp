#include "hypercorona/cospectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hypercorona {

std::vector<Vertex> SwitchingPlan::ordering() const {
  std::vector<Vertex> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), residual.begin(), residual.end());
  return out;
}

SwitchingPlan SwitchingPlan::reversed() const {
  SwitchingPlan out = *this;
  for (std::size_t i = 0; i + 1 < out.blocks.size(); i += 2) std::swap(out.blocks[i], out.blocks[i + 1]);
  return out;
}

void SwitchingPlan::validate(int n, int k) const {
  if (blocks.empty() || blocks.size() % 2 != 0) throw CospectralError("plan needs a positive even number of blocks");
  const std::size_t m = blocks.front().size();
  if (m == 0) throw CospectralError("plan blocks must be non-empty");
  for (const auto& b : blocks) {
    if (b.size() != m) throw CospectralError("plan blocks must share one size");
  }
  if (static_cast<int>(residual.size()) != k - 1) {
    throw CospectralError("residual block must have k - 1 = " + std::to_string(k - 1) + " vertices");
  }
  VertexPartition part{blocks};
  part.blocks.push_back(residual);
  try {
    part.validate(n);
  } catch (const HypergraphError& e) {
    throw CospectralError(std::string("plan: ") + e.what());
  }
}

bool ConditionReport::admissible() const {
  if (!plan_error.empty()) return false;
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  auto all_hold = [](const std::vector<PairSums>& v) {
    return std::all_of(v.begin(), v.end(), [](const PairSums& s) { return s.holds; });
  };
  return all(neighbourhood) && all(residual_blocks) && all_hold(sums) && all_hold(balanced_sums);
}

std::string ConditionReport::summary() const {
  if (!plan_error.empty()) return plan_error;
  for (std::size_t q = 0; q < neighbourhood.size(); ++q) {
    if (!neighbourhood[q]) return "neighbourhood condition fails for pair " + std::to_string(q);
    if (!residual_blocks[q]) return "residual Seidel columns are unbalanced for pair " + std::to_string(q);
  }
  for (const auto& s : sums) {
    if (!s.holds) return s.failure;
  }
  for (const auto& s : balanced_sums) {
    if (!s.holds) return "balanced " + s.failure;
  }
  return "admissible";
}

std::vector<Vertex> neighbourhood(const Hypergraph& h, std::span<const Vertex> u) {
  std::vector<Vertex> key(u.begin(), u.end());
  std::sort(key.begin(), key.end());
  std::vector<Vertex> out;
  for (const auto& e : h.edges()) {
    if (static_cast<int>(e.size()) != static_cast<int>(key.size()) + 1) continue;
    if (!std::includes(e.begin(), e.end(), key.begin(), key.end())) continue;
    for (Vertex v : e) {
      if (!std::binary_search(key.begin(), key.end(), v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConditionReport check_switching_conditions(const Hypergraph& h, const SwitchingPlan& plan) {
  ConditionReport report;
  try {
    plan.validate(h.order(), h.uniformity());
  } catch (const CospectralError& e) {
    report.plan_error = e.what();
    return report;
  }
  const IntMatrix s = seidel_matrix(h);
  const std::vector<Vertex> nu = neighbourhood(h, plan.residual);
  auto in_nu = [&](Vertex v) { return std::binary_search(nu.begin(), nu.end(), v); };
  const int pairs = plan.pair_count();
  const int m = plan.block_size();

  for (int q = 0; q < pairs; ++q) {
    const auto& first = plan.blocks[static_cast<std::size_t>(2 * q)];
    const auto& second = plan.blocks[static_cast<std::size_t>(2 * q + 1)];
    report.neighbourhood.push_back(std::all_of(first.begin(), first.end(), in_nu) &&
                                   std::none_of(second.begin(), second.end(), in_nu));
    // Switching adds 2 to S(v, u) on U_i and subtracts 2 on U_(i+1); P
    // reproduces that exactly when the column sums differ by -2m.
    bool residual_ok = true;
    for (Vertex u : plan.residual) {
      std::int64_t diff = 0;
      for (Vertex v : first) diff += s(v, u);
      for (Vertex v : second) diff -= s(v, u);
      residual_ok = residual_ok && diff == -2 * m;
    }
    report.residual_blocks.push_back(residual_ok);
  }

  // Stated form: column s sums over r of S(i,j) - S(i,j+1), row r sums over
  // s of S(i,j) - S(i+1,j). Balanced form: the same differences with rows and
  // columns exchanged, which is what P S P = S~ needs.
  auto evaluate = [&](int p, int q, bool balanced) {
    const auto& ri = plan.blocks[static_cast<std::size_t>(2 * p)];
    const auto& ri1 = plan.blocks[static_cast<std::size_t>(2 * p + 1)];
    const auto& cj = plan.blocks[static_cast<std::size_t>(2 * q)];
    const auto& cj1 = plan.blocks[static_cast<std::size_t>(2 * q + 1)];
    PairSums ps;
    ps.i = 2 * p;
    ps.j = 2 * q;
    std::optional<std::int64_t> l;
    auto expect = [&](std::int64_t value, const std::string& where) {
      if (!ps.failure.empty()) return;
      if (!l) {
        l = value;
      } else if (*l != value) {
        ps.failure = "blocks (" + std::to_string(ps.i) + "," + std::to_string(ps.j) + "): " + where + " gives " +
                     std::to_string(value) + ", expected " + std::to_string(*l);
      }
    };
    const std::string along_j = balanced ? "row sum " : "column sum ";
    const std::string along_i = balanced ? "column sum " : "row sum ";
    for (int x = 0; x < m; ++x) {
      std::int64_t a = 0;
      std::int64_t b = 0;
      for (int y = 0; y < m; ++y) {
        const int r = balanced ? x : y;
        const int c = balanced ? y : x;
        a += s(ri[r], cj[c]) - s(ri[r], cj1[c]);
        b += s(ri1[r], cj1[c]) - s(ri1[r], cj[c]);
      }
      expect(a, along_j + std::to_string(x) + " of S(i,j) - S(i,j+1)");
      expect(b, along_j + std::to_string(x) + " of S(i+1,j+1) - S(i+1,j)");
    }
    for (int x = 0; x < m; ++x) {
      std::int64_t a = 0;
      std::int64_t b = 0;
      for (int y = 0; y < m; ++y) {
        const int r = balanced ? y : x;
        const int c = balanced ? x : y;
        a += s(ri[r], cj[c]) - s(ri1[r], cj[c]);
        b += s(ri1[r], cj1[c]) - s(ri[r], cj1[c]);
      }
      expect(a, along_i + std::to_string(x) + " of S(i,j) - S(i+1,j)");
      expect(b, along_i + std::to_string(x) + " of S(i+1,j+1) - S(i,j+1)");
    }
    ps.holds = ps.failure.empty();
    if (ps.holds) ps.l = l;
    return ps;
  };

  std::optional<std::int64_t> common;
  for (int p = 0; p < pairs; ++p) {
    for (int q = 0; q < pairs; ++q) {
      PairSums ps = evaluate(p, q, false);
      if (ps.holds) {
        if (!common) {
          common = ps.l;
        } else if (*common != *ps.l) {
          report.uniform_l = false;
        }
      }
      report.sums.push_back(std::move(ps));
      report.balanced_sums.push_back(evaluate(p, q, true));
    }
  }
  return report;
}

Hypergraph apply_switching_unchecked(const Hypergraph& h, const SwitchingPlan& plan) {
  plan.validate(h.order(), h.uniformity());
  std::set<Edge> edges(h.edges().begin(), h.edges().end());
  auto with_residual = [&](Vertex v) {
    Edge e(plan.residual.begin(), plan.residual.end());
    e.push_back(v);
    std::sort(e.begin(), e.end());
    return e;
  };
  for (int q = 0; q < plan.pair_count(); ++q) {
    for (Vertex v : plan.blocks[static_cast<std::size_t>(2 * q)]) edges.erase(with_residual(v));
    for (Vertex v : plan.blocks[static_cast<std::size_t>(2 * q + 1)]) edges.insert(with_residual(v));
  }
  return {h.order(), h.uniformity(), std::vector<Edge>(edges.begin(), edges.end())};
}

Hypergraph apply_switching(const Hypergraph& h, const SwitchingPlan& plan) {
  const ConditionReport report = check_switching_conditions(h, plan);
  if (!report.admissible()) throw CospectralError("switching refused: " + report.summary());
  return apply_switching_unchecked(h, plan);
}

RatMatrix switching_matrix(const SwitchingPlan& plan) {
  const int m = plan.block_size();
  const auto total = static_cast<Eigen::Index>(plan.ordering().size());
  RatMatrix p = RatMatrix::Constant(total, total, Rational(0));
  const Rational share(BigInt(1), BigInt(m));
  for (int q = 0; q < plan.pair_count(); ++q) {
    const Eigen::Index base = static_cast<Eigen::Index>(2 * q) * m;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int r = 0; r < m; ++r) {
          for (int c = 0; c < m; ++c) {
            Rational v = a == b ? Rational(r == c ? 1 : 0) - share : share;
            p(base + a * m + r, base + b * m + c) = v;
          }
        }
      }
    }
  }
  for (Eigen::Index i = static_cast<Eigen::Index>(plan.blocks.size()) * m; i < total; ++i) p(i, i) = Rational(1);
  return p;
}

bool conjugation_identity(const Hypergraph& h, const Hypergraph& switched, const SwitchingPlan& plan) {
  const std::vector<Vertex> order = plan.ordering();
  const RatMatrix s = to_rational(permute(seidel_matrix(h), order));
  const RatMatrix st = to_rational(permute(seidel_matrix(switched), order));
  const RatMatrix p = switching_matrix(plan);
  const RatMatrix conj = p * s * p;
  return conj == st;
}

std::string verdict_name(IsomorphismEvidence::Verdict v) {
  switch (v) {
    case IsomorphismEvidence::Verdict::Isomorphic:
      return "isomorphic";
    case IsomorphismEvidence::Verdict::NonIsomorphic:
      return "non-isomorphic";
    case IsomorphismEvidence::Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

std::vector<std::int64_t> sorted_pairs(const IntMatrix& a) {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) out.push_back(a(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Colour refinement run on both hypergraphs at once so colour ids are shared.
// A vertex's new colour is its old colour with the multiset, over incident
// edges, of the sorted colours of the edge's other vertices.
std::pair<std::vector<int>, std::vector<int>> refine(const Hypergraph& h1, const Hypergraph& h2) {
  const int n = h1.order();
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  const DegreeProfile d1 = degree_profile(h1);
  const DegreeProfile d2 = degree_profile(h2);
  for (int v = 0; v < n; ++v) {
    colour[static_cast<std::size_t>(v)] = d1.degrees[static_cast<std::size_t>(v)];
    colour[static_cast<std::size_t>(n + v)] = d2.degrees[static_cast<std::size_t>(v)];
  }
  std::vector<std::vector<std::vector<int>>> incident(static_cast<std::size_t>(2 * n));
  auto index_edges = [&](const Hypergraph& h, int offset) {
    for (const auto& e : h.edges()) {
      for (Vertex v : e) {
        std::vector<int> others;
        for (Vertex w : e) {
          if (w != v) others.push_back(w + offset);
        }
        incident[static_cast<std::size_t>(v + offset)].push_back(std::move(others));
      }
    }
  };
  index_edges(h1, 0);
  index_edges(h2, n);
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<std::vector<int>>>, int> ids;
    std::vector<std::pair<int, std::vector<std::vector<int>>>> sigs(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < 2 * n; ++v) {
      std::vector<std::vector<int>> edge_sigs;
      for (const auto& others : incident[static_cast<std::size_t>(v)]) {
        std::vector<int> cs;
        for (int w : others) cs.push_back(colour[static_cast<std::size_t>(w)]);
        std::sort(cs.begin(), cs.end());
        edge_sigs.push_back(std::move(cs));
      }
      std::sort(edge_sigs.begin(), edge_sigs.end());
      sigs[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(edge_sigs)};
      ids.emplace(sigs[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < 2 * n; ++v) colour[static_cast<std::size_t>(v)] = ids[sigs[static_cast<std::size_t>(v)]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(colour.begin(), colour.begin() + n), std::vector<int>(colour.begin() + n, colour.end())};
}

class Matcher {
 public:
  Matcher(const Hypergraph& h1, const Hypergraph& h2, std::vector<int> c1, std::vector<int> c2,
          std::uint64_t budget)
      : h1_(h1), h2_(h2), a1_(adjacency_matrix(h1)), a2_(adjacency_matrix(h2)), c1_(std::move(c1)),
        c2_(std::move(c2)), budget_(budget) {
    const int n = h1.order();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    choose_order();
    // Each H1 edge is checked once, when its last vertex in the order is placed.
    completes_.resize(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    for (const auto& e : h1.edges()) {
      int last = 0;
      for (Vertex v : e) last = std::max(last, pos[static_cast<std::size_t>(v)]);
      completes_[static_cast<std::size_t>(last)].push_back(&e);
    }
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex>& mapping() const { return map_; }
  bool search() { return extend(0); }

 private:
  void choose_order() {
    const int n = h1_.order();
    std::map<int, int> class_size;
    for (int c : c1_) ++class_size[c];
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> link(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (taken[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto key = [&](int u) {
          return std::tuple(-link[static_cast<std::size_t>(u)], class_size[c1_[static_cast<std::size_t>(u)]], u);
        };
        if (key(v) < key(best)) best = v;
      }
      taken[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      for (int v = 0; v < n; ++v) link[static_cast<std::size_t>(v)] += a1_(best, v) != 0 ? 1 : 0;
    }
  }

  bool consistent(int depth, Vertex u, Vertex image) const {
    for (int i = 0; i < depth; ++i) {
      const Vertex w = order_[static_cast<std::size_t>(i)];
      if (a1_(u, w) != a2_(image, map_[static_cast<std::size_t>(w)])) return false;
    }
    return true;
  }

  bool edges_ok(int depth) const {
    Edge img;
    for (const Edge* e : completes_[static_cast<std::size_t>(depth)]) {
      img.clear();
      for (Vertex v : *e) img.push_back(map_[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (!h2_.has_edge(img)) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == h1_.order()) return true;
    const Vertex u = order_[static_cast<std::size_t>(depth)];
    for (Vertex v = 0; v < h2_.order(); ++v) {
      if (used_[static_cast<std::size_t>(v)] || c2_[static_cast<std::size_t>(v)] != c1_[static_cast<std::size_t>(u)]) continue;
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      if (!consistent(depth, u, v)) continue;
      map_[static_cast<std::size_t>(u)] = v;
      used_[static_cast<std::size_t>(v)] = 1;
      if (edges_ok(depth) && extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(v)] = 0;
      map_[static_cast<std::size_t>(u)] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  const Hypergraph& h1_;
  const Hypergraph& h2_;
  IntMatrix a1_, a2_;
  std::vector<int> c1_, c2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<int> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<std::vector<const Edge*>> completes_;
};

}  // namespace

IsomorphismEvidence refute_isomorphism(const Hypergraph& h1, const Hypergraph& h2, std::uint64_t budget) {
  using V = IsomorphismEvidence::Verdict;
  IsomorphismEvidence ev;
  auto refuted = [&](std::string reason, std::string detail) {
    ev.verdict = V::NonIsomorphic;
    ev.reason = std::move(reason);
    ev.detail = std::move(detail);
    return ev;
  };
  if (h1.order() != h2.order() || h1.uniformity() != h2.uniformity() || h1.size() != h2.size()) {
    std::ostringstream os;
    os << "(n, k, |E|) = (" << h1.order() << ", " << h1.uniformity() << ", " << h1.size() << ") vs (" << h2.order()
       << ", " << h2.uniformity() << ", " << h2.size() << ")";
    return refuted("size", os.str());
  }
  auto d1 = degree_profile(h1).degrees;
  auto d2 = degree_profile(h2).degrees;
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return refuted("degree-sequence", "sorted degree sequences differ");
  if (sorted_pairs(adjacency_matrix(h1)) != sorted_pairs(adjacency_matrix(h2))) {
    return refuted("pair-multiplicity", "multisets of pair multiplicities differ");
  }
  auto [c1, c2] = refine(h1, h2);
  auto h1c = c1;
  auto h2c = c2;
  std::sort(h1c.begin(), h1c.end());
  std::sort(h2c.begin(), h2c.end());
  if (h1c != h2c) return refuted("colour-refinement", "stable colour class sizes differ");

  Matcher matcher(h1, h2, std::move(c1), std::move(c2), budget);
  const bool found = matcher.search();
  ev.nodes = matcher.nodes();
  if (found) {
    ev.verdict = V::Isomorphic;
    ev.reason = "search";
    ev.detail = "isomorphism found";
    ev.mapping = matcher.mapping();
    return ev;
  }
  if (matcher.exceeded()) {
    ev.verdict = V::Inconclusive;
    ev.reason = "budget";
    ev.detail = "search exceeded " + std::to_string(budget) + " nodes";
    return ev;
  }
  ev.verdict = V::NonIsomorphic;
  ev.reason = "exhaustive-search";
  ev.detail = "no isomorphism after " + std::to_string(ev.nodes) + " nodes";
  return ev;
}

std::string kind_name(MatrixKind k) { return k == MatrixKind::Adjacency ? "adjacency" : "seidel"; }

MatrixKind parse_kind(const std::string& name) {
  if (name == "adjacency") return MatrixKind::Adjacency;
  if (name == "seidel") return MatrixKind::Seidel;
  throw std::invalid_argument("unknown matrix kind '" + name + "' (expected adjacency or seidel)");
}

CospectralCertificate certify(const Hypergraph& a, const Hypergraph& b, MatrixKind kind, std::uint64_t budget) {
  CospectralCertificate cert;
  cert.first = a;
  cert.second = b;
  cert.kind = kind;
  cert.model = "hypergraph";
  auto matrix = [&](const Hypergraph& h) { return kind == MatrixKind::Adjacency ? adjacency_matrix(h) : seidel_matrix(h); };
  cert.first_poly = char_poly(matrix(a));
  cert.second_poly = char_poly(matrix(b));
  cert.cospectral = cert.first_poly == cert.second_poly;
  cert.evidence = refute_isomorphism(a, b, budget);
  return cert;
}

Hypergraph corona_of(const Hypergraph& g0, const Hypergraph& g1) {
  return corona_combinatorial(
             CoronaConfig::contiguous(g0, 1, std::vector<Hypergraph>(static_cast<std::size_t>(g0.order()), g1)))
      .hypergraph;
}

CoronaPairCertificate corona_cospectral_pair(const Hypergraph& g0, const Hypergraph& h0, const Hypergraph& g1,
                                             CoronaModel model, std::uint64_t budget) {
  if (g0.order() != h0.order() || g0.uniformity() != h0.uniformity()) {
    throw CospectralError("base hypergraphs differ in order or uniformity");
  }
  const IntMatrix ag = adjacency_matrix(g0);
  const IntMatrix ah = adjacency_matrix(h0);
  if (char_poly(ag) != char_poly(ah)) throw CospectralError("base hypergraphs are not adjacency-cospectral");
  CoronaPairCertificate out;
  auto& cert = out.certificate;
  cert.first = corona_of(g0, g1);
  cert.second = corona_of(h0, g1);
  cert.kind = MatrixKind::Adjacency;
  cert.model = model_name(model);
  cert.first_poly = char_poly(corona_two(g0, g1, model, false).adjacency);
  cert.second_poly = char_poly(corona_two(h0, g1, model, false).adjacency);
  cert.cospectral = cert.first_poly == cert.second_poly;
  cert.evidence = refute_isomorphism(cert.first, cert.second, budget);
  out.coronals_equal = coronal(ag) == coronal(ah);
  return out;
}

CospectralCertificate seidel_cospectral_corona(const Hypergraph& g1, const Hypergraph& h1, const Hypergraph& g0,
                                               CoronaModel model, std::uint64_t budget) {
  if (g1.uniformity() != h1.uniformity() || g0.uniformity() != g1.uniformity()) {
    throw CospectralError("uniformity mismatch");
  }
  if (g1.order() != h1.order()) throw CospectralError("attached hypergraphs differ in order");
  const auto r1 = degree_profile(g1).regular;
  const auto r2 = degree_profile(h1).regular;
  if (!r1 || !r2 || *r1 != *r2) throw CospectralError("attached hypergraphs must be regular of one degree");
  if (!degree_profile(g0).regular && g0.order() > 0) throw CospectralError("base hypergraph must be regular");
  if (char_poly(seidel_matrix(g1)) != char_poly(seidel_matrix(h1))) {
    throw CospectralError("attached hypergraphs are not Seidel-cospectral");
  }
  CospectralCertificate cert;
  cert.first = corona_of(g0, g1);
  cert.second = corona_of(g0, h1);
  cert.kind = MatrixKind::Seidel;
  cert.model = model_name(model);
  cert.first_poly = char_poly(corona_two(g0, g1, model).seidel);
  cert.second_poly = char_poly(corona_two(g0, h1, model).seidel);
  cert.cospectral = cert.first_poly == cert.second_poly;
  cert.evidence = refute_isomorphism(cert.first, cert.second, budget);
  return cert;
}

}  // namespace hypercorona
