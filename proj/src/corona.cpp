#include "hypercorona/corona.hpp"

#include <numeric>

namespace hypercorona {

CoronaConfig CoronaConfig::contiguous(Hypergraph base, int p, std::vector<Hypergraph> attachments) {
  CoronaConfig cfg;
  cfg.partition = contiguous_partition(base.order(), p);
  cfg.base = std::move(base);
  cfg.attachments = std::move(attachments);
  cfg.validate();
  return cfg;
}

int CoronaConfig::p() const {
  const auto p = partition.uniform_block_size();
  if (!p) throw CoronaError("partition blocks must share one size");
  return *p;
}

void CoronaConfig::validate() const {
  try {
    partition.validate(base.order());
  } catch (const HypergraphError& e) {
    throw CoronaError(e.what());
  }
  if (partition.block_count() != attachments.size()) {
    throw CoronaError("need one attachment per block: " + std::to_string(partition.block_count()) + " blocks, " +
                      std::to_string(attachments.size()) + " attachments");
  }
  for (const auto& g : attachments) {
    if (g.uniformity() != base.uniformity()) throw CoronaError("attachment uniformity differs from the base");
  }
}

AttachmentData regular_attachments(const CoronaConfig& cfg) {
  cfg.validate();
  if (cfg.attachments.empty()) throw CoronaError("no attachments");
  AttachmentData out;
  out.m = cfg.attachments.front().order();
  for (std::size_t i = 0; i < cfg.attachments.size(); ++i) {
    const auto& g = cfg.attachments[i];
    if (g.order() != out.m) throw CoronaError("attachments must share one order");
    const DegreeProfile deg = degree_profile(g);
    if (!deg.regular) throw CoronaError("attachment " + std::to_string(i) + " is not regular");
    if (i == 0) {
      out.r = *deg.regular;
    } else if (*deg.regular != out.r) {
      throw CoronaError("attachments must share one degree");
    }
  }
  return out;
}

IntPolynomial CoronaConstants::h() const {
  const BigInt constant = -(1 + 2 * BigInt(r) * (k - 1) + 2 * BigInt(c) * (m - 1));
  return IntPolynomial(std::vector<BigInt>{constant, BigInt(-1)});
}

CoronaConstants corona_constants(int p, int t, int k, int m, int r) {
  CoronaConstants cc;
  cc.p = p;
  cc.t = t;
  cc.k = k;
  cc.m = m;
  cc.r = r;
  cc.b = binomial(p + m - 2, k - 2);
  cc.c = cc.b - binomial(m - 2, k - 2);
  cc.a = p >= 2 ? p * (cc.b - binomial(p - 2, k - 2)) : 0;
  return cc;
}

CoronaConstants corona_constants(const CoronaConfig& cfg) {
  const AttachmentData att = regular_attachments(cfg);
  return corona_constants(cfg.p(), cfg.t(), cfg.k(), att.m, att.r);
}

CoronaResult corona_combinatorial(const CoronaConfig& cfg) {
  cfg.validate();
  CoronaResult result;
  Hypergraph h = cfg.base;
  for (int v = 0; v < cfg.n(); ++v) result.vertex_map.push_back({VertexOrigin::Kind::Base, v, -1, -1, -1});
  for (int i = 0; i < cfg.t(); ++i) {
    const auto& block = cfg.partition.blocks[static_cast<std::size_t>(i)];
    const Hypergraph& g = cfg.attachments[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < block.size(); ++j) {
      h = star_operation(h, block, g);
      for (int v = 0; v < g.order(); ++v) {
        result.vertex_map.push_back({VertexOrigin::Kind::Copy, -1, i, static_cast<int>(j), v});
      }
    }
  }
  result.hypergraph = std::move(h);
  return result;
}

std::vector<int> block_order(const CoronaConfig& cfg) {
  std::vector<int> order = cfg.partition.flattened();
  int total = cfg.n();
  for (std::size_t i = 0; i < cfg.attachments.size(); ++i) {
    total += static_cast<int>(cfg.partition.blocks[i].size()) * cfg.attachments[i].order();
  }
  for (int v = cfg.n(); v < total; ++v) order.push_back(v);
  return order;
}

IntMatrix permute(const IntMatrix& m, const std::vector<int>& order) {
  const auto n = static_cast<Eigen::Index>(order.size());
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return out;
}

namespace {

struct BlockLayout {
  CoronaConstants cc;
  int n = 0;
  int total = 0;
  IntMatrix base;  // base matrix in partition-block order
};

BlockLayout layout(const CoronaConfig& cfg, const IntMatrix& base_matrix) {
  BlockLayout lay;
  lay.cc = corona_constants(cfg);
  lay.n = cfg.n();
  lay.total = lay.n + lay.cc.p * lay.cc.t * lay.cc.m;
  lay.base = permute(base_matrix, cfg.partition.flattened());
  return lay;
}

}  // namespace

IntMatrix corona_adjacency_blocks(const CoronaConfig& cfg) {
  const BlockLayout lay = layout(cfg, adjacency_matrix(cfg.base));
  const auto& cc = lay.cc;
  const int p = cc.p;
  const int m = cc.m;
  IntMatrix out = IntMatrix::Zero(lay.total, lay.total);
  out.topLeftCorner(lay.n, lay.n) = lay.base;
  for (int i = 0; i < cc.t; ++i) {
    out.block(i * p, i * p, p, p) += cc.a * (ones(p, p) - IntMatrix::Identity(p, p));
    const int copies = lay.n + i * p * m;
    out.block(i * p, copies, p, p * m).setConstant(cc.b);
    out.block(copies, i * p, p * m, p).setConstant(cc.b);
    const IntMatrix yi = adjacency_matrix(cfg.attachments[static_cast<std::size_t>(i)]) +
                         cc.c * (ones(m, m) - IntMatrix::Identity(m, m));
    for (int j = 0; j < p; ++j) out.block(copies + j * m, copies + j * m, m, m) = yi;
  }
  return out;
}

IntMatrix corona_seidel_blocks(const CoronaConfig& cfg) {
  const BlockLayout lay = layout(cfg, seidel_matrix(cfg.base));
  const auto& cc = lay.cc;
  const int p = cc.p;
  const int m = cc.m;
  IntMatrix out = ones(lay.total, lay.total);
  out.topLeftCorner(lay.n, lay.n) = lay.base;
  for (int i = 0; i < cc.t; ++i) {
    out.block(i * p, i * p, p, p) -= 2 * cc.a * (ones(p, p) - IntMatrix::Identity(p, p));
    const int copies = lay.n + i * p * m;
    out.block(i * p, copies, p, p * m).setConstant(1 - 2 * cc.b);
    out.block(copies, i * p, p * m, p).setConstant(1 - 2 * cc.b);
    const IntMatrix ysi = seidel_matrix(cfg.attachments[static_cast<std::size_t>(i)]) -
                          2 * cc.c * (ones(m, m) - IntMatrix::Identity(m, m));
    for (int j = 0; j < p; ++j) out.block(copies + j * m, copies + j * m, m, m) = ysi;
  }
  return out;
}

std::string model_name(CoronaModel model) {
  return model == CoronaModel::Kronecker ? "paper4" : "sec3";
}

CoronaModel parse_model(const std::string& name) {
  if (name == "paper4") return CoronaModel::Kronecker;
  if (name == "sec3") return CoronaModel::Induced;
  throw std::invalid_argument("unknown model '" + name + "' (expected paper4 or sec3)");
}

IntMatrix corona_literal_matrix(const IntMatrix& a0, const IntMatrix& a1, std::int64_t b, std::int64_t within) {
  const Eigen::Index n = a0.rows();
  const Eigen::Index m = a1.rows();
  IntMatrix out = IntMatrix::Zero(n + m * n, n + m * n);
  out.topLeftCorner(n, n) = a0;
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (Eigen::Index j = 0; j < m; ++j) {
    out.block(0, n + j * n, n, n) = b * id;
    out.block(n + j * n, 0, n, n) = b * id;
  }
  const IntMatrix inner = a1 + within * (ones(m, m) - IntMatrix::Identity(m, m));
  out.bottomRightCorner(m * n, m * n) = kronecker(inner, id);
  return out;
}

CoronaTwo corona_two(const Hypergraph& g0, const Hypergraph& g1, CoronaModel model, bool require_regular) {
  if (g0.uniformity() != g1.uniformity()) throw CoronaError("uniformity mismatch");
  if (require_regular && !degree_profile(g1).regular) throw CoronaError("attached hypergraph is not regular");
  const int m = g1.order();
  const int k = g0.uniformity();
  CoronaTwo out;
  out.model = model;
  out.b = binomial(m - 1, k - 2);
  out.c = out.b - binomial(m - 2, k - 2);
  const std::int64_t within = model == CoronaModel::Induced ? out.c : 0;
  out.adjacency = corona_literal_matrix(adjacency_matrix(g0), adjacency_matrix(g1), out.b, within);
  out.seidel = seidel_from_adjacency(out.adjacency);
  return out;
}

std::vector<int> kronecker_order(int n, int m) {
  std::vector<int> order(static_cast<std::size_t>(n + n * m));
  std::iota(order.begin(), order.begin() + n, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(n + j * n + i)] = n + i * m + j;
  }
  return order;
}

}  // namespace hypercorona
