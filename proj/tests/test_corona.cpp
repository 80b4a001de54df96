#include <doctest.h>

#include "generators.hpp"
#include "hypercorona/corona.hpp"
#include "oracles.hpp"

using namespace hypercorona;

namespace {

Hypergraph k33() { return complete_hypergraph(3, 3); }
Hypergraph two_triples() { return Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}); }

CoronaConfig two(const Hypergraph& g0, const Hypergraph& g1) {
  return CoronaConfig::contiguous(g0, 1, std::vector<Hypergraph>(static_cast<std::size_t>(g0.order()), g1));
}

IntPolynomial poly(std::vector<long long> ascending) {
  std::vector<BigInt> c;
  for (auto v : ascending) c.emplace_back(v);
  return IntPolynomial(c);
}

}  // namespace

TEST_SUITE("corona") {
  TEST_CASE("constants") {
    const CoronaConstants c = corona_constants(1, 3, 3, 3, 1);
    CHECK(c.a == 0);
    CHECK(c.b == 2);
    CHECK(c.c == 1);
    const CoronaConstants g = corona_constants(1, 4, 2, 5, 2);
    CHECK(g.b == 1);
    CHECK(g.c == 0);
    CHECK(g.a == 0);
    const CoronaConstants p2 = corona_constants(2, 2, 3, 3, 1);
    CHECK(p2.b == binomial(3, 1));
    CHECK(p2.c == binomial(3, 1) - binomial(1, 1));
    CHECK(p2.a == 2 * (binomial(3, 1) - binomial(0, 1)));
    // h = -(1 + 2r(k-1) + 2c(m-1) + x)
    CHECK(c.h() == poly({-(1 + 2 * 1 * 2 + 2 * 1 * 2), -1}));
  }

  TEST_CASE("combinatorial construction") {
    const CoronaResult r = corona_combinatorial(two(k33(), k33()));
    CHECK(r.hypergraph.order() == 12);
    CHECK(r.hypergraph.size() == 13);
    CHECK(r.vertex_map.size() == 12);
    CHECK(r.vertex_map[8].kind == VertexOrigin::Kind::Copy);
    CHECK(r.vertex_map[8].block == 1);
    CHECK(r.vertex_map[8].attachment_vertex == 2);
    CHECK(corona_combinatorial(two(two_triples(), k33())).hypergraph.order() == 16);
    CHECK(corona_combinatorial(two(two_triples(), Hypergraph(0, 3, {}))).hypergraph == two_triples());
  }

  TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(CoronaConfig::contiguous(k33(), 2, {k33()}), std::invalid_argument);
    CoronaConfig bad = two(k33(), k33());
    bad.attachments.pop_back();
    CHECK_THROWS_AS(bad.validate(), CoronaError);
    CHECK_THROWS_AS(two(k33(), complete_hypergraph(3, 2)), CoronaError);
    bad = two(k33(), k33());
    bad.partition.blocks = {{0}, {1}, {1}};
    CHECK_THROWS(bad.validate());
    // unequal orders: fine combinatorially, rejected by the matrix models
    CoronaConfig mixed = CoronaConfig::contiguous(k33(), 1, {k33(), complete_hypergraph(4, 3), k33()});
    CHECK(corona_combinatorial(mixed).hypergraph.order() == 3 + 3 + 4 + 3);
    CHECK_THROWS_AS(corona_adjacency_blocks(mixed), CoronaError);
  }

  TEST_CASE("combinatorial corona matches brute-force enumeration and the blocks") {
    gen::Rng rng(101);
    for (int trial = 0; trial < 120; ++trial) {
      const CoronaConfig cfg = gen::random_config(rng);
      const CoronaResult r = corona_combinatorial(cfg);
      CHECK(r.hypergraph == oracle::brute_force_corona(cfg));
      CHECK(r.hypergraph.order() == cfg.n() + cfg.p() * cfg.t() * cfg.attachments.front().order());
      std::vector<int> base(static_cast<std::size_t>(cfg.n()));
      std::iota(base.begin(), base.end(), 0);
      CHECK(induced_subhypergraph(r.hypergraph, base) == cfg.base);

      const IntMatrix blocks = corona_adjacency_blocks(cfg);
      const IntMatrix comb = permute(adjacency_matrix(r.hypergraph), block_order(cfg));
      CHECK(blocks == comb);
      const auto size = blocks.rows();
      CHECK(corona_seidel_blocks(cfg) == ones(size, size) - IntMatrix::Identity(size, size) - 2 * blocks);

      const CoronaConstants c = corona_constants(cfg);
      for (Eigen::Index i = cfg.n(); i < size; ++i) CHECK(blocks.row(i).sum() == c.copy_row_sum() + c.p * c.b);
      const IntMatrix hs = corona_seidel_blocks(cfg).topRightCorner(cfg.n(), size - cfg.n());
      for (Eigen::Index i = 0; i < hs.rows(); ++i)
        for (Eigen::Index j = 0; j < hs.cols(); ++j) CHECK((hs(i, j) == 1 || hs(i, j) == 1 - 2 * c.b));
    }
  }

  TEST_CASE("two-hypergraph matrices") {
    const CoronaTwo lit = corona_two(two_triples(), k33(), CoronaModel::Kronecker);
    CHECK(lit.b == 2);
    CHECK(lit.c == 1);
    CHECK(lit.adjacency == oracle::literal_corona(adjacency_matrix(two_triples()), adjacency_matrix(k33()), 2));
    CHECK(sign_normalized(char_poly(lit.adjacency)) ==
          pow(poly({1, 1}), 8) * poly({-16, 0, 1}) * poly({-12, -2, 1}) * poly({80, 80, -16, -6, 1}));
    CHECK(lit.seidel == seidel_from_adjacency(lit.adjacency));

    const CoronaTwo sec3 = corona_two(two_triples(), k33(), CoronaModel::Induced);
    const Hypergraph comb = corona_combinatorial(two(two_triples(), k33())).hypergraph;
    CHECK(char_poly(sec3.adjacency) == char_poly(adjacency_matrix(comb)));
    CHECK(sec3.adjacency == permute(adjacency_matrix(comb), kronecker_order(4, 3)));
    const IntMatrix diff = sec3.adjacency - lit.adjacency;
    CHECK(diff.topRows(4).isZero());
    CHECK(diff.sum() == 4 * 3 * 2);

    // graphs: both models coincide
    const Hypergraph c3 = complete_hypergraph(3, 2);
    CHECK(corona_two(c3, c3, CoronaModel::Kronecker).adjacency ==
          corona_two(c3, c3, CoronaModel::Induced).adjacency);
    CHECK_THROWS_AS(corona_two(k33(), two_triples(), CoronaModel::Kronecker), CoronaError);
    CHECK_NOTHROW(corona_two(k33(), two_triples(), CoronaModel::Kronecker, false));
  }

  TEST_CASE("model names") {
    CHECK(model_name(parse_model("paper4")) == "paper4");
    CHECK(model_name(parse_model("sec3")) == "sec3");
    CHECK_THROWS(parse_model("other"));
  }
}
