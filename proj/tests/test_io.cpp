#include <doctest.h>

#include <filesystem>

#include "generators.hpp"
#include "hypercorona/io.hpp"

using namespace hypercorona;

namespace {

const std::filesystem::path data_dir = HC_DATA_DIR;

int error_line(std::string_view text) {
  try {
    parse_hg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("hg format") {
  TEST_CASE("parses headers, comments and edges") {
    const Hypergraph h = parse_hg("# fig\nk=3\nn=4\n\ne 2 1 0  # unordered\ne 0 1 3\n");
    CHECK(h == Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(format_hg(h) == "k=3\nn=4\ne 0 1 2\ne 0 1 3\n");
    CHECK(parse_hg("k=2\nn=0\n").order() == 0);
  }

  TEST_CASE("errors carry line numbers") {
    CHECK(error_line("") == 1);
    CHECK(error_line("n=3\n") == 1);
    CHECK(error_line("k=3\ne 0 1 2\n") == 2);
    CHECK(error_line("k=3\nn=4\ne 0 1 x\n") == 3);
    CHECK(error_line("k=3\nn=4\ne 0 1 2\ne 0 1 4\n") == 4);
    CHECK(error_line("k=3\nn=4\ne 0 1\n") == 3);
    CHECK(error_line("k=3\nn=4\ne 0 1 1\n") == 3);
    CHECK(error_line("k=3\nn=4\ne 0 1 2\n\ne 2 1 0\n") == 5);
    CHECK(error_line("k=3\nn=4\nedge 0 1 2\n") == 3);
    CHECK(error_line("k=0\nn=4\n") == 1);
    try {
      parse_hg("k=3\nn=4\ne 0 1 7\n", "bad.hg");
      FAIL("no error");
    } catch (const ParseError& e) {
      const std::string what = e.what();
      CHECK(what.find("bad.hg") != std::string::npos);
      CHECK(what.find("out of range") != std::string::npos);
    }
  }

  TEST_CASE("JSON mirror round trips") {
    gen::Rng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
      const Hypergraph h = gen::random_hypergraph(rng, gen::uniform(rng, 0, 7), gen::uniform(rng, 2, 4));
      CHECK(hypergraph_from_json(to_json(h)) == h);
      CHECK(hypergraph_from_json(Json::parse(to_json(h).dump())) == h);
    }
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"k":3,"n":3,"edges":[[0,1,3]]})")), ParseError);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"k":3,"edges":[]})")), ParseError);
  }

  TEST_CASE("data files") {
    CHECK(load_hypergraph(data_dir / "two_triples.hg") == Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(load_hypergraph(data_dir / "k33.hg") == complete_hypergraph(3, 3));
    CHECK(load_hypergraph(data_dir / "switching_example.hg").size() == 7);
    CHECK_THROWS(load_hypergraph(data_dir / "missing.hg"));
  }
}

TEST_SUITE("json inputs") {
  TEST_CASE("corona configs") {
    const CoronaConfig cfg = load_config(data_dir / "two_triples_k33.json");
    CHECK(cfg.base.order() == 4);
    CHECK(cfg.p() == 1);
    CHECK(cfg.t() == 4);
    CHECK(cfg.attachments.size() == 4);
    CHECK(cfg.attachments.front() == complete_hypergraph(3, 3));

    const CoronaConfig back = config_from_json(to_json(cfg));
    CHECK(back.base == cfg.base);
    CHECK(back.partition.blocks == cfg.partition.blocks);
    CHECK(back.attachments == cfg.attachments);

    const Json inline_cfg = Json::parse(R"({"base":{"k":3,"n":4,"edges":[[0,1,2]]},"p":2,
      "blocks":[[0,3],[1,2]],"attachments":[{"k":3,"n":3,"edges":[[0,1,2]]},{"k":3,"n":3,"edges":[[0,1,2]]}]})");
    const CoronaConfig c2 = config_from_json(inline_cfg);
    CHECK(c2.p() == 2);
    CHECK(c2.partition.blocks == std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}});

    Json bad = inline_cfg;
    bad["blocks"] = Json::parse("[[0,3],[1,3]]");
    CHECK_THROWS(config_from_json(bad));
    bad = inline_cfg;
    bad.erase("attachments");
    CHECK_THROWS(config_from_json(bad));
  }

  TEST_CASE("switching plans") {
    const SwitchingPlan plan = load_plan(data_dir / "switching_plan.json");
    CHECK(plan.blocks == std::vector<std::vector<Vertex>>{{2, 3, 4}, {5, 6, 7}});
    CHECK(plan.residual == std::vector<Vertex>{0, 1});
    const SwitchingPlan back = plan_from_json(to_json(plan));
    CHECK(back.blocks == plan.blocks);
    CHECK(back.residual == plan.residual);
    CHECK_THROWS(plan_from_json(Json::parse(R"({"blocks":[[0]]})")));
  }

  TEST_CASE("polynomials are exact decimal strings") {
    std::vector<BigInt> c{BigInt("-123456789012345678901234567890"), BigInt(0), BigInt(1)};
    const IntPolynomial p(c);
    const Json j = to_json(p);
    CHECK(j[0] == "-123456789012345678901234567890");
    CHECK(int_polynomial_from_json(j) == p);
    CHECK(int_polynomial_from_json(Json::parse(R"([1, "2"])")) == IntPolynomial(std::vector<BigInt>{1, 2}));
  }

  TEST_CASE("reports serialize") {
    const Spectrum s = numeric_spectrum(adjacency_matrix(complete_hypergraph(3, 3)));
    const Json j = to_json(s);
    CHECK(j.at("order") == 3);
    CHECK(j.at("eigenvalues").size() == 2);
    CHECK(j.at("eigenvalues")[0].at("value") == "2");
    CHECK(j.at("eigenvalues")[1].at("multiplicity") == 2);
    const Json size = to_json(corona_hypergraph_size(complete_hypergraph(3, 3), 2));
    CHECK(size.at("discrepancy") == true);
  }
}
