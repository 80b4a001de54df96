#include <doctest.h>

#include "generators.hpp"
#include "hypercorona/theorems.hpp"
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

std::vector<long double> eig(const IntMatrix& m) {
  const auto v = oracle::jacobi_eigenvalues(m);
  return {v.begin(), v.end()};
}

std::vector<Spectrum> spectra(const std::vector<Hypergraph>& hs, bool seidel) {
  std::vector<Spectrum> out;
  for (const auto& h : hs) out.push_back(numeric_spectrum(seidel ? seidel_matrix(h) : adjacency_matrix(h)));
  return out;
}

// p = 1 config whose base is regular too.
CoronaConfig regular_p1_config(gen::Rng& rng) {
  const int k = gen::uniform(rng, 2, 4);
  const int n = gen::uniform(rng, 1, 6);
  const int m = gen::uniform(rng, 1, 5);
  const auto cat = gen::regular_catalogue(m, k);
  auto it = cat.begin();
  std::advance(it, gen::uniform(rng, 0, static_cast<int>(cat.size()) - 1));
  std::vector<Hypergraph> atts;
  for (int i = 0; i < n; ++i) {
    const auto& pool = it->second;
    atts.push_back(relabel(pool[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(pool.size()) - 1))],
                           gen::random_permutation(rng, m)));
  }
  return CoronaConfig::contiguous(gen::random_regular(rng, n, k), 1, atts);
}

}  // namespace

TEST_SUITE("generalized corona") {
  TEST_CASE("all-K33 corona") {
    const CoronaConfig cfg = two(k33(), k33());
    const IntPolynomial blocks = char_poly(corona_adjacency_blocks(cfg));
    CHECK(charpoly_generalized_adjacency(cfg) == blocks);
    CHECK(charpoly_generalized_seidel(cfg) == char_poly(corona_seidel_blocks(cfg)));
    const CoronaConfig single = CoronaConfig::contiguous(k33(), 3, {k33()});
    CHECK(charpoly_generalized_adjacency(single) == char_poly(corona_adjacency_blocks(single)));
    CHECK(charpoly_generalized_seidel(single) == char_poly(corona_seidel_blocks(single)));
  }

  TEST_CASE("randomized configs: both theorems equal the block char polys") {
    gen::Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
      const CoronaConfig cfg = gen::random_config(rng);
      const IntPolynomial a = charpoly_generalized_adjacency(cfg);
      const IntPolynomial s = charpoly_generalized_seidel(cfg);
      CHECK(a == char_poly(corona_adjacency_blocks(cfg)));
      CHECK(s == char_poly(corona_seidel_blocks(cfg)));
      const int total = cfg.n() + cfg.p() * cfg.t() * cfg.attachments.front().order();
      CHECK(a.degree() == total);
      CHECK(s.degree() == total);
    }
  }

  TEST_CASE("non-regular attachments are rejected") {
    CHECK_THROWS_AS(charpoly_generalized_adjacency(two(k33(), two_triples())), CoronaError);
    CHECK_THROWS_AS(charpoly_generalized_seidel(two(k33(), two_triples())), CoronaError);
  }
}

TEST_SUITE("c-term sign") {
  TEST_CASE("plus sign is exact, minus sign is not") {
    const CoronaConfig cfg = two(k33(), k33());
    const IntPolynomial oracle = char_poly(corona_adjacency_blocks(cfg));
    const auto g0 = numeric_spectrum(adjacency_matrix(k33()));
    const auto atts = spectra(cfg.attachments, false);
    const RationalFunction plus = charpoly_regular_corona(g0, atts, 1, 3, 3, CTermSign::Plus);
    const RationalFunction minus = charpoly_regular_corona(g0, atts, 1, 3, 3, CTermSign::Minus);
    CHECK(plus == RationalFunction(oracle));
    CHECK(plus.as_polynomial().degree() == 12);
    CHECK_FALSE(minus == RationalFunction(oracle));
  }

  TEST_CASE("graph corona with K1 attachments") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const Hypergraph g0 = gen::random_hypergraph(rng, gen::uniform(rng, 1, 6), 2);
      const CoronaConfig cfg = two(g0, empty_hypergraph(1, 2));
      const RationalFunction f = charpoly_regular_corona(numeric_spectrum(adjacency_matrix(g0)),
                                                spectra(cfg.attachments, false), 0, 2, 1, CTermSign::Plus);
      CHECK(f == RationalFunction(char_poly(corona_adjacency_blocks(cfg))));
    }
  }

  TEST_CASE("roots match the numeric spectrum of the blocks") {
    const CoronaConfig cfg = two(k33(), k33());
    const IntPolynomial p =
        charpoly_regular_corona(numeric_spectrum(adjacency_matrix(k33())), spectra(cfg.attachments, false), 1, 3, 3,
                       CTermSign::Plus)
            .as_polynomial();
    for (long double v : eig(corona_adjacency_blocks(cfg))) CHECK(relative_residual(p, v) <= 1e-8);
  }
}

TEST_SUITE("Seidel p = 1") {
  TEST_CASE("all-K33 corona") {
    const CoronaConfig cfg = two(k33(), k33());
    const SeidelP1Factors f = charpoly_seidel_p1(numeric_spectrum(seidel_matrix(k33())),
                                                 spectra(cfg.attachments, true), 1, 1, 3, 3);
    CHECK(f.product() == char_poly(corona_seidel_blocks(cfg)));
    CHECK(f.product().degree() == 12);
    CHECK(f.perron.degree() == 2);
    CHECK(f.product() == charpoly_generalized_seidel(cfg));
  }

  TEST_CASE("randomized regular bases") {
    gen::Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
      const CoronaConfig cfg = regular_p1_config(rng);
      const int r0 = degree_profile(cfg.base).regular.value_or(0);
      const AttachmentData att = regular_attachments(cfg);
      const SeidelP1Factors f = charpoly_seidel_p1(numeric_spectrum(seidel_matrix(cfg.base)),
                                                   spectra(cfg.attachments, true), r0, att.r, cfg.k(), att.m);
      CHECK(f.product() == char_poly(corona_seidel_blocks(cfg)));
    }
  }

  TEST_CASE("Perron value must be present") {
    // claims r0 = 0 for K33, whose Seidel spectrum lacks 2
    CHECK_THROWS_AS(charpoly_seidel_p1(numeric_spectrum(seidel_matrix(k33())),
                                       spectra(two(k33(), k33()).attachments, true), 0, 1, 3, 3),
                    CoronaError);
  }
}

TEST_SUITE("two-hypergraph spectra") {
  TEST_CASE("K33 corona K33") {
    const CoronaTwoSpectrum s = spectrum_corona_two(k33(), k33());
    std::vector<std::string> values;
    for (const auto& p : s.closed_form.pieces) values.push_back(p.value.str() + " x" + std::to_string(p.multiplicity));
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<std::string>{"(1 + sqrt(57))/2 x2", "(1 - sqrt(57))/2 x2", "-1 x6",
                                             "2 + 2*sqrt(3) x1", "2 - 2*sqrt(3) x1"});
    CHECK(s.closed_form.order() == 12);
    CHECK(s.max_residual <= 1e-9);
    const IntMatrix lit = corona_two(k33(), k33(), CoronaModel::Kronecker).adjacency;
    CHECK(oracle::max_sorted_distance(s.closed_form.flattened(), eig(lit)) <= 1e-8);
    CHECK(std::fabs(s.spectral_radius - (2 + 2 * std::sqrt(3.0L))) <= 1e-12);
  }

  TEST_CASE("classical corona K1 o K1") {
    const Hypergraph k1 = empty_hypergraph(1, 2);
    const CoronaTwoSpectrum s = spectrum_corona_two(k1, k1);
    const auto v = s.closed_form.flattened();
    // K1 o K1 is K2: the 2x2 matrix [[0, 1], [1, 0]]
    REQUIRE(v.size() == 2);
    CHECK(oracle::max_sorted_distance(v, eig(corona_two(k1, k1, CoronaModel::Kronecker).adjacency)) <= 1e-12);
    CHECK(std::fabs(v[0] - 1) <= 1e-12);
    CHECK(std::fabs(v[1] + 1) <= 1e-12);
  }

  TEST_CASE("randomized: closed form, witnesses, Perron dominance") {
    gen::Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
      const CoronaConfig cfg = gen::random_config(rng, 1);
      const Hypergraph& g0 = cfg.base;
      const Hypergraph& g1 = cfg.attachments.front();
      const CoronaTwoSpectrum s = spectrum_corona_two(g0, g1);
      const IntMatrix lit = corona_two(g0, g1, CoronaModel::Kronecker).adjacency;
      CHECK(s.closed_form.order() == g0.order() * (1 + g1.order()));
      CHECK(s.max_residual <= 1e-9);
      for (const auto& w : s.witnesses) CHECK(w.residual <= 1e-9);
      const auto numeric = eig(lit);
      long double scale = 1;
      for (auto v : numeric) scale = std::max(scale, std::fabs(v));
      CHECK(oracle::max_sorted_distance(s.closed_form.flattened(), numeric) <= 1e-8 * scale);
      CHECK(std::fabs(s.spectral_radius - s.closed_form.largest()) <= 1e-9 * scale);
    }
  }

  TEST_CASE("complete attachments") {
    for (const Hypergraph& g0 : {two_triples(), complete_hypergraph(5, 4)}) {
      const int m = g0.uniformity();
      const Hypergraph km = complete_hypergraph(m, m);
      const ClosedFormSpectrum c = spectrum_corona_complete(numeric_spectrum(adjacency_matrix(g0)), m);
      CHECK(c.order() == g0.order() * (1 + m));
      CHECK(oracle::max_sorted_distance(c.flattened(), spectrum_corona_two(g0, km).closed_form.flattened()) <= 1e-10);
    }
    const ClosedFormSpectrum c = spectrum_corona_complete(numeric_spectrum(adjacency_matrix(two_triples())), 3);
    const IntPolynomial example =
        pow(poly({1, 1}), 8) * poly({-16, 0, 1}) * poly({-12, -2, 1}) * poly({80, 80, -16, -6, 1});
    for (long double v : c.flattened()) CHECK(relative_residual(example, v) <= 1e-8);
    int minus_one = 0;
    for (const auto& p : c.pieces)
      if (p.value.is_exact() && p.value.surd.is_rational() && p.value.surd.as_rational() == Rational(-1))
        minus_one += p.multiplicity;
    CHECK(minus_one == 4 * 2);
  }

  TEST_CASE("Seidel quotient theorem") {
    for (const auto& [g0, g1] : {std::pair{k33(), k33()}, std::pair{complete_hypergraph(3, 2), complete_hypergraph(3, 2)}}) {
      const int r0 = *degree_profile(g0).regular, r1 = *degree_profile(g1).regular;
      const ClosedFormSpectrum c =
          seidel_spectrum_corona_two(numeric_spectrum(seidel_matrix(g0)), numeric_spectrum(seidel_matrix(g1)), r0, r1,
                                     g0.uniformity(), g1.order(), g0.order());
      CHECK(c.order() == g0.order() * (1 + g1.order()));
      const IntMatrix s = corona_two(g0, g1, CoronaModel::Kronecker).seidel;
      CHECK(oracle::max_sorted_distance(c.flattened(), eig(s)) <= 1e-8);
    }
    gen::Rng rng(505);
    for (int trial = 0; trial < 30; ++trial) {
      const CoronaConfig cfg = regular_p1_config(rng);
      const Hypergraph& g0 = cfg.base;
      const Hypergraph g1 = cfg.attachments.front();
      const ClosedFormSpectrum c = [&] {
        try {
          return seidel_spectrum_corona_two(numeric_spectrum(seidel_matrix(g0)), numeric_spectrum(seidel_matrix(g1)),
                                            *degree_profile(g0).regular, *degree_profile(g1).regular, g0.uniformity(),
                                            g1.order(), g0.order());
        } catch (const CoronaError&) {
          return ClosedFormSpectrum{};
        }
      }();
      if (c.pieces.empty()) continue;  // repeated Perron value, covered below
      const IntMatrix s = corona_two(g0, g1, CoronaModel::Kronecker).seidel;
      const auto numeric = eig(s);
      long double scale = 1;
      for (auto v : numeric) scale = std::max(scale, std::fabs(v));
      CHECK(oracle::max_sorted_distance(c.flattened(), numeric) <= 1e-8 * scale);
    }
    // 2K2: Seidel Perron value 1 has multiplicity 3
    const Hypergraph two_k2(4, 2, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(seidel_spectrum_corona_two(numeric_spectrum(seidel_matrix(two_k2)),
                                               numeric_spectrum(seidel_matrix(two_k2)), 1, 1, 2, 4, 4),
                    CoronaError);
  }
}

TEST_SUITE("coronal factorization") {
  TEST_CASE("worked example") {
    const IntMatrix a0 = adjacency_matrix(two_triples()), a1 = adjacency_matrix(k33());
    const IntPolynomial p = charpoly_via_coronal(char_poly(a0), char_poly(a1), coronal(a1), BigInt(2), 4);
    CHECK(sign_normalized(p) ==
          pow(poly({1, 1}), 8) * poly({-16, 0, 1}) * poly({-12, -2, 1}) * poly({80, 80, -16, -6, 1}));
    CHECK(p == charpoly_via_coronal(char_poly(a0), char_poly(a1), regular_coronal(3, 1, 3), BigInt(2), 4));
  }

  TEST_CASE("randomized: equals the literal matrix char poly") {
    gen::Rng rng(606);
    for (int trial = 0; trial < 40; ++trial) {
      const int k = gen::uniform(rng, 2, 4);
      const Hypergraph g0 = gen::random_hypergraph(rng, gen::uniform(rng, 1, 5), k);
      // any attachment works here, regular or not
      const Hypergraph g1 = gen::random_hypergraph(rng, gen::uniform(rng, 1, 4), k);
      const BigInt b = big_binomial(g1.order() - 1, k - 2);
      const IntMatrix a1 = adjacency_matrix(g1);
      const IntPolynomial p =
          charpoly_via_coronal(char_poly(adjacency_matrix(g0)), char_poly(a1), coronal(a1), b, g0.order());
      CHECK(p == char_poly(oracle::literal_corona(adjacency_matrix(g0), a1, static_cast<std::int64_t>(b))));
    }
  }

  TEST_CASE("edgeless graph attachment") {
    const Hypergraph g0 = complete_hypergraph(3, 2);
    const Hypergraph g1 = empty_hypergraph(2, 2);
    const IntMatrix a1 = adjacency_matrix(g1);
    const IntPolynomial p = charpoly_via_coronal(char_poly(adjacency_matrix(g0)), char_poly(a1), coronal(a1), BigInt(1), 3);
    CHECK(p == char_poly(oracle::literal_corona(adjacency_matrix(g0), a1, 1)));
  }
}

TEST_SUITE("lift") {
  TEST_CASE("rational and root-of inputs") {
    const auto [plus, minus] = lift_pair(AlgebraicValue::exact(QuadraticSurd::rational(Rational(2))), BigInt(2), BigInt(12));
    CHECK(plus.str() == "2 + 2*sqrt(3)");
    CHECK(minus.str() == "2 - 2*sqrt(3)");
    // y - lambda = coupling / (y - shift) for a root of x^3 - 3x - 1
    const IntPolynomial f = poly({-1, -3, 0, 1});
    const long double root = 1.879385241571816768L;
    const auto [p2, m2] = lift_pair(AlgebraicValue::root_of(f, root), BigInt(1), BigInt(5));
    for (const auto& v : {p2, m2}) {
      CHECK(std::fabs((v.approx - root) * (v.approx - 1) - 5) <= 1e-12);
      if (!v.is_exact()) CHECK(relative_residual(v.factor, v.approx) <= 1e-12);
    }
  }
}
