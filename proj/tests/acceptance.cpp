// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "hypercorona/io.hpp"
#include "oracles.hpp"

using namespace hypercorona;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

IntPolynomial poly(std::vector<long long> ascending) {
  std::vector<BigInt> c;
  for (auto v : ascending) c.emplace_back(v);
  return IntPolynomial(c);
}

Hypergraph two_triples() { return Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}); }
Hypergraph k33() { return complete_hypergraph(3, 3); }

long double scale_of(const std::vector<long double>& v) {
  long double s = 1;
  for (auto x : v) s = std::max(s, std::fabs(x));
  return s;
}

void coronal_pipeline(Check& c) {
  const IntMatrix a0 = adjacency_matrix(two_triples());
  const IntMatrix a1 = adjacency_matrix(k33());
  const IntPolynomial p0 = char_poly(a0);
  const RationalFunction chi = coronal(a1);
  c.require(sign_normalized(p0) == poly({0, -8, -8, 0, 1}), "P_A(G0)");
  c.require(chi == RationalFunction(poly({-3}), poly({-2, 1})), "coronal of K33");
  const IntPolynomial expected =
      pow(poly({1, 1}), 8) * poly({-16, 0, 1}) * poly({-12, -2, 1}) * poly({80, 80, -16, -6, 1});
  const IntPolynomial got = charpoly_via_coronal(p0, char_poly(a1), chi, BigInt(2), 4);
  c.require(sign_normalized(got) == expected, "factorization");
  c.require(sign_normalized(oracle::faddeev_leverrier(oracle::literal_corona(a0, a1, 2))) == expected,
            "literal matrix char poly");
}

void k33_corona_spectrum(Check& c) {
  const CoronaTwoSpectrum s = spectrum_corona_two(k33(), k33());
  const long double r3 = std::sqrt(3.0L), r57 = std::sqrt(57.0L);
  std::vector<long double> expected{2 * (1 + r3), 2 * (1 - r3)};
  for (int i = 0; i < 2; ++i) {
    expected.push_back((1 + r57) / 2);
    expected.push_back((1 - r57) / 2);
  }
  for (int i = 0; i < 6; ++i) expected.push_back(-1);
  const auto closed = s.closed_form.flattened();
  const auto numeric = oracle::jacobi_eigenvalues(oracle::literal_corona(adjacency_matrix(k33()), adjacency_matrix(k33()), 2));
  c.require(closed.size() == 12, "order 12");
  c.require(oracle::max_sorted_distance(closed, expected) <= 1e-12, "closed form equals the listed values");
  c.require(oracle::max_sorted_distance(closed, numeric) <= 1e-8, "closed form vs numeric eigensolve");
  bool exact = true;
  for (const auto& p : s.closed_form.pieces) exact = exact && p.value.is_exact();
  c.require(exact, "all values exact surds");
}

void consistency_suite(Check& c) {
  gen::Rng rng(20240601);
  int checked = 0;
  for (; checked < 220; ++checked) {
    const CoronaConfig cfg = gen::random_config(rng);
    const IntMatrix blocks = corona_adjacency_blocks(cfg);
    const Hypergraph comb = corona_combinatorial(cfg).hypergraph;
    c.require(comb == oracle::brute_force_corona(cfg), "combinatorial corona vs brute force");
    c.require(permute(adjacency_matrix(comb), block_order(cfg)) == blocks, "adjacency vs blocks");
    c.require(oracle::is_char_poly(charpoly_generalized_adjacency(cfg), blocks), "adjacency theorem");
    c.require(oracle::is_char_poly(charpoly_generalized_seidel(cfg), corona_seidel_blocks(cfg)), "Seidel theorem");
  }
  c.note << checked << " configs";
}

void eigenpair_residuals(Check& c) {
  gen::Rng rng(20240602);
  long double worst = 0;
  int pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const CoronaConfig cfg = gen::random_config(rng, 1);
    const Hypergraph& g0 = cfg.base;
    const Hypergraph& g1 = cfg.attachments.front();
    const CoronaTwoSpectrum s = spectrum_corona_two(g0, g1);
    c.require(s.closed_form.order() == g0.order() * (1 + g1.order()), "multiplicity total n(1+m)");
    const IntMatrix lit = oracle::literal_corona(adjacency_matrix(g0), adjacency_matrix(g1),
                                                 binomial(g1.order() - 1, g1.uniformity() - 2));
    const Eigen::MatrixXd a = lit.cast<double>();
    for (const auto& w : s.witnesses) {
      const double norm = w.vector.cwiseAbs().maxCoeff();
      c.require(norm > 0, "non-zero witness");
      const double res = (a * w.vector - static_cast<double>(w.eigenvalue) * w.vector).cwiseAbs().maxCoeff() / norm;
      worst = std::max<long double>(worst, res);
      ++pairs;
    }
    // every closed-form class must have a witness
    c.require(s.witnesses.size() >= s.closed_form.pieces.size(), "witness per eigenvalue class");
  }
  c.require(worst <= 1e-9, "residual <= 1e-9");
  c.note << pairs << " eigenpairs, max residual " << static_cast<double>(worst);
}

void iteration(Check& c) {
  const Hypergraph g0 = k33();
  c.require(corona_hypergraph(g0, 3).order() == 48, "order 48");
  const IteratedSpectrum s = iterated_spectrum(numeric_spectrum(adjacency_matrix(g0)), 1, 3, 3);
  c.require(s.order() == 48, "closed-form order 48");
  const IntMatrix a0 = adjacency_matrix(g0);
  const IntMatrix a = oracle::literal_corona(oracle::literal_corona(a0, a0, 2), a0, 2);
  const auto numeric = oracle::jacobi_eigenvalues(a);
  const long double dev = oracle::max_sorted_distance(s.flattened(), numeric);
  c.require(dev <= 1e-7 * scale_of(numeric), "closed form vs numeric");
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      // level counts 2^j n(n-1)(n+1)^(m-j-1) for j < m plus 2^m n, against n(n+1)^m
      BigInt lhs = 0, pw = 1;
      for (int j = 0; j < m; ++j) {
        BigInt t = pw * n * (n - 1);
        for (int e = 0; e < m - j - 1; ++e) t *= n + 1;
        lhs += t;
        pw *= 2;
      }
      lhs += pw * n;
      BigInt rhs = n;
      for (int e = 0; e < m; ++e) rhs *= n + 1;
      c.require(lhs == rhs, "counting identity oracle");
      const CountingIdentity id = counting_identity(n, m);
      c.require(id.holds() && id.lhs == lhs && id.rhs == rhs, "counting identity");
    }
  c.note << "max deviation " << static_cast<double>(dev);
}

void switching(Check& c) {
  const Hypergraph h(8, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}, {2, 5, 6}, {3, 6, 7}, {4, 5, 7}});
  const SwitchingPlan plan{{{2, 3, 4}, {5, 6, 7}}, {0, 1}};
  c.require(check_switching_conditions(h, plan).admissible(), "example admissible");
  const Hypergraph s = apply_switching(h, plan);
  c.require(oracle::faddeev_leverrier(seidel_matrix(s)) == oracle::faddeev_leverrier(seidel_matrix(h)),
            "example Seidel cospectral");
  c.require(conjugation_identity(h, s, plan), "P S P = S~");
  c.require(refute_isomorphism(h, s).verdict == IsomorphismEvidence::Verdict::NonIsomorphic,
            "example non-isomorphic");

  gen::Rng rng(20240603);
  int instances = 0, mates = 0;
  while (instances < 100) {
    const int k = gen::uniform(rng, 2, 4), m = gen::uniform(rng, 1, 3), t = gen::uniform(rng, 1, 2);
    if ((k - 1) + 2 * t * m > 10) continue;
    const auto inst = gen::random_switching_instance(rng, k, m, t, 200, instances % 2 == 0);
    if (!inst) continue;
    ++instances;
    const Hypergraph sw = apply_switching(inst->h, inst->plan);
    c.require(oracle::faddeev_leverrier(seidel_matrix(sw)) == oracle::faddeev_leverrier(seidel_matrix(inst->h)),
              "random instance Seidel cospectral");
    c.require(conjugation_identity(inst->h, sw, inst->plan), "random instance P S P = S~");
    if (refute_isomorphism(inst->h, sw).verdict == IsomorphismEvidence::Verdict::NonIsomorphic) ++mates;
  }
  c.note << instances << " random instances, " << mates << " non-isomorphic";
}

void size_formula(Check& c) {
  const SizeReport r = corona_hypergraph_size(k33(), 2);
  c.require(r.combinatorial == 13, "combinatorial count 13");
  c.require(BigInt(corona_hypergraph(k33(), 2).size()) == 13, "constructed edges 13");
  c.require(r.reference_formula == Rational(4), "reference formula 4");
  c.require(r.discrepancy(), "discrepancy detected");
  c.note << "combinatorial " << r.combinatorial << ", reference formula " << r.reference_formula.str();
}

void cterm_sign(Check& c) {
  gen::Rng rng(20240604);
  int plus = 0, minus = 0, instances = 0;
  while (instances < 50) {
    const CoronaConfig cfg = gen::random_config(rng, 1);
    const Hypergraph& g1 = cfg.attachments.front();
    const auto r = degree_profile(g1).regular;
    if (!r) continue;
    std::vector<Spectrum> atts;
    for (const auto& a : cfg.attachments) atts.push_back(numeric_spectrum(adjacency_matrix(a)));
    const Spectrum g0 = numeric_spectrum(adjacency_matrix(cfg.base));
    const IntMatrix blocks = corona_adjacency_blocks(cfg);
    const int k = cfg.base.uniformity(), m = g1.order();
    auto exact = [&](CTermSign sign) {
      const RationalFunction f = charpoly_regular_corona(g0, atts, *r, k, m, sign);
      return f.is_polynomial() && oracle::is_char_poly(f.as_polynomial(), blocks);
    };
    plus += exact(CTermSign::Plus);
    minus += exact(CTermSign::Minus);
    ++instances;
  }
  c.require(plus == instances || minus == instances, "one sign exact on all instances");
  c.note << "plus " << plus << "/" << instances << ", minus " << minus << "/" << instances << "; ";
  c.note << (plus == instances ? "plus" : minus == instances ? "minus" : "neither") << " sign is exact";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "coronal factorization example", 1, coronal_pipeline},
      {2, "K33 corona spectrum", 1, k33_corona_spectrum},
      {3, "block consistency suite", 60, consistency_suite},
      {4, "two-hypergraph eigenpair residuals", 60, eigenpair_residuals},
      {5, "iterated corona", 60, iteration},
      {6, "Seidel switching", 60, switching},
      {7, "size formula adjudication", 60, size_formula},
      {8, "c-term sign adjudication", 60, cterm_sign},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.require(secs < cr.limit_s, "runtime limit");
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << cr.id << " " << cr.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << c.note.str() << "\n";
  }
  return all ? 0 : 1;
}
