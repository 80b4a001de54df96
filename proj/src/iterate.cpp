#include "hypercorona/iterate.hpp"

#include <algorithm>
#include <cmath>

namespace hypercorona {

Hypergraph corona_hypergraph(const Hypergraph& g0, int depth) {
  if (depth < 1) throw CoronaError("corona depth must be at least 1");
  Hypergraph current = g0;
  for (int level = 2; level <= depth; ++level) {
    const int order = current.order();
    current = corona_combinatorial(CoronaConfig::contiguous(current, 1, std::vector<Hypergraph>(static_cast<std::size_t>(order), g0)))
                  .hypergraph;
  }
  return current;
}

BigInt corona_hypergraph_order(int n, int depth) {
  if (depth < 1) throw CoronaError("corona depth must be at least 1");
  return BigInt(n) * pow(BigInt(n + 1), static_cast<unsigned>(depth - 1));
}

SizeReport corona_hypergraph_size(const Hypergraph& g0, int depth) {
  SizeReport out;
  const int n = g0.order();
  const BigInt e(g0.size());
  const BigInt joins = big_binomial(n, g0.uniformity() - 1);
  out.combinatorial = BigInt(corona_hypergraph(g0, depth).size());
  const BigInt grow = pow(BigInt(n + 1), static_cast<unsigned>(depth - 1));
  out.recurrence_formula = e * grow + joins * (grow - 1);
  if (depth == 1) {
    out.reference_formula = Rational(e);
    out.reference_defined = false;
  } else {
    const BigInt stated = e * grow + joins * (pow(BigInt(n + 1), static_cast<unsigned>(depth - 2)) - 1);
    out.reference_formula = Rational(stated);
  }
  return out;
}

BigInt PhiMap::coupling() const {
  const BigInt b = binomial(n - 1, k - 2);
  return BigInt(n) * b * b;
}

long double PhiMap::plus(long double x) const {
  const long double s = shift().convert_to<long double>();
  return (x + s + std::sqrt((x - s) * (x - s) + 4 * coupling().convert_to<long double>())) / 2;
}

long double PhiMap::minus(long double x) const {
  const long double s = shift().convert_to<long double>();
  return (x + s - std::sqrt((x - s) * (x - s) + 4 * coupling().convert_to<long double>())) / 2;
}

std::pair<AlgebraicValue, AlgebraicValue> PhiMap::apply(const AlgebraicValue& v) const {
  return lift_pair(v, shift(), coupling());
}

int IteratedSpectrum::order() const {
  int total = 0;
  for (const auto& v : values) total += v.multiplicity;
  return total;
}

std::vector<long double> IteratedSpectrum::flattened() const {
  std::vector<long double> out;
  for (const auto& v : values) out.insert(out.end(), static_cast<std::size_t>(v.multiplicity), v.value.approx);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<BigInt> IteratedSpectrum::level_totals() const {
  std::vector<BigInt> totals(static_cast<std::size_t>(depth), BigInt(0));
  for (const auto& v : values) totals[static_cast<std::size_t>(v.depth)] += v.multiplicity;
  return totals;
}

namespace {

// All 2^times images of v under phi, with lineage suffixes.
std::vector<std::pair<AlgebraicValue, std::string>> iterate_phi(const PhiMap& phi, const AlgebraicValue& v,
                                                                 int times) {
  std::vector<std::pair<AlgebraicValue, std::string>> frontier{{v, ""}};
  for (int i = 0; i < times; ++i) {
    std::vector<std::pair<AlgebraicValue, std::string>> next;
    next.reserve(frontier.size() * 2);
    for (const auto& [value, path] : frontier) {
      auto [plus, minus] = phi.apply(value);
      next.emplace_back(std::move(plus), path + "+");
      next.emplace_back(std::move(minus), path + "-");
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace

IteratedSpectrum iterated_spectrum(const Spectrum& g0, int r, int k, int depth) {
  if (depth < 1) throw CoronaError("corona depth must be at least 1");
  const int n = g0.order();
  const PhiMap phi{r, k, n};
  const BigInt perron = phi.shift();
  IteratedSpectrum out;
  out.depth = depth;

  std::vector<SpectrumEntry> non_perron = g0.entries;
  bool dropped = false;
  for (auto it = non_perron.begin(); it != non_perron.end(); ++it) {
    const auto& v = it->value;
    if (v.is_exact() && v.surd.is_rational() && v.surd.w() == 1 && v.surd.u() == perron) {
      if (--it->multiplicity == 0) non_perron.erase(it);
      dropped = true;
      break;
    }
  }
  if (!dropped) throw CoronaError("base spectrum lacks the Perron value " + perron.str());

  for (const auto& e : g0.entries) {
    for (auto& [value, path] : iterate_phi(phi, e.value, depth - 1)) {
      out.values.push_back({std::move(value), e.multiplicity, depth - 1, e.value.str() + (path.empty() ? "" : " " + path)});
    }
  }
  for (int j = depth - 2; j >= 0; --j) {
    const BigInt weight = BigInt(n) * pow(BigInt(n + 1), static_cast<unsigned>(depth - j - 2));
    for (const auto& e : non_perron) {
      for (auto& [value, path] : iterate_phi(phi, e.value, j)) {
        out.values.push_back({std::move(value), static_cast<int>(weight * e.multiplicity), j,
                              e.value.str() + (path.empty() ? "" : " " + path)});
      }
    }
  }
  if (BigInt(out.order()) != corona_hypergraph_order(n, depth)) {
    throw CoronaError("iterated multiplicities do not sum to n(n+1)^(m-1)");
  }
  std::stable_sort(out.values.begin(), out.values.end(), [](const IteratedValue& a, const IteratedValue& b) {
    return a.value.approx > b.value.approx;
  });
  return out;
}

IntMatrix iterated_literal_matrix(const Hypergraph& g0, int depth) {
  if (depth < 1) throw CoronaError("corona depth must be at least 1");
  const IntMatrix a0 = adjacency_matrix(g0);
  const std::int64_t b = binomial(g0.order() - 1, g0.uniformity() - 2);
  IntMatrix current = a0;
  for (int level = 2; level <= depth; ++level) current = corona_literal_matrix(current, a0, b);
  return current;
}

}  // namespace hypercorona
