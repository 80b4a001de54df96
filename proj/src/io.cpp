#include "hypercorona/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hypercorona {

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int* out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

int parse_header(std::string_view line, std::string_view key, const std::string& source, int lineno) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos || trim(line.substr(0, eq)) != key) {
    throw ParseError(source, lineno, "expected '" + std::string(key) + "=<int>'");
  }
  int value = 0;
  if (!parse_int(trim(line.substr(eq + 1)), &value) || value < 0) {
    throw ParseError(source, lineno, "bad value for " + std::string(key));
  }
  return value;
}

}  // namespace

Hypergraph parse_hg(std::string_view text, const std::string& source) {
  int k = -1, n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (k < 0) {
      k = parse_header(line, "k", source, lineno);
      if (k < 1) throw ParseError(source, lineno, "uniformity must be positive");
      continue;
    }
    if (n < 0) {
      n = parse_header(line, "n", source, lineno);
      continue;
    }
    if (line.front() != 'e' || (line.size() > 1 && line[1] != ' ' && line[1] != '\t')) {
      throw ParseError(source, lineno, "expected an edge line 'e v1 ... vk'");
    }
    std::istringstream tokens{std::string(line.substr(1))};
    Edge edge;
    std::string token;
    while (tokens >> token) {
      int v = 0;
      if (!parse_int(token, &v)) throw ParseError(source, lineno, "bad vertex '" + token + "'");
      if (v < 0 || v >= n) {
        throw ParseError(source, lineno, "vertex " + token + " out of range 0.." + std::to_string(n - 1));
      }
      edge.push_back(v);
    }
    if (static_cast<int>(edge.size()) != k) {
      throw ParseError(source, lineno,
                       "edge has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(k));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(source, lineno, "repeated vertex in edge");
    }
    if (!seen.insert(edge).second) throw ParseError(source, lineno, "duplicate edge");
    edges.push_back(std::move(edge));
  }
  if (k < 0) throw ParseError(source, std::max(lineno, 1), "missing 'k=' header");
  if (n < 0) throw ParseError(source, lineno, "missing 'n=' header");
  return Hypergraph(n, k, std::move(edges));
}

std::string format_hg(const Hypergraph& h) {
  std::ostringstream out;
  out << "k=" << h.uniformity() << "\nn=" << h.order() << "\n";
  for (const auto& e : h.edges()) {
    out << 'e';
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Json to_json(const Hypergraph& h) {
  return Json{{"k", h.uniformity()}, {"n", h.order()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const Json& j, const std::string& source) {
  try {
    const int k = j.at("k").get<int>();
    const int n = j.at("n").get<int>();
    if (k < 1 || n < 0) throw ParseError(source, 1, "k must be positive and n non-negative");
    return Hypergraph(n, k, j.value("edges", std::vector<Edge>{}));
  } catch (const Json::exception& e) {
    throw ParseError(source, 1, e.what());
  } catch (const HypergraphError& e) {
    throw ParseError(source, 1, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source, 1, e.what());
  }
}

Hypergraph hypergraph_from_text(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_json(parse_json(text, source), source);
  try {
    return parse_hg(text, source);
  } catch (const HypergraphError& e) {
    throw ParseError(source, 1, e.what());
  }
}

Hypergraph hypergraph_ref(const Json& j, const std::filesystem::path& dir, const std::string& what) {
  if (j.is_string()) return load_hypergraph(dir / j.get<std::string>());
  return hypergraph_from_json(j, what);
}

}  // namespace

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  return hypergraph_from_text(read_file(path), path.string());
}

CoronaConfig config_from_json(const Json& j, const std::filesystem::path& dir) {
  const std::string source = "config";
  try {
    CoronaConfig cfg;
    cfg.base = hypergraph_ref(j.at("base"), dir, "config.base");
    for (const auto& a : j.at("attachments")) cfg.attachments.push_back(hypergraph_ref(a, dir, "config.attachments"));
    if (j.contains("blocks")) {
      cfg.partition.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    } else {
      const int p = j.value("p", 1);
      if (p < 1 || cfg.base.order() % p != 0) throw ParseError(source, 1, "p must divide the base order");
      cfg.partition = contiguous_partition(cfg.base.order(), p);
    }
    cfg.validate();
    if (j.contains("p") && j.at("p").get<int>() != cfg.p()) {
      throw ParseError(source, 1, "p disagrees with the block sizes");
    }
    return cfg;
  } catch (const Json::exception& e) {
    throw ParseError(source, 1, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 1, e.what());
  }
}

CoronaConfig load_config(const std::filesystem::path& path) {
  return config_from_json(parse_json(read_file(path), path.string()), path.parent_path());
}

Json to_json(const CoronaConfig& cfg) {
  Json atts = Json::array();
  for (const auto& a : cfg.attachments) atts.push_back(to_json(a));
  return Json{{"base", to_json(cfg.base)}, {"p", cfg.p()}, {"blocks", cfg.partition.blocks}, {"attachments", atts}};
}

SwitchingPlan plan_from_json(const Json& j) {
  try {
    SwitchingPlan plan;
    plan.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    plan.residual = j.at("residual").get<std::vector<Vertex>>();
    return plan;
  } catch (const Json::exception& e) {
    throw ParseError("plan", 1, e.what());
  }
}

SwitchingPlan load_plan(const std::filesystem::path& path) {
  return plan_from_json(parse_json(read_file(path), path.string()));
}

Json to_json(const SwitchingPlan& plan) { return Json{{"blocks", plan.blocks}, {"residual", plan.residual}}; }

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

IntPolynomial int_polynomial_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) coeffs.emplace_back(c.get<std::int64_t>());
    else coeffs.emplace_back(c.get<std::string>());
  }
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const RationalFunction& f) {
  return Json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}, {"text", f.str()}};
}

Json to_json(const AlgebraicValue& v) {
  Json out{{"value", v.str()}, {"approx", static_cast<double>(v.approx)}, {"exact", v.is_exact()}};
  if (!v.is_exact()) out["factor"] = to_json(v.factor);
  return out;
}

Json to_json(const Spectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json item = to_json(e.value);
    item["multiplicity"] = e.multiplicity;
    if (!e.value.is_exact()) {
      item["residual"] = static_cast<double>(e.residual);
      item["certified"] = e.certified;
    }
    entries.push_back(std::move(item));
  }
  return Json{{"charPoly", to_json(s.char_poly)},
              {"charPolyText", to_string(s.char_poly)},
              {"order", s.order()},
              {"spectralRadius", static_cast<double>(s.spectral_radius())},
              {"eigenvalues", entries}};
}

Json to_json(const ClosedFormSpectrum& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) {
    Json item = to_json(p.value);
    item["multiplicity"] = p.multiplicity;
    item["provenance"] = p.provenance;
    pieces.push_back(std::move(item));
  }
  return Json{{"theorem", s.theorem},
              {"model", model_name(s.target)},
              {"order", s.order()},
              {"largest", static_cast<double>(s.largest())},
              {"eigenvalues", pieces}};
}

Json to_json(const IteratedSpectrum& s) {
  Json values = Json::array();
  for (const auto& v : s.values) {
    Json item = to_json(v.value);
    item["multiplicity"] = v.multiplicity;
    item["level"] = v.depth;
    item["lineage"] = v.lineage;
    values.push_back(std::move(item));
  }
  Json totals = Json::array();
  for (const auto& t : s.level_totals()) totals.push_back(t.str());
  return Json{{"depth", s.depth}, {"order", s.order()}, {"levelTotals", totals}, {"eigenvalues", values}};
}

Json to_json(const SizeReport& s) {
  return Json{{"combinatorial", s.combinatorial.str()},
              {"referenceFormula", s.reference_formula.str()},
              {"referenceDefined", s.reference_defined},
              {"recurrenceFormula", s.recurrence_formula.str()},
              {"discrepancy", s.discrepancy()}};
}

Json to_json(const ConditionReport& r) {
  auto sums_json = [](const std::vector<PairSums>& v) {
    Json sums = Json::array();
    for (const auto& s : v) {
      Json item{{"i", s.i}, {"j", s.j}, {"holds", s.holds}};
      if (s.l) item["l"] = *s.l;
      if (!s.failure.empty()) item["failure"] = s.failure;
      sums.push_back(std::move(item));
    }
    return sums;
  };
  Json out{{"admissible", r.admissible()},
           {"neighbourhood", r.neighbourhood},
           {"residualBlocks", r.residual_blocks},
           {"sums", sums_json(r.sums)},
           {"balancedSums", sums_json(r.balanced_sums)},
           {"uniformL", r.uniform_l},
           {"summary", r.summary()}};
  if (!r.plan_error.empty()) out["planError"] = r.plan_error;
  return out;
}

Json to_json(const IsomorphismEvidence& e) {
  Json out{{"verdict", verdict_name(e.verdict)}, {"reason", e.reason}, {"detail", e.detail}, {"nodes", e.nodes}};
  if (e.mapping) out["mapping"] = *e.mapping;
  return out;
}

Json to_json(const CospectralCertificate& c) {
  return Json{{"first", to_json(c.first)},
              {"second", to_json(c.second)},
              {"kind", kind_name(c.kind)},
              {"model", c.model},
              {"firstCharPoly", to_json(c.first_poly)},
              {"secondCharPoly", to_json(c.second_poly)},
              {"charPolyText", to_string(c.first_poly)},
              {"cospectral", c.cospectral},
              {"isomorphism", to_json(c.evidence)},
              {"mate", c.is_mate()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypercorona
