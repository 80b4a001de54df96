// hypercorona: spectra, corona products, theorem checks and cospectral
// certificates from the command line. Exit codes: 0 pass, 1 fail,
// 2 inapplicable, 3 input error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypercorona/io.hpp"

using namespace hypercorona;
namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kFail = 1, kInapplicable = 2, kInputError = 3 };

struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double tol = 1e-8;
  bool timing = false;
  std::string format = "json";
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
};

struct Outcome {
  Json report;
  int code = kPass;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Json input_hashes(const std::vector<std::string>& paths) {
  Json out = Json::object();
  for (const auto& p : paths) out[p] = "sha256:" + sha256_hex(read_file(p));
  return out;
}

Json base_report(const std::string& command, const std::vector<std::string>& inputs) {
  return Json{{"schema", 1}, {"command", command}, {"inputs", input_hashes(inputs)}};
}

// Parse and I/O failures both count as input errors.
template <class F>
auto load(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::string status_name(int code) {
  switch (code) {
    case kPass: return "pass";
    case kFail: return "fail";
    case kInapplicable: return "inapplicable";
    default: return "input-error";
  }
}

IntMatrix matrix_of(const Hypergraph& h, MatrixKind kind) {
  return kind == MatrixKind::Adjacency ? adjacency_matrix(h) : seidel_matrix(h);
}

void print_table(const Spectrum& s) {
  std::cout << "char poly: " << to_string(s.char_poly) << "\n";
  std::cout << std::left << std::setw(40) << "eigenvalue" << std::setw(14) << "approx" << "multiplicity\n";
  for (const auto& e : s.entries) {
    std::ostringstream approx;
    approx << std::setprecision(10) << static_cast<double>(e.value.approx);
    std::string value = e.value.is_exact() ? e.value.str() : "root of " + to_string(e.value.factor);
    std::cout << std::setw(40) << value << std::setw(14) << approx.str() << e.multiplicity << "\n";
  }
}

void emit(const Json& report, const Common& common, const std::chrono::steady_clock::time_point& start) {
  Json out = report;
  if (common.timing) {
    out["wallTimeMs"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.dump(2) << "\n";
}

// ---- corona matrices ------------------------------------------------------

// p = 1 with one repeated attachment: the two-hypergraph corona G0 (.) G1.
std::pair<Hypergraph, Hypergraph> two_view(const CoronaConfig& cfg) {
  if (cfg.p() != 1) throw Inapplicable("needs p = 1 (one copy per base vertex)");
  for (const auto& a : cfg.attachments) {
    if (!(a == cfg.attachments.front())) throw Inapplicable("needs every base vertex to carry the same attachment");
  }
  if (cfg.attachments.empty()) throw Inapplicable("empty base");
  return {cfg.base, cfg.attachments.front()};
}

// Matrix of the configured corona in block order (see corona.hpp). The sec3
// matrix is read off the constructed hypergraph; the paper4 matrix is the
// Kronecker-ordered literal matrix moved to the same order.
IntMatrix corona_matrix(const CoronaConfig& cfg, CoronaModel model, MatrixKind kind) {
  const std::vector<int> order = block_order(cfg);
  if (model == CoronaModel::Induced) {
    const IntMatrix a = permute(adjacency_matrix(corona_combinatorial(cfg).hypergraph), order);
    return kind == MatrixKind::Adjacency ? a : seidel_from_adjacency(a);
  }
  auto [g0, g1] = two_view(cfg);
  const CoronaTwo two = corona_two(g0, g1, CoronaModel::Kronecker, false);
  const int n = g0.order(), m = g1.order();
  std::vector<int> to_kron(static_cast<std::size_t>(n + n * m));
  for (int v = 0; v < n; ++v) to_kron[static_cast<std::size_t>(v)] = v;
  for (int block = 0; block < n; ++block) {
    const int v = cfg.partition.blocks[static_cast<std::size_t>(block)].front();
    for (int j = 0; j < m; ++j) to_kron[static_cast<std::size_t>(n + block * m + j)] = n + j * n + v;
  }
  std::vector<int> kron_order(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) kron_order[i] = to_kron[static_cast<std::size_t>(order[i])];
  return permute(kind == MatrixKind::Adjacency ? two.adjacency : two.seidel, kron_order);
}

int regular_degree(const Hypergraph& h, const std::string& what) {
  const auto profile = degree_profile(h);
  if (!profile.regular) throw Inapplicable(what + " is not regular");
  return *profile.regular;
}

AttachmentData regular_or_inapplicable(const CoronaConfig& cfg) {
  try {
    return regular_attachments(cfg);
  } catch (const CoronaError& e) {
    throw Inapplicable(e.what());
  }
}

Json poly_json(const IntPolynomial& p) { return Json{{"coefficients", to_json(p)}, {"text", to_string(p)}}; }

// ---- commands ---------------------------------------------------------------

Outcome cmd_spectrum(const std::string& file, const std::string& matrix, const Common& common) {
  const Hypergraph h = load([&] { return load_hypergraph(file); });
  const MatrixKind kind = parse_kind(matrix);
  const Spectrum s = numeric_spectrum(matrix_of(h, kind), common.tol);
  Json report = base_report("spectrum", {file});
  report["matrix"] = kind_name(kind);
  report["order"] = h.order();
  report["uniformity"] = h.uniformity();
  report["result"] = to_json(s);
  if (common.format == "table") {
    print_table(s);
    return {Json(), kPass};
  }
  return {report, kPass};
}

Outcome cmd_corona(const std::string& config, const std::string& model_flag, const std::string& matrix,
                   const std::string& what, const Common& common) {
  const CoronaConfig cfg = load([&] { return load_config(config); });
  const CoronaModel model = parse_model(model_flag);
  if (what == "hg") {
    std::cout << format_hg(corona_combinatorial(cfg).hypergraph);
    return {Json(), kPass};
  }
  const MatrixKind kind = parse_kind(matrix);
  const IntMatrix m = corona_matrix(cfg, model, kind);
  Json report = base_report("corona", {config});
  report["model"] = model_name(model);
  report["matrix"] = kind_name(kind);
  report["ordering"] = "base vertices in block order, then copies by block and copy index";
  if (what == "matrix") {
    report["result"] = to_json(m);
  } else {
    const Spectrum s = numeric_spectrum(m, common.tol);
    if (common.format == "table") {
      print_table(s);
      return {Json(), kPass};
    }
    report["result"] = to_json(s);
  }
  return {report, kPass};
}

// Largest deviation between a closed form and the eigensolver, scaled by
// max(1, spectral radius).
Json compare_numeric(const std::vector<long double>& closed, const IntMatrix& m, double tol, bool* ok) {
  const auto eig = symmetric_eigenvalues(m);
  std::vector<long double> numeric(eig.begin(), eig.end());
  long double radius = 1;
  for (auto v : numeric) radius = std::max(radius, std::abs(v));
  const long double distance = multiset_distance(closed, numeric);
  *ok = distance <= tol * radius;
  return Json{{"maxDeviation", static_cast<double>(distance)}, {"scale", static_cast<double>(radius)}};
}

void verify_theorem(const std::string& theorem, const CoronaConfig& cfg, std::optional<CoronaModel> model_flag,
                    const Common& common, Json& r, bool* match) {
  const bool induced_default = theorem == "3.1" || theorem == "3.2" || theorem == "seidel-gen" || theorem == "seidel-p1";
  const CoronaModel model =
      model_flag.value_or(induced_default ? CoronaModel::Induced : CoronaModel::Kronecker);
  r["model"] = model_name(model);

  auto exact = [&](const IntPolynomial& lhs, const IntPolynomial& rhs) {
    r["lhs"] = poly_json(lhs);
    r["rhs"] = poly_json(rhs);
    r["maxResidual"] = 0.0;
    *match = lhs == rhs;
  };

  if (theorem == "3.1") {
    regular_or_inapplicable(cfg);
    exact(charpoly_generalized_adjacency(cfg), char_poly(corona_matrix(cfg, model, MatrixKind::Adjacency)));
  } else if (theorem == "seidel-gen") {
    regular_or_inapplicable(cfg);
    exact(charpoly_generalized_seidel(cfg), char_poly(corona_matrix(cfg, model, MatrixKind::Seidel)));
  } else if (theorem == "3.2") {
    const AttachmentData att = regular_or_inapplicable(cfg);
    if (cfg.p() != 1) throw Inapplicable("needs p = 1");
    const Spectrum g0 = numeric_spectrum(adjacency_matrix(cfg.base), common.tol);
    std::vector<Spectrum> gi;
    for (const auto& a : cfg.attachments) gi.push_back(numeric_spectrum(adjacency_matrix(a), common.tol));
    const IntPolynomial oracle = char_poly(corona_matrix(cfg, model, MatrixKind::Adjacency));
    const RationalFunction plus = charpoly_regular_corona(g0, gi, att.r, cfg.k(), att.m, CTermSign::Plus);
    const RationalFunction minus = charpoly_regular_corona(g0, gi, att.r, cfg.k(), att.m, CTermSign::Minus);
    r["lhs"] = to_json(plus);
    r["rhs"] = poly_json(oracle);
    r["signs"] = Json{{"plus", plus == RationalFunction(oracle)}, {"minus", minus == RationalFunction(oracle)}};
    r["lhsSign"] = sign_name(CTermSign::Plus);
    r["maxResidual"] = 0.0;
    *match = plus == RationalFunction(oracle);
  } else if (theorem == "seidel-p1") {
    const AttachmentData att = regular_or_inapplicable(cfg);
    if (cfg.p() != 1) throw Inapplicable("needs p = 1");
    const int r0 = regular_degree(cfg.base, "base");
    const Spectrum g0 = numeric_spectrum(seidel_matrix(cfg.base), common.tol);
    std::vector<Spectrum> gi;
    for (const auto& a : cfg.attachments) gi.push_back(numeric_spectrum(seidel_matrix(a), common.tol));
    const SeidelP1Factors f = charpoly_seidel_p1(g0, gi, r0, att.r, cfg.k(), att.m);
    exact(f.product(), char_poly(corona_matrix(cfg, model, MatrixKind::Seidel)));
    r["factors"] = Json{{"perron", poly_json(f.perron)}, {"base", poly_json(f.base)},
                        {"attachments", poly_json(f.attachments)}};
  } else if (theorem == "coronal") {
    auto [g0, g1] = two_view(cfg);
    const IntMatrix a1 = adjacency_matrix(g1);
    const BigInt b = big_binomial(g1.order() - 1, g1.uniformity() - 2);
    const RationalFunction chi = coronal(a1);
    exact(charpoly_via_coronal(char_poly(adjacency_matrix(g0)), char_poly(a1), chi, b, g0.order()),
          char_poly(corona_matrix(cfg, model, MatrixKind::Adjacency)));
    r["coronal"] = to_json(chi);
  } else if (theorem == "4.1" || theorem == "4.2") {
    auto [g0, g1] = two_view(cfg);
    regular_degree(g1, "attachment");
    const IntMatrix oracle = corona_matrix(cfg, model, MatrixKind::Adjacency);
    ClosedFormSpectrum closed;
    long double witness = 0;
    if (theorem == "4.1") {
      const CoronaTwoSpectrum s = spectrum_corona_two(g0, g1, common.tol);
      closed = s.closed_form;
      witness = s.max_residual;
      r["witnesses"] = s.witnesses.size();
      r["spectralRadius"] = static_cast<double>(s.spectral_radius);
    } else {
      if (g1.uniformity() != g1.order() || g1.size() != 1) throw Inapplicable("attachment must be K_m^m");
      closed = spectrum_corona_complete(numeric_spectrum(adjacency_matrix(g0), common.tol), g1.order());
    }
    bool ok = false;
    r["numeric"] = compare_numeric(closed.flattened(), oracle, common.tol, &ok);
    r["lhs"] = to_json(closed);
    r["rhs"] = "eigenvalues of the corona adjacency matrix";
    r["maxResidual"] = static_cast<double>(witness);
    *match = ok && witness <= common.tol;
  } else if (theorem == "seidel-4") {
    auto [g0, g1] = two_view(cfg);
    const int r0 = regular_degree(g0, "base");
    const int r1 = regular_degree(g1, "attachment");
    ClosedFormSpectrum closed;
    try {
      closed = seidel_spectrum_corona_two(numeric_spectrum(seidel_matrix(g0), common.tol),
                                          numeric_spectrum(seidel_matrix(g1), common.tol), r0, r1, g0.uniformity(),
                                          g1.order(), g0.order());
    } catch (const CoronaError& e) {
      throw Inapplicable(e.what());
    }
    bool ok = false;
    r["numeric"] = compare_numeric(closed.flattened(), corona_matrix(cfg, model, MatrixKind::Seidel), common.tol, &ok);
    r["lhs"] = to_json(closed);
    r["rhs"] = "eigenvalues of the corona Seidel matrix";
    r["maxResidual"] = r["numeric"]["maxDeviation"];
    *match = ok;
  } else {
    throw InputError("unknown theorem '" + theorem + "'");
  }
}

Outcome verify_config(const std::string& theorem, const std::string& config, std::optional<CoronaModel> model,
                      const Common& common) {
  Json report;
  int code = kPass;
  try {
    report = base_report("verify", {config});
    const CoronaConfig cfg = load([&] { return load_config(config); });
    bool match = false;
    verify_theorem(theorem, cfg, model, common, report, &match);
    report["match"] = match;
    code = match ? kPass : kFail;
  } catch (const Inapplicable& e) {
    report["reason"] = e.what();
    code = kInapplicable;
  } catch (const InputError& e) {
    report["reason"] = e.what();
    code = kInputError;
  } catch (const CoronaError& e) {
    report["reason"] = e.what();
    code = kInapplicable;
  } catch (const std::runtime_error& e) {
    report["reason"] = e.what();
    code = kInputError;
  }
  report["schema"] = 1;
  report["command"] = "verify";
  report["theorem"] = theorem;
  report["status"] = status_name(code);
  return {report, code};
}

Outcome verify_switching(const std::string& input, const std::string& plan_path, const Common& common) {
  const Hypergraph h = load([&] { return load_hypergraph(input); });
  const SwitchingPlan plan = load([&] { return load_plan(plan_path); });
  Json report = base_report("verify", {input, plan_path});
  report["theorem"] = "seidel-switching";
  report["model"] = "seidel";
  const ConditionReport conditions = check_switching_conditions(h, plan);
  report["conditions"] = to_json(conditions);
  if (!conditions.admissible()) {
    report["reason"] = conditions.summary();
    report["status"] = status_name(kInapplicable);
    return {report, kInapplicable};
  }
  const Hypergraph switched = apply_switching(h, plan);
  const IntPolynomial lhs = char_poly(seidel_matrix(h));
  const IntPolynomial rhs = char_poly(seidel_matrix(switched));
  const bool psp = conjugation_identity(h, switched, plan);
  const IsomorphismEvidence evidence = refute_isomorphism(h, switched, common.budget);
  report["lhs"] = poly_json(lhs);
  report["rhs"] = poly_json(rhs);
  report["conjugationIdentity"] = psp;
  report["switched"] = to_json(switched);
  report["isomorphism"] = to_json(evidence);
  report["mate"] = lhs == rhs && evidence.verdict == IsomorphismEvidence::Verdict::NonIsomorphic;
  report["maxResidual"] = 0.0;
  const bool match = lhs == rhs && psp;
  report["match"] = match;
  report["status"] = status_name(match ? kPass : kFail);
  return {report, match ? kPass : kFail};
}

int combine(const std::vector<int>& codes) {
  auto has = [&](int c) { return std::find(codes.begin(), codes.end(), c) != codes.end(); };
  if (has(kInputError)) return kInputError;
  if (has(kFail)) return kFail;
  if (has(kInapplicable)) return kInapplicable;
  return kPass;
}

Outcome cmd_verify(const std::string& theorem, const std::vector<std::string>& configs, const std::string& input,
                   const std::string& plan, const std::string& model_flag, const Common& common) {
  if (theorem == "seidel-switching") {
    if (input.empty() || plan.empty()) throw InputError("seidel-switching needs --input and --plan");
    return verify_switching(input, plan, common);
  }
  if (configs.empty()) throw InputError("--config is required");
  std::optional<CoronaModel> model;
  if (!model_flag.empty()) model = parse_model(model_flag);

  std::vector<Outcome> outcomes(configs.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, common.jobs));
  for (std::size_t start = 0; start < configs.size(); start += jobs) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(configs.size(), start + jobs); ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return verify_config(theorem, configs[i], model, common); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) outcomes[start + i] = batch[i].get();
  }
  if (outcomes.size() == 1) return outcomes.front();
  Json reports = Json::array();
  std::vector<int> codes;
  for (auto& o : outcomes) {
    reports.push_back(std::move(o.report));
    codes.push_back(o.code);
  }
  const int code = combine(codes);
  return {Json{{"schema", 1}, {"command", "verify"}, {"theorem", theorem}, {"reports", reports},
               {"status", status_name(code)}},
          code};
}

Outcome cmd_corona_iter(const std::string& base, int depth, const std::string& what, const Common& common) {
  const Hypergraph g0 = load([&] { return load_hypergraph(base); });
  if (depth < 1) throw InputError("--depth must be at least 1");
  if (what == "hg") {
    std::cout << format_hg(corona_hypergraph(g0, depth));
    return {Json(), kPass};
  }
  Json report = base_report("corona-iter", {base});
  report["depth"] = depth;
  report["model"] = model_name(CoronaModel::Kronecker);
  if (what == "report") {
    const Hypergraph g = corona_hypergraph(g0, depth);
    report["order"] = g.order();
    report["orderFormula"] = corona_hypergraph_order(g0.order(), depth).str();
    report["connected"] = is_connected(g);
    report["size"] = to_json(corona_hypergraph_size(g0, depth));
    return {report, kPass};
  }
  const int r = regular_degree(g0, "base");
  const IteratedSpectrum s =
      iterated_spectrum(numeric_spectrum(adjacency_matrix(g0), common.tol), r, g0.uniformity(), depth);
  report["result"] = to_json(s);
  bool ok = true;
  if (s.order() <= 500) {
    report["numeric"] = compare_numeric(s.flattened(), iterated_literal_matrix(g0, depth), common.tol, &ok);
    report["numeric"]["pass"] = ok;
  }
  return {report, ok ? kPass : kFail};
}

Outcome cmd_switch(const std::string& input, const std::string& plan_path, const std::string& dir,
                   const Common& common) {
  Outcome verified = verify_switching(input, plan_path, common);
  Json& report = verified.report;
  report["command"] = "switch";
  if (verified.code == kInapplicable) return verified;
  const Hypergraph h = load([&] { return load_hypergraph(input); });
  const Hypergraph switched = load([&] { return hypergraph_from_json(report["switched"]); });
  fs::create_directories(dir);
  const fs::path hg = fs::path(dir) / (fs::path(input).stem().string() + "_switched.hg");
  const fs::path cert = fs::path(dir) / "certificate.json";
  std::ofstream(hg) << format_hg(switched);
  Json certificate = to_json(certify(h, switched, MatrixKind::Seidel, common.budget));
  certificate["schema"] = 1;
  certificate["plan"] = to_json(load([&] { return load_plan(plan_path); }));
  certificate["conjugationIdentity"] = report["conjugationIdentity"];
  std::ofstream(cert) << certificate.dump(2) << "\n";
  report["written"] = Json::array({hg.string(), cert.string()});
  return verified;
}

Outcome cmd_certify(const std::string& kind_flag, const std::string& a, const std::string& b, const Common& common) {
  const Hypergraph ha = load([&] { return load_hypergraph(a); });
  const Hypergraph hb = load([&] { return load_hypergraph(b); });
  const CospectralCertificate c = certify(ha, hb, parse_kind(kind_flag), common.budget);
  Json report = base_report("certify", {a, b});
  report["result"] = to_json(c);
  report["status"] = status_name(c.is_mate() ? kPass : kFail);
  return {report, c.is_mate() ? kPass : kFail};
}

void add_common(CLI::App* cmd, Common& common, bool format = false) {
  cmd->add_option("--tol", common.tol, "numeric tolerance")->capture_default_str();
  cmd->add_flag("--timing", common.timing, "add wall time to the report");
  cmd->add_option("--budget", common.budget, "isomorphism search node budget")->capture_default_str();
  if (format) cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of hypergraph corona products"};
  app.require_subcommand(1);
  Common common;

  std::string file, matrix = "adjacency", config, model, what, theorem, input, plan, dir, base, kind;
  std::vector<std::string> configs, pair;
  int depth = 1;

  auto* spectrum = app.add_subcommand("spectrum", "char poly and grouped spectrum of a hypergraph");
  spectrum->add_option("file", file, ".hg or .json hypergraph")->required();
  spectrum->add_option("--matrix", matrix)->check(CLI::IsMember({"adjacency", "seidel"}))->capture_default_str();
  add_common(spectrum, common, true);

  auto* corona = app.add_subcommand("corona", "build a generalized corona");
  corona->add_option("--config", config, "corona config JSON")->required();
  std::string corona_model = "sec3";
  corona->add_option("--model", corona_model)->check(CLI::IsMember({"paper4", "sec3"}))->capture_default_str();
  corona->add_option("--matrix", matrix)->check(CLI::IsMember({"adjacency", "seidel"}))->capture_default_str();
  std::string corona_emit = "hg";
  corona->add_option("--emit", corona_emit)->check(CLI::IsMember({"hg", "matrix", "spectrum"}))->capture_default_str();
  add_common(corona, common, true);

  auto* verify = app.add_subcommand("verify", "check a closed form against its oracle");
  verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"3.1", "3.2", "seidel-gen", "seidel-p1", "4.1", "4.2", "seidel-4", "coronal",
                             "seidel-switching"}));
  verify->add_option("--config", configs, "corona config JSON (repeatable)");
  verify->add_option("--input", input, "hypergraph for seidel-switching");
  verify->add_option("--plan", plan, "switching plan JSON");
  verify->add_option("--model", model)->check(CLI::IsMember({"paper4", "sec3"}));
  verify->add_option("--jobs", common.jobs, "parallel configs")->capture_default_str();
  add_common(verify, common);

  auto* iter = app.add_subcommand("corona-iter", "iterated corona hypergraph");
  iter->add_option("--base", base)->required();
  iter->add_option("--depth", depth)->required();
  std::string iter_emit = "report";
  iter->add_option("--emit", iter_emit)->check(CLI::IsMember({"hg", "spectrum", "report"}))->capture_default_str();
  add_common(iter, common);

  auto* sw = app.add_subcommand("switch", "Seidel switching with a certificate");
  sw->add_option("--input", input)->required();
  sw->add_option("--plan", plan)->required();
  sw->add_option("--emit", dir, "output directory")->required();
  add_common(sw, common);

  auto* cert = app.add_subcommand("certify", "cospectral mate certificate for two hypergraphs");
  cert->add_option("--kind", kind)->required()->check(CLI::IsMember({"adjacency", "seidel"}));
  cert->add_option("files", pair)->required()->expected(2);
  add_common(cert, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    if (*spectrum) out = cmd_spectrum(file, matrix, common);
    else if (*corona) out = cmd_corona(config, corona_model, matrix, corona_emit, common);
    else if (*verify) out = cmd_verify(theorem, configs, input, plan, model, common);
    else if (*iter) out = cmd_corona_iter(base, depth, iter_emit, common);
    else if (*sw) out = cmd_switch(input, plan, dir, common);
    else out = cmd_certify(kind, pair[0], pair[1], common);
    if (!out.report.is_null()) emit(out.report, common, start);
    return out.code;
  } catch (const Inapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
