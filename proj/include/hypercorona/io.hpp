#pragma once

// Text and JSON formats.
//
// .hg text: `k=<int>`, then `n=<int>`, then one `e v1 ... vk` line per edge;
// `#` starts a comment, blank lines are ignored. JSON mirror:
// {"k": 3, "n": 4, "edges": [[0, 1, 2], ...]}.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypercorona/cospectral.hpp"
#include "hypercorona/corona.hpp"
#include "hypercorona/iterate.hpp"
#include "hypercorona/spectrum.hpp"
#include "hypercorona/theorems.hpp"

namespace hypercorona {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

Hypergraph parse_hg(std::string_view text, const std::string& source = "<input>");
std::string format_hg(const Hypergraph& h);

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j, const std::string& source = "<json>");

/// Reads .hg text or its JSON mirror (detected by a leading '{').
Hypergraph load_hypergraph(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

/// {"base": <hg>, "p": 1, "blocks": [[...]], "attachments": [<hg>, ...]}.
/// A hypergraph may also be given as a file path string, resolved against
/// `dir`. "blocks" defaults to the contiguous partition of size p.
CoronaConfig config_from_json(const Json& j, const std::filesystem::path& dir = {});
CoronaConfig load_config(const std::filesystem::path& path);
Json to_json(const CoronaConfig& cfg);

/// {"blocks": [[...], ...], "residual": [...]}
SwitchingPlan plan_from_json(const Json& j);
SwitchingPlan load_plan(const std::filesystem::path& path);
Json to_json(const SwitchingPlan& plan);

/// Ascending coefficients as decimal strings.
Json to_json(const IntPolynomial& p);
IntPolynomial int_polynomial_from_json(const Json& j);
Json to_json(const RationalFunction& f);
Json to_json(const AlgebraicValue& v);
Json to_json(const Spectrum& s);
Json to_json(const ClosedFormSpectrum& s);
Json to_json(const IteratedSpectrum& s);
Json to_json(const SizeReport& s);
Json to_json(const ConditionReport& r);
Json to_json(const IsomorphismEvidence& e);
Json to_json(const CospectralCertificate& c);
Json to_json(const IntMatrix& m);

}  // namespace hypercorona
