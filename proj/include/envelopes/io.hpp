#pragma once

// Arrangement text format and JSON report serialization.
//
// Arrangement file: optional '#' comment lines, a header "d n", then n
// rows of d+1 whitespace-separated rationals "a1 ... ad b" encoding
// a . x = b. UTF-8 with LF line endings (a trailing CR is tolerated on
// input). The serializer emits canonical rationals, so parsing a
// serialized arrangement reproduces it exactly.
//
// Parse errors carry 1-based line numbers. Dimension/size guardrails are
// not enforced here — parsing is purely structural; callers decide.

#include "envelopes/arrangement.hpp"
#include "envelopes/envelope.hpp"
#include "envelopes/proof_audit.hpp"

#include <json.hpp>

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace envelopes {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& message, int line_number)
      : std::runtime_error(message + " at line " + std::to_string(line_number)), line(line_number) {}
};

struct ArrangementFile {
  Arrangement arrangement;
  std::vector<std::string> comments;  // '#' lines in order, marker stripped
};

namespace io_detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int_strict(const std::string& s, const char* what, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed header: bad ") + what + " '" + s + "'", line);
  }
  if (used != s.size())
    throw ParseError(std::string("malformed header: bad ") + what + " '" + s + "'", line);
  return value;
}

}  // namespace io_detail

inline ArrangementFile parse_arrangement_file(std::istream& in) {
  ArrangementFile out;
  std::string raw;
  int lineno = 0;

  const auto next_content = [&]() -> std::optional<std::string> {
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string line = io_detail::trim(raw);
      if (line.empty()) continue;
      if (line.front() == '#') {
        out.comments.push_back(io_detail::trim(line.substr(1)));
        continue;
      }
      return line;
    }
    return std::nullopt;
  };

  const auto header = next_content();
  if (!header) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
  const auto header_fields = io_detail::split_fields(*header);
  if (header_fields.size() != 2)
    throw ParseError("malformed header: expected \"d n\"", lineno);
  const int d = io_detail::parse_int_strict(header_fields[0], "dimension", lineno);
  const int n = io_detail::parse_int_strict(header_fields[1], "hyperplane count", lineno);
  if (d < 1) throw ParseError("dimension must be positive", lineno);
  if (n < 1) throw ParseError("hyperplane count must be positive", lineno);
  out.arrangement.dim = d;

  for (int row = 0; row < n; ++row) {
    const auto content = next_content();
    if (!content)
      throw ParseError("unexpected end of file: expected " + std::to_string(n) +
                           " hyperplane rows, found " + std::to_string(row),
                       lineno + 1);
    const auto fields = io_detail::split_fields(*content);
    if (static_cast<int>(fields.size()) != d + 1)
      throw ParseError("expected " + std::to_string(d + 1) + " fields, found " +
                           std::to_string(fields.size()),
                       lineno);
    Hyperplane h;
    try {
      for (int j = 0; j < d; ++j) h.coeffs.push_back(parse_rational(fields[static_cast<std::size_t>(j)]));
      h.rhs = parse_rational(fields[static_cast<std::size_t>(d)]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
    if (!is_valid_hyperplane(h)) throw ParseError("zero coefficient row", lineno);
    out.arrangement.hyperplanes.push_back(std::move(h));
  }
  if (next_content()) throw ParseError("unexpected trailing content", lineno);
  return out;
}

inline ArrangementFile parse_arrangement_file(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement_file(in);
}

inline Arrangement parse_arrangement(const std::string& text) {
  return parse_arrangement_file(text).arrangement;
}

inline std::string serialize_arrangement(const Arrangement& arr,
                                         const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << arr.dim << " " << arr.size() << "\n";
  for (const auto& h : arr.hyperplanes) {
    for (const auto& c : h.coeffs) out << format_rational(c) << " ";
    out << format_rational(h.rhs) << "\n";
  }
  return out.str();
}

// ---- JSON reports -------------------------------------------------------
// nlohmann::json keeps object keys sorted, so dumps are deterministic.

inline nlohmann::json bounds_json(const BoundsReport& b) {
  nlohmann::json j;
  if (b.dim == 2)
    j["lower_2d"] = 2 * (b.n - 1);
  else
    j["lower_3d"] = format_rational(Rational(b.n * (b.n - 2) + 6, 3));
  j["hypothesis"] = b.hypothesis_bound.convert_to<long long>();
  j["verdicts"] = {{"lower", to_string(b.proposition)}, {"hypothesis", to_string(b.hypothesis)}};
  return j;
}

inline nlohmann::json analysis_report_json(const EnvelopeReport& r, const BoundsReport& b) {
  nlohmann::json j;
  j["d"] = r.dim;
  j["n"] = r.n;
  j["simple"] = true;
  j["f0_external"] = r.f0_external;
  j["f1_external"] = r.f1_external;
  if (r.f2_external) j["f2_external"] = *r.f2_external;
  j["bounded_cells"] = r.bounded_cells;
  if (r.euler) j["euler"] = *r.euler;
  j["bounds"] = bounds_json(b);
  return j;
}

inline nlohmann::json not_simple_report_json(const Arrangement& arr, const SimplicityVerdict& verdict) {
  nlohmann::json j;
  j["d"] = arr.dim;
  j["n"] = arr.size();
  j["simple"] = false;
  auto issues = nlohmann::json::array();
  for (const auto& issue : verdict.issues) issues.push_back(issue.describe());
  j["issues"] = std::move(issues);
  return j;
}

inline nlohmann::json census_json(const CensusReport& census) {
  nlohmann::json j;
  j["external_vertices"] = census.external_vertex_count;
  j["total_weight"] = format_rational(census.total_weight);
  j["vertex_type_counts"] = {{"v2", census.type_count(VertexType::v2)},
                             {"v3", census.type_count(VertexType::v3)},
                             {"v4", census.type_count(VertexType::v4)}};
  nlohmann::json weights;
  for (const auto& [line, w] : census.line_weights) weights[std::to_string(line)] = format_rational(w);
  j["line_weights"] = std::move(weights);
  j["violations"] = census.violations;
  return j;
}

inline nlohmann::json line_census_json(const LineTypeReport& lines) {
  nlohmann::json j;
  j["applicable"] = lines.applicable;
  nlohmann::json types;
  for (const auto& [line, type] : lines.line_types) types[std::to_string(line)] = to_string(type);
  j["line_types"] = std::move(types);
  j["h22_count"] = lines.h22_count;
  j["below_weight_2_count"] = lines.below_weight_2_count;
  j["violations"] = lines.violations;
  return j;
}

inline nlohmann::json triple_counting_json(const TripleCountingReport& triple) {
  nlohmann::json j;
  j["applicable"] = triple.applicable;
  j["per_restriction_external"] = triple.per_restriction_external;
  j["sum"] = triple.external_vertex_sum;
  j["f0"] = triple.f0;
  j["violations"] = triple.violations;
  return j;
}

inline nlohmann::json audit_report_json(const AuditResult& audit,
                                        const std::vector<std::string>& source_comments = {}) {
  nlohmann::json checks;
  for (const auto& check : audit.checks)
    checks[check.name] = {{"verdict", to_string(check.verdict)}, {"detail", check.detail}};
  nlohmann::json a;
  a["checks"] = std::move(checks);
  a["notes"] = audit.notes;
  a["passed"] = audit.passed;
  if (audit.census) a["census"] = census_json(*audit.census);
  if (audit.line_report) a["line_census"] = line_census_json(*audit.line_report);
  if (audit.triple) a["triple_counting"] = triple_counting_json(*audit.triple);

  nlohmann::json j;
  j["audit"] = std::move(a);
  j["envelope"] = analysis_report_json(audit.envelope, audit.bounds);
  j["source_comments"] = source_comments;
  return j;
}

}  // namespace envelopes
