#pragma once

// Mechanized structural checks on envelopes.
//
// For line arrangements: every external vertex is classified by its
// number of bounded incident edges (a vertex of a simple arrangement has
// exactly four incident edges; an external vertex always has at least two
// bounded ones), one unit of weight per external vertex is redistributed
// onto the n lines, each line is typed by its two extreme vertices, and
// the per-line weight floors plus the global cap of at most two lines
// carrying weight below 2 force the 2(n-1) facet bound.
//
// For plane arrangements: the Euler characteristic of the envelope, the
// 2*f1 >= 3*f0 incidence bound, and the triple-counting chain over the n
// restrictions force the (n(n-2)+6)/3 facet bound.
//
// Violations of proven bounds are reported as audit failures — they mean
// an implementation bug, not new mathematics. The d*C(n-2, d-1) facet
// count is only a hypothesis and is reported, never asserted.

#include "envelopes/envelope.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace envelopes {

enum class VertexType { v2 = 2, v3 = 3, v4 = 4 };

inline const char* to_string(VertexType t) {
  switch (t) {
    case VertexType::v2: return "v2";
    case VertexType::v3: return "v3";
    case VertexType::v4: return "v4";
  }
  return "";
}

struct CensusReport {
  std::map<std::array<int, 2>, VertexType> vertex_types;  // keyed by defining line pair
  std::map<int, Rational> line_weights;
  Rational total_weight = 0;
  long long external_vertex_count = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  long long type_count(VertexType t) const {
    long long count = 0;
    for (const auto& [pair, type] : vertex_types)
      if (type == t) ++count;
    return count;
  }
};

namespace audit_detail {

inline std::string pair_label(const std::array<int, 2>& p) {
  return "{" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + "}";
}

}  // namespace audit_detail

// Classifies every external vertex of a line arrangement as v2/v3/v4 by
// its bounded incident edge count and redistributes one unit of weight
// per vertex: with exactly one unbounded incident edge the whole unit
// goes to the line containing that edge, otherwise each of the vertex's
// two lines gets 1/2.
inline CensusReport vertex_type_census(EnvelopeAnalysis& analysis) {
  const Arrangement& arr = analysis.arrangement();
  if (arr.dim != 2) throw std::invalid_argument("vertex_type_census: needs d=2");
  CensusReport report;
  for (int i = 0; i < arr.size(); ++i) report.line_weights[i] = 0;
  const auto& edges = analysis.faces(1);
  const auto& external_vertices = analysis.external_faces(0);
  report.external_vertex_count = static_cast<long long>(external_vertices.size());

  for (const auto& v : analysis.vertices()) {
    if (!external_vertices.count(v.sign)) continue;
    const std::array<int, 2> pair{v.defining[0], v.defining[1]};
    int incident = 0;
    int bounded_count = 0;
    std::vector<SignVector> unbounded_edges;
    for (const auto& e : edges) {
      if (!is_subface(v.sign, e)) continue;
      ++incident;
      if (analysis.bounded(e))
        ++bounded_count;
      else
        unbounded_edges.push_back(e);
    }
    if (incident != 4) {
      report.violations.push_back("vertex " + audit_detail::pair_label(pair) + " has " +
                                  std::to_string(incident) + " incident edges; expected 4");
      continue;
    }
    if (bounded_count < 2) {
      report.violations.push_back("external vertex " + audit_detail::pair_label(pair) +
                                  " has fewer than 2 bounded incident edges");
      continue;
    }
    report.vertex_types.emplace(pair, bounded_count == 2   ? VertexType::v2
                                      : bounded_count == 3 ? VertexType::v3
                                                           : VertexType::v4);
    if (unbounded_edges.size() == 1) {
      // the unbounded edge lies on one of the vertex's two lines
      const int line = unbounded_edges.front().zero_positions().front();
      report.line_weights[line] += 1;
    } else {
      report.line_weights[pair[0]] += Rational(1, 2);
      report.line_weights[pair[1]] += Rational(1, 2);
    }
    report.total_weight += 1;
  }
  return report;
}

inline CensusReport vertex_type_census(const Arrangement& arr) {
  EnvelopeAnalysis analysis(arr);
  return vertex_type_census(analysis);
}

enum class LineType { h22, h23, h33 };

inline const char* to_string(LineType t) {
  switch (t) {
    case LineType::h22: return "h22";
    case LineType::h23: return "h23";
    case LineType::h33: return "h33";
  }
  return "";
}

struct LineTypeReport {
  bool applicable = false;  // n >= 4 only
  std::map<int, LineType> line_types;
  int h22_count = 0;
  int below_weight_2_count = 0;
  bool end_vertex_not_external = false;
  bool end_vertex_v4 = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Types each line by its two extreme ("end") vertices along an exact
// direction vector, checks that end vertices are external of type v2 or
// v3, and verifies the per-line weight floors implied by the census:
// h33 and h23 lines carry weight >= 2, h22 lines >= 1, every h23 line
// contains a v4 vertex, and at most two lines carry weight below 2.
// The count of h22-typed lines is recorded but not capped: simple
// arrangements with three or more h22 lines exist, each carrying weight
// 2 or more, so only the weight-based cap is needed for the facet bound.
inline LineTypeReport line_type_census(EnvelopeAnalysis& analysis, const CensusReport& census) {
  const Arrangement& arr = analysis.arrangement();
  if (arr.dim != 2) throw std::invalid_argument("line_type_census: needs d=2");
  LineTypeReport report;
  if (arr.size() < 4) return report;
  report.applicable = true;

  for (int line = 0; line < arr.size(); ++line) {
    const auto& h = arr.hyperplanes[static_cast<std::size_t>(line)];
    // order the vertices on this line along the direction (-a2, a1)
    const Rational dir_x = -h.coeffs[1];
    const Rational dir_y = h.coeffs[0];
    const Vertex* first = nullptr;
    const Vertex* last = nullptr;
    Rational first_pos, last_pos;
    for (const auto& v : analysis.vertices()) {
      if (v.defining[0] != line && v.defining[1] != line) continue;
      const Rational pos = dir_x * v.point[0] + dir_y * v.point[1];
      if (!first || pos < first_pos) {
        first = &v;
        first_pos = pos;
      }
      if (!last || pos > last_pos) {
        last = &v;
        last_pos = pos;
      }
    }
    const std::array<const Vertex*, 2> ends{first, last};
    std::array<VertexType, 2> end_types{};
    bool typed = true;
    for (int e = 0; e < 2 && typed; ++e) {
      const std::array<int, 2> key{ends[static_cast<std::size_t>(e)]->defining[0],
                                   ends[static_cast<std::size_t>(e)]->defining[1]};
      const auto it = census.vertex_types.find(key);
      if (it == census.vertex_types.end()) {
        report.end_vertex_not_external = true;
        report.violations.push_back("end vertex " + audit_detail::pair_label(key) + " of line " +
                                    std::to_string(line) + " is not an external vertex");
        typed = false;
      } else if (it->second == VertexType::v4) {
        report.end_vertex_v4 = true;
        report.violations.push_back("end vertex " + audit_detail::pair_label(key) + " of line " +
                                    std::to_string(line) + " has type v4");
        typed = false;
      } else {
        end_types[static_cast<std::size_t>(e)] = it->second;
      }
    }
    if (!typed) continue;

    const int v2_ends = (end_types[0] == VertexType::v2 ? 1 : 0) + (end_types[1] == VertexType::v2 ? 1 : 0);
    const LineType type = v2_ends == 2 ? LineType::h22 : v2_ends == 1 ? LineType::h23 : LineType::h33;
    report.line_types.emplace(line, type);
    if (type == LineType::h22) ++report.h22_count;

    const Rational weight = census.line_weights.at(line);
    const Rational floor = type == LineType::h22 ? Rational(1) : Rational(2);
    if (weight < floor)
      report.violations.push_back("line " + std::to_string(line) + " (" + to_string(type) +
                                  ") carries weight " + format_rational(weight) +
                                  ", below its floor of " + format_rational(floor));
    if (type == LineType::h23) {
      bool has_v4 = false;
      for (const auto& [key, vtype] : census.vertex_types) {
        if ((key[0] == line || key[1] == line) && vtype == VertexType::v4) {
          has_v4 = true;
          break;
        }
      }
      if (!has_v4)
        report.violations.push_back("line " + std::to_string(line) +
                                    " (h23) contains no v4 vertex");
    }
  }
  for (const auto& [line, weight] : census.line_weights)
    if (weight < Rational(2)) ++report.below_weight_2_count;
  if (report.below_weight_2_count > 2)
    report.violations.push_back("found " + std::to_string(report.below_weight_2_count) +
                                " lines with weight below 2; at most 2 are possible");
  return report;
}

enum class BoundVerdict { holds, violated, not_applicable };

inline const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds: return "holds";
    case BoundVerdict::violated: return "violated";
    case BoundVerdict::not_applicable: return "not-applicable";
  }
  return "";
}

struct BoundsReport {
  int dim = 0;
  int n = 0;
  long long facet_count = 0;
  Rational proposition_bound = 0;  // 2(n-1) for d=2, (n(n-2)+6)/3 for d=3
  BoundVerdict proposition = BoundVerdict::not_applicable;
  Int hypothesis_bound = 0;  // d * C(n-2, d-1); reported, never asserted
  BoundVerdict hypothesis = BoundVerdict::not_applicable;
};

// Exact rational comparisons of the external facet count against the
// dimension-specific lower bound (a theorem for n >= 4 lines / n >= 5
// planes) and against the conjectured d*C(n-2, d-1).
inline BoundsReport check_bounds(EnvelopeAnalysis& analysis) {
  BoundsReport report;
  report.dim = analysis.dim();
  report.n = analysis.n();
  report.facet_count = static_cast<long long>(analysis.external_facets().size());
  const int n = report.n;
  const bool proposition_applies = report.dim == 2 ? n >= 4 : n >= 5;
  if (proposition_applies) {
    report.proposition_bound =
        report.dim == 2 ? Rational(2 * (n - 1)) : Rational(n * (n - 2) + 6, 3);
    report.proposition = Rational(report.facet_count) >= report.proposition_bound
                             ? BoundVerdict::holds
                             : BoundVerdict::violated;
  }
  report.hypothesis_bound = report.dim * binomial(n - 2, report.dim - 1);
  report.hypothesis =
      Int(report.facet_count) >= report.hypothesis_bound ? BoundVerdict::holds : BoundVerdict::violated;
  return report;
}

struct TripleCountingReport {
  bool applicable = false;  // d = 3 and n >= 5
  std::vector<long long> per_restriction_external;
  long long external_vertex_sum = 0;
  long long f0 = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Verifies the restriction chain on a plane arrangement: every plane's
// induced line arrangement is simple with n-1 lines and at least 2(n-2)
// external vertices, each of those vertices maps to an external vertex of
// the plane arrangement, and every arrangement vertex lies on exactly 3
// planes — so 3*f0 >= sum over restrictions >= 2n(n-2), exactly.
// per_restriction is called with each restriction's line analysis so a
// caller can run further checks without recomputing it.
template <typename PerRestriction>
TripleCountingReport triple_counting_check(EnvelopeAnalysis& analysis, PerRestriction&& per_restriction) {
  const Arrangement& arr = analysis.arrangement();
  if (arr.dim != 3) throw std::invalid_argument("triple_counting_check: needs d=3");
  TripleCountingReport report;
  const int n = arr.size();
  if (n < 5) return report;
  report.applicable = true;
  report.f0 = static_cast<long long>(analysis.external_faces(0).size());

  std::set<std::array<int, 3>> external_triples;
  for (const auto& v : analysis.vertices())
    if (analysis.external_faces(0).count(v.sign))
      external_triples.insert({v.defining[0], v.defining[1], v.defining[2]});

  for (int i = 0; i < n; ++i) {
    const Restriction res = restrict_to_plane(arr, i);
    if (res.line_arrangement.size() != n - 1) {
      report.violations.push_back("restriction " + std::to_string(i) + " has " +
                                  std::to_string(res.line_arrangement.size()) +
                                  " lines; expected n-1");
      continue;
    }
    EnvelopeAnalysis line_analysis(res.line_arrangement);
    long long external_count = 0;
    for (const auto& v : line_analysis.vertices()) {
      if (!line_analysis.external_faces(0).count(v.sign)) continue;
      ++external_count;
      const auto triple = res.vertex_triple(v.defining[0], v.defining[1]);
      if (!external_triples.count(triple))
        report.violations.push_back(
            "restriction " + std::to_string(i) + ": external vertex on planes {" +
            std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ", " +
            std::to_string(triple[2]) + "} is not external in the plane arrangement");
    }
    report.per_restriction_external.push_back(external_count);
    report.external_vertex_sum += external_count;
    if (external_count < 2 * (n - 2))
      report.violations.push_back("restriction " + std::to_string(i) + " has " +
                                  std::to_string(external_count) +
                                  " external vertices; expected at least 2(n-2) = " +
                                  std::to_string(2 * (n - 2)));
    per_restriction(i, line_analysis);
  }
  if (3 * report.f0 < report.external_vertex_sum)
    report.violations.push_back("3*f0 = " + std::to_string(3 * report.f0) +
                                " is smaller than the restriction sum " +
                                std::to_string(report.external_vertex_sum));
  if (report.external_vertex_sum < 2 * n * (n - 2))
    report.violations.push_back("restriction sum " + std::to_string(report.external_vertex_sum) +
                                " is below 2n(n-2) = " + std::to_string(2 * n * (n - 2)));
  return report;
}

inline TripleCountingReport triple_counting_check(EnvelopeAnalysis& analysis) {
  return triple_counting_check(analysis, [](int, EnvelopeAnalysis&) {});
}

struct AuditCheck {
  std::string name;
  BoundVerdict verdict = BoundVerdict::not_applicable;
  std::string detail;
};

struct AuditResult {
  EnvelopeReport envelope;
  BoundsReport bounds;
  std::optional<CensusReport> census;         // d = 2
  std::optional<LineTypeReport> line_report;  // d = 2
  std::optional<TripleCountingReport> triple;  // d = 3
  std::vector<AuditCheck> checks;
  std::vector<std::string> notes;
  bool passed = true;
};

// Runs every check that applies to the arrangement's dimension. Throws
// NotSimpleError for non-simple input; callers that want a report instead
// should call check_simple first.
inline AuditResult run_audit(const Arrangement& arr) {
  EnvelopeAnalysis analysis(arr);
  AuditResult result;
  result.envelope = analysis.report();
  const int d = arr.dim;
  const int n = arr.size();

  const auto add = [&result](const std::string& name, bool applicable, bool holds,
                             std::string detail = "") {
    AuditCheck check;
    check.name = name;
    check.verdict = !applicable        ? BoundVerdict::not_applicable
                    : holds            ? BoundVerdict::holds
                                       : BoundVerdict::violated;
    check.detail = std::move(detail);
    if (applicable && !holds) result.passed = false;
    result.checks.push_back(std::move(check));
  };

  add("vertex_count_is_binomial", true, Int(analysis.vertices().size()) == binomial(n, d),
      std::to_string(analysis.vertices().size()) + " vertices; C(n,d) expected");
  add("bounded_cell_count_is_binomial", true,
      Int(analysis.bounded_cell_count()) == binomial(n - 1, d),
      std::to_string(analysis.bounded_cell_count()) + " bounded cells; C(n-1,d) expected");
  add("external_facet_definitions_agree", true,
      analysis.external_facets_by_unbounded_cell() == analysis.external_facets(),
      "one-bounded-cell rule vs bounded-facet-of-unbounded-cell rule");

  result.bounds = check_bounds(analysis);
  add("facet_lower_bound", result.bounds.proposition != BoundVerdict::not_applicable,
      result.bounds.proposition == BoundVerdict::holds,
      std::to_string(result.bounds.facet_count) + " external facets vs lower bound " +
          format_rational(result.bounds.proposition_bound));
  // reported only: a shortfall here is a finding, not a failure
  result.checks.push_back({"facet_count_hypothesis", result.bounds.hypothesis,
                           std::to_string(result.bounds.facet_count) +
                               " external facets vs conjectured d*C(n-2,d-1) = " +
                               result.bounds.hypothesis_bound.str() + "; reported, never asserted"});

  if (d == 2) {
    add("external_vertex_edge_counts_match", true,
        result.envelope.f0_external == result.envelope.f1_external,
        "the envelope of a line arrangement is a union of closed curves");
    CensusReport census = vertex_type_census(analysis);
    Rational distributed = 0;
    for (const auto& [line, w] : census.line_weights) distributed += w;
    add("vertex_census_clean", true, census.ok());
    add("census_weight_conservation", true,
        census.total_weight == Rational(census.external_vertex_count) &&
            distributed == census.total_weight,
        "each external vertex redistributes exactly one unit onto the lines");
    add("census_weight_total_floor", n >= 4, census.total_weight >= Rational(2 * (n - 1)),
        "total weight " + format_rational(census.total_weight) + " vs 2(n-1) = " +
            std::to_string(2 * (n - 1)));
    LineTypeReport lines = line_type_census(analysis, census);
    add("line_census_clean", lines.applicable, lines.ok());
    add("end_vertices_v2_or_v3", lines.applicable,
        !lines.end_vertex_not_external && !lines.end_vertex_v4,
        "extreme vertices of every line are external and never v4");
    add("below_weight_two_line_cap", lines.applicable, lines.below_weight_2_count <= 2,
        std::to_string(lines.below_weight_2_count) +
            " lines carry weight below 2; at most 2 are possible");
    // reported only: simple arrangements with three or more h22 lines
    // exist, but every extra one carries weight >= 2, so the facet bound
    // rests on the weight cap above rather than on this count
    result.checks.push_back({"h22_type_line_count",
                             !lines.applicable        ? BoundVerdict::not_applicable
                             : lines.h22_count <= 2   ? BoundVerdict::holds
                                                      : BoundVerdict::violated,
                             std::to_string(lines.h22_count) +
                                 " lines have two v2 ends; reported, never asserted"});
    if (lines.applicable && lines.h22_count > 2)
      result.notes.push_back("h22 line count " + std::to_string(lines.h22_count) +
                             " exceeds 2; the binding cap is on lines of weight below 2 (" +
                             std::to_string(lines.below_weight_2_count) +
                             " here), and the total-weight floor still holds");
    result.census = std::move(census);
    result.line_report = std::move(lines);
  } else {
    add("euler_characteristic_is_2", n >= 4,
        result.envelope.euler.has_value() && *result.envelope.euler == 2,
        "the envelope is a 2-sphere complex: f0 - f1 + f2 = 2");
    add("edge_vertex_incidence", n >= 5,
        2 * result.envelope.f1_external >= 3 * result.envelope.f0_external,
        "every external vertex lies in at least 3 external edges");
    add("external_vertex_floor", n >= 5,
        3 * result.envelope.f0_external >= 2 * n * (n - 2),
        "f0 vs 2n(n-2)/3 from the restriction argument");

    bool restrictions_clean = true;
    std::string restriction_detail;
    TripleCountingReport triple =
        triple_counting_check(analysis, [&](int i, EnvelopeAnalysis& line_analysis) {
          CensusReport census = vertex_type_census(line_analysis);
          bool ok = census.ok() && census.total_weight == Rational(census.external_vertex_count);
          const LineTypeReport lines = line_type_census(line_analysis, census);
          if (lines.applicable) ok = ok && lines.ok();
          if (!ok && restriction_detail.empty())
            restriction_detail = "first failing restriction: plane " + std::to_string(i);
          restrictions_clean = restrictions_clean && ok;
        });
    add("triple_counting_chain", triple.applicable, triple.ok(),
        triple.applicable ? "restriction sum " + std::to_string(triple.external_vertex_sum) +
                                ", 3*f0 = " + std::to_string(3 * triple.f0)
                          : "");
    add("restriction_censuses_clean", triple.applicable, restrictions_clean, restriction_detail);
    result.triple = std::move(triple);
    result.notes.push_back(
        "adding the n-th plane raises the bounded-cell count from C(n-2,3) to C(n-1,3), "
        "a gain of C(n-2,2) (not C(n,2))");
  }
  return result;
}

}  // namespace envelopes
