#pragma once

// Exact linear feasibility over the rationals by Fourier-Motzkin
// elimination with strict-inequality tracking (a derived row is strict iff
// either parent is strict). This is complete for systems of =, >=, >
// constraints, and perfectly adequate here: dimension is at most 3 and
// systems have at most a few dozen rows.
//
// Rows are normalized so the first nonzero coefficient is +-1; parallel
// rows collapse onto the tightest bound. That keeps the quadratic
// pair-combination step from accumulating duplicates.

#include "envelopes/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace envelopes {

enum class Relation { eq, ge, gt };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  Relation rel = Relation::ge;  // coeffs . x  (rel)  rhs
};

struct LinearSystem {
  int dim = 0;
  std::vector<LinearConstraint> constraints;
};

namespace fm_detail {

// normal form: coeffs . x >= rhs, strict when flagged
struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
};

// Decides zero rows on the spot, scales the rest to a canonical leading
// +-1, and folds parallel rows onto their tightest representative.
// Returns false when a zero row is unsatisfiable.
inline bool prune(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
  for (auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.coeffs.size() && row.coeffs[lead] == 0) ++lead;
    if (lead == row.coeffs.size()) {
      const int s = sign_of(row.rhs);
      if (s > 0 || (s == 0 && row.strict)) return false;  // 0 >= positive, or 0 > 0
      continue;
    }
    const Rational scale = abs(row.coeffs[lead]);
    if (scale != 1) {
      for (auto& c : row.coeffs) c /= scale;
      row.rhs /= scale;
    }
    const auto it = best.find(row.coeffs);
    if (it == best.end()) {
      best.emplace(std::move(row.coeffs), std::pair(std::move(row.rhs), row.strict));
    } else if (row.rhs > it->second.first) {
      it->second = {std::move(row.rhs), row.strict};
    } else if (row.rhs == it->second.first) {
      it->second.second = it->second.second || row.strict;
    }
  }
  rows.clear();
  rows.reserve(best.size());
  for (const auto& [coeffs, bound] : best) rows.push_back(Row{coeffs, bound.first, bound.second});
  return true;
}

// Projects variable j away: keeps rows not mentioning it and combines
// every (lower bound, upper bound) pair. Returns false on detected
// infeasibility.
inline bool eliminate(std::vector<Row>& rows, std::size_t j) {
  std::vector<Row> keep, lower, upper;
  for (auto& row : rows) {
    const int s = sign_of(row.coeffs[j]);
    if (s == 0)
      keep.push_back(std::move(row));
    else if (s > 0)
      lower.push_back(std::move(row));  // bounds x_j from below
    else
      upper.push_back(std::move(row));  // bounds x_j from above
  }
  for (const auto& lo : lower) {
    for (const auto& up : upper) {
      const Rational a = lo.coeffs[j];   // > 0
      const Rational b = -up.coeffs[j];  // > 0
      Row combo;
      combo.coeffs.resize(lo.coeffs.size());
      for (std::size_t t = 0; t < combo.coeffs.size(); ++t)
        combo.coeffs[t] = b * lo.coeffs[t] + a * up.coeffs[t];
      combo.coeffs[j] = 0;
      combo.rhs = b * lo.rhs + a * up.rhs;
      combo.strict = lo.strict || up.strict;
      keep.push_back(std::move(combo));
    }
  }
  rows = std::move(keep);
  return prune(rows);
}

inline std::vector<Row> to_rows(const LinearSystem& sys) {
  std::vector<Row> rows;
  rows.reserve(sys.constraints.size() * 2);
  for (const auto& c : sys.constraints) {
    if (static_cast<int>(c.coeffs.size()) != sys.dim)
      throw std::invalid_argument("linear system: constraint dimension mismatch");
    switch (c.rel) {
      case Relation::ge:
        rows.push_back({c.coeffs, c.rhs, false});
        break;
      case Relation::gt:
        rows.push_back({c.coeffs, c.rhs, true});
        break;
      case Relation::eq: {
        rows.push_back({c.coeffs, c.rhs, false});
        Row neg{c.coeffs, -c.rhs, false};
        for (auto& v : neg.coeffs) v = -v;
        rows.push_back(std::move(neg));
        break;
      }
    }
  }
  return rows;
}

// Eliminates every variable except keep_var (-1 keeps none), cheapest
// first (fewest lower*upper combinations). Returns false on detected
// infeasibility; otherwise the surviving rows mention keep_var only.
inline bool eliminate_all_but(std::vector<Row>& rows, int dim, int keep_var) {
  std::vector<bool> done(static_cast<std::size_t>(dim), false);
  if (keep_var >= 0) done[static_cast<std::size_t>(keep_var)] = true;
  if (!prune(rows)) return false;
  for (;;) {
    int best_var = -1;
    long long best_cost = -1;
    for (int j = 0; j < dim; ++j) {
      if (done[static_cast<std::size_t>(j)]) continue;
      long long lowers = 0, uppers = 0;
      for (const auto& row : rows) {
        const int s = sign_of(row.coeffs[static_cast<std::size_t>(j)]);
        if (s > 0)
          ++lowers;
        else if (s < 0)
          ++uppers;
      }
      const long long cost = lowers * uppers;
      if (best_var < 0 || cost < best_cost) {
        best_var = j;
        best_cost = cost;
      }
    }
    if (best_var < 0) return true;
    done[static_cast<std::size_t>(best_var)] = true;
    if (!eliminate(rows, static_cast<std::size_t>(best_var))) return false;
  }
}

}  // namespace fm_detail

// True iff the system has a rational (equivalently, real) solution.
inline bool is_feasible(const LinearSystem& sys) {
  auto rows = fm_detail::to_rows(sys);
  return fm_detail::eliminate_all_but(rows, sys.dim, -1);
}

// The one-dimensional shadow of the solution set on coordinate j: whether
// it is nonempty and whether anything bounds it from below/above. After
// full elimination the surviving rows describe the shadow exactly, so a
// missing bound really means the shadow is unbounded on that side.
struct CoordinateShadow {
  bool feasible = false;
  bool has_lower = false;
  bool has_upper = false;
};

inline CoordinateShadow project_to_coordinate(const LinearSystem& sys, int j) {
  if (j < 0 || j >= sys.dim) throw std::invalid_argument("project_to_coordinate: index out of range");
  auto rows = fm_detail::to_rows(sys);
  CoordinateShadow out;
  if (!fm_detail::eliminate_all_but(rows, sys.dim, j)) return out;
  // prune leaves at most one row per direction: lead coefficient +1
  // (lower bound) or -1 (upper bound)
  Rational lower, upper;
  bool lower_strict = false, upper_strict = false;
  for (const auto& row : rows) {
    const Rational& c = row.coeffs[static_cast<std::size_t>(j)];
    if (c > 0) {
      out.has_lower = true;
      lower = row.rhs / c;
      lower_strict = row.strict;
    } else if (c < 0) {
      out.has_upper = true;
      upper = row.rhs / c;  // dividing by a negative flips the bound's side
      upper_strict = row.strict;
    }
  }
  if (out.has_lower && out.has_upper &&
      (lower > upper || (lower == upper && (lower_strict || upper_strict)))) {
    return {};  // empty interval
  }
  out.feasible = true;
  return out;
}

}  // namespace envelopes
