#pragma once

// Simple arrangements of lines (d=2) and planes (d=3) with exact data:
// simplicity checking, vertex enumeration, face enumeration by sign
// vector, and two independent boundedness oracles.
//
// A relatively open face is identified with its sign vector against the
// hyperplanes: one of '-', '0', '+' per index. In a simple arrangement
// every d-subset of hyperplanes meets in exactly one point, all those
// points are distinct, and the k-faces having at least one vertex in
// their closure are exactly the completions of vertex sign vectors (keep
// d-k of the vertex's zeros, give the rest either sign). Faces with no
// vertex are all unbounded and never matter to envelope computations, so
// they are deliberately not enumerated.

#include "envelopes/feasibility.hpp"
#include "envelopes/linalg.hpp"
#include "envelopes/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace envelopes {

struct Hyperplane {
  std::vector<Rational> coeffs;  // not all zero
  Rational rhs;                  // the set {x : coeffs . x = rhs}
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

inline bool is_valid_hyperplane(const Hyperplane& h) {
  for (const auto& c : h.coeffs)
    if (c != 0) return true;
  return false;
}

// signed offset of p against h; 0 exactly on h
inline Rational evaluate(const Hyperplane& h, const Point& p) { return dot(h.coeffs, p) - h.rhs; }

struct Arrangement {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
  int size() const { return static_cast<int>(hyperplanes.size()); }
  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::string signs) : signs_(std::move(signs)) {
    for (char c : signs_)
      if (c != '-' && c != '0' && c != '+')
        throw std::invalid_argument("sign vector may contain only '-', '0', '+'");
  }

  int size() const { return static_cast<int>(signs_.size()); }
  char at(int i) const { return signs_[static_cast<std::size_t>(i)]; }
  int zero_count() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), '0')); }

  std::vector<int> zero_positions() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (at(i) == '0') out.push_back(i);
    return out;
  }

  // copy with position i replaced by c
  SignVector with(int i, char c) const {
    std::string s = signs_;
    s[static_cast<std::size_t>(i)] = c;
    return SignVector(std::move(s));
  }

  const std::string& str() const { return signs_; }

  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::string signs_;
};

struct Vertex {
  Point point;
  std::vector<int> defining;  // the d hyperplane indices meeting here, ascending
  SignVector sign;            // exactly d zeros, at the defining indices
};

struct GuardrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Worst-case runs stay interactive: 24 lines in 2D, 16 planes in 3D.
inline void enforce_size_guardrails(int dim, int n) {
  if (dim != 2 && dim != 3)
    throw GuardrailError("unsupported dimension d=" + std::to_string(dim) + "; expected 2 or 3");
  const int limit = dim == 2 ? 24 : 16;
  if (n > limit)
    throw GuardrailError("arrangement too large: n=" + std::to_string(n) + " exceeds the d=" +
                         std::to_string(dim) + " limit of " + std::to_string(limit));
}

inline void enforce_guardrails(const Arrangement& arr) { enforce_size_guardrails(arr.dim, arr.size()); }

struct SimplicityIssue {
  enum class Kind { too_few_hyperplanes, invalid_hyperplane, singular_subset, coincident_points };
  Kind kind;
  std::vector<int> subset;        // offending hyperplane indices
  std::vector<int> other_subset;  // the second subset for coincident_points

  std::string describe() const {
    const auto join = [](const std::vector<int>& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
      }
      return out + "}";
    };
    switch (kind) {
      case Kind::too_few_hyperplanes:
        return "fewer than d+1 hyperplanes";
      case Kind::invalid_hyperplane:
        return "hyperplane " + std::to_string(subset.front()) + " has all-zero coefficients";
      case Kind::singular_subset:
        return "hyperplanes " + join(subset) + " do not meet in a single point";
      case Kind::coincident_points:
        return "hyperplanes " + join(subset) + " and " + join(other_subset) + " meet at the same point";
    }
    return "";
  }
};

struct SimplicityVerdict {
  std::vector<SimplicityIssue> issues;
  bool ok() const { return issues.empty(); }
};

namespace arr_detail {

// visits every ascending d-subset of {0, ..., n-1} in lexicographic order
template <typename F>
void for_each_subset(int n, int d, F&& fn) {
  if (d > n || d < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(idx);
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < d; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

inline std::optional<Point> intersection_point(const Arrangement& arr, const std::vector<int>& subset) {
  Matrix a;
  Point b;
  for (int i : subset) {
    a.push_back(arr.hyperplanes[static_cast<std::size_t>(i)].coeffs);
    b.push_back(arr.hyperplanes[static_cast<std::size_t>(i)].rhs);
  }
  return solve_square_system(std::move(a), std::move(b));
}

}  // namespace arr_detail

// Simple iff every d-subset of hyperplanes meets in a point and all
// C(n, d) such points are pairwise distinct (which also rules out a point
// lying on more than d hyperplanes). All issues are collected, not just
// the first.
inline SimplicityVerdict check_simple(const Arrangement& arr) {
  enforce_guardrails(arr);
  SimplicityVerdict verdict;
  const int n = arr.size();
  const int d = arr.dim;
  if (n < d + 1) {
    verdict.issues.push_back({SimplicityIssue::Kind::too_few_hyperplanes, {}, {}});
    return verdict;
  }
  for (int i = 0; i < n; ++i)
    if (!is_valid_hyperplane(arr.hyperplanes[static_cast<std::size_t>(i)]))
      verdict.issues.push_back({SimplicityIssue::Kind::invalid_hyperplane, {i}, {}});
  if (!verdict.ok()) return verdict;

  std::map<Point, std::vector<int>> seen;
  arr_detail::for_each_subset(n, d, [&](const std::vector<int>& subset) {
    auto p = arr_detail::intersection_point(arr, subset);
    if (!p) {
      verdict.issues.push_back({SimplicityIssue::Kind::singular_subset, subset, {}});
      return;
    }
    const auto [it, inserted] = seen.emplace(std::move(*p), subset);
    if (!inserted)
      verdict.issues.push_back({SimplicityIssue::Kind::coincident_points, it->second, subset});
  });
  return verdict;
}

inline void require_simple(const Arrangement& arr) {
  const auto verdict = check_simple(arr);
  if (!verdict.ok())
    throw NotSimpleError("arrangement is not simple: " + verdict.issues.front().describe());
}

inline SignVector sign_vector_at(const Arrangement& arr, const Point& p) {
  std::string s(static_cast<std::size_t>(arr.size()), '0');
  for (int i = 0; i < arr.size(); ++i) {
    const int sg = sign_of(evaluate(arr.hyperplanes[static_cast<std::size_t>(i)], p));
    s[static_cast<std::size_t>(i)] = sg > 0 ? '+' : sg < 0 ? '-' : '0';
  }
  return SignVector(std::move(s));
}

namespace arr_detail {

// assumes simplicity was already verified
inline std::vector<Vertex> enumerate_vertices_unchecked(const Arrangement& arr) {
  std::vector<Vertex> vertices;
  for_each_subset(arr.size(), arr.dim, [&](const std::vector<int>& subset) {
    auto p = intersection_point(arr, subset);
    Vertex v;
    v.point = std::move(*p);
    v.defining = subset;
    v.sign = sign_vector_at(arr, v.point);
    vertices.push_back(std::move(v));
  });
  return vertices;
}

// At a simple vertex the d hyperplanes through it cross like coordinate
// hyperplanes, so every completion of the vertex's sign vector (keep d-k
// of its zeros, give the rest a sign) is realized as a k-face.
inline std::set<SignVector> faces_from_vertices(const std::vector<Vertex>& vertices, int dim, int k) {
  std::set<SignVector> out;
  for (const auto& v : vertices) {
    const std::vector<int>& zeros = v.defining;
    for_each_subset(static_cast<int>(zeros.size()), dim - k, [&](const std::vector<int>& keep_idx) {
      std::vector<int> flip;  // zero positions that get a sign
      std::size_t t = 0;
      for (int zi = 0; zi < static_cast<int>(zeros.size()); ++zi) {
        if (t < keep_idx.size() && keep_idx[t] == zi) {
          ++t;
          continue;
        }
        flip.push_back(zeros[static_cast<std::size_t>(zi)]);
      }
      const int bits = static_cast<int>(flip.size());  // == k
      for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        std::string s = v.sign.str();
        for (int f = 0; f < bits; ++f)
          s[static_cast<std::size_t>(flip[static_cast<std::size_t>(f)])] = (mask >> f) & 1u ? '+' : '-';
        out.insert(SignVector(std::move(s)));
      }
    });
  }
  return out;
}

}  // namespace arr_detail

// Exactly C(n, d) vertices, one per d-subset of hyperplanes.
inline std::vector<Vertex> enumerate_vertices(const Arrangement& arr) {
  require_simple(arr);
  return arr_detail::enumerate_vertices_unchecked(arr);
}

// All k-faces with at least one vertex in their closure, 0 <= k <= d.
inline std::set<SignVector> enumerate_faces(const Arrangement& arr, int k) {
  if (k < 0 || k > arr.dim) throw std::invalid_argument("enumerate_faces: k out of range");
  const auto vertices = enumerate_vertices(arr);
  return arr_detail::faces_from_vertices(vertices, arr.dim, k);
}

// The two cells meeting along a facet: flip its unique zero each way.
inline std::pair<SignVector, SignVector> adjacent_cells(const SignVector& facet) {
  const auto zeros = facet.zero_positions();
  if (zeros.size() != 1)
    throw std::invalid_argument("adjacent_cells: facet must have exactly one zero");
  return {facet.with(zeros.front(), '+'), facet.with(zeros.front(), '-')};
}

// g lies in the closure of f iff g agrees with f wherever g is nonzero.
inline bool is_subface(const SignVector& g, const SignVector& f) {
  if (g.size() != f.size()) throw std::invalid_argument("is_subface: length mismatch");
  for (int i = 0; i < g.size(); ++i) {
    const char c = g.at(i);
    if (c != '0' && c != f.at(i)) return false;
  }
  return true;
}

// {x : sign(evaluate(h_i, x)) = f_i for all i} as =, > constraints
inline LinearSystem face_membership_system(const Arrangement& arr, const SignVector& f) {
  if (f.size() != arr.size())
    throw std::invalid_argument("face_membership_system: sign vector length mismatch");
  LinearSystem sys;
  sys.dim = arr.dim;
  for (int i = 0; i < arr.size(); ++i) {
    const auto& h = arr.hyperplanes[static_cast<std::size_t>(i)];
    switch (f.at(i)) {
      case '0':
        sys.constraints.push_back({h.coeffs, h.rhs, Relation::eq});
        break;
      case '+':
        sys.constraints.push_back({h.coeffs, h.rhs, Relation::gt});
        break;
      case '-': {
        std::vector<Rational> neg = h.coeffs;
        for (auto& c : neg) c = -c;
        sys.constraints.push_back({std::move(neg), -h.rhs, Relation::gt});
        break;
      }
    }
  }
  return sys;
}

// A nonempty face is bounded iff its recession cone is {0}: for every
// coordinate j and sign s, the homogeneous relaxation of the face's
// constraints together with s*x_j = 1 must be infeasible (any nonzero
// recession direction has a nonzero coordinate and survives scaling).
inline bool is_bounded_face(const Arrangement& arr, const SignVector& f) {
  if (f.size() != arr.size())
    throw std::invalid_argument("is_bounded_face: sign vector length mismatch");
  LinearSystem cone;
  cone.dim = arr.dim;
  for (int i = 0; i < arr.size(); ++i) {
    const auto& h = arr.hyperplanes[static_cast<std::size_t>(i)];
    switch (f.at(i)) {
      case '0':
        cone.constraints.push_back({h.coeffs, Rational(0), Relation::eq});
        break;
      case '+':
        cone.constraints.push_back({h.coeffs, Rational(0), Relation::ge});
        break;
      case '-': {
        std::vector<Rational> neg = h.coeffs;
        for (auto& c : neg) c = -c;
        cone.constraints.push_back({std::move(neg), Rational(0), Relation::ge});
        break;
      }
    }
  }
  cone.constraints.push_back({});  // slot for the unit-coordinate pin
  for (int j = 0; j < arr.dim; ++j) {
    for (const int s : {1, -1}) {
      std::vector<Rational> pin(static_cast<std::size_t>(arr.dim), Rational(0));
      pin[static_cast<std::size_t>(j)] = s;
      cone.constraints.back() = {std::move(pin), Rational(1), Relation::eq};
      if (is_feasible(cone)) return false;
    }
  }
  return true;
}

// Independent route to the same answer: a nonempty face is bounded iff
// each coordinate shadow of its membership system carries both a lower
// and an upper bound.
inline bool is_bounded_face_by_projection(const Arrangement& arr, const SignVector& f) {
  const LinearSystem sys = face_membership_system(arr, f);
  for (int j = 0; j < arr.dim; ++j) {
    const auto shadow = project_to_coordinate(sys, j);
    if (!shadow.feasible)
      throw std::invalid_argument("is_bounded_face_by_projection: sign vector is not a face");
    if (!shadow.has_lower || !shadow.has_upper) return false;
  }
  return true;
}

}  // namespace envelopes
