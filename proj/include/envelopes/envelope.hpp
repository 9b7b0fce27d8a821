#pragma once

// Envelope computation. An external facet of a simple arrangement is a
// bounded facet lying in exactly one bounded cell; equivalently, a
// bounded facet of an unbounded cell. The external k-faces are the
// k-faces contained in the closure of some external facet, and the
// envelope report collects their counts f0, f1 (and f2 plus the Euler
// characteristic f0 - f1 + f2 when d = 3).
//
// Also here: restriction of a plane arrangement to one of its planes,
// which produces the induced simple line arrangement in an exact affine
// frame on that plane.

#include "envelopes/arrangement.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace envelopes {

struct EnvelopeReport {
  int dim = 0;
  int n = 0;
  long long f0_external = 0;
  long long f1_external = 0;
  std::optional<long long> f2_external;  // d = 3 only
  long long bounded_cells = 0;
  std::optional<long long> euler;  // d = 3 only: f0 - f1 + f2
  std::vector<SignVector> external_facets;
};

// Computes and caches the face data of one simple arrangement: vertex
// list, per-k face sets, per-face boundedness, external facets. Lazy and
// single-threaded; analyses of different arrangements are independent.
class EnvelopeAnalysis {
 public:
  explicit EnvelopeAnalysis(Arrangement arr) : arr_(std::move(arr)) {
    require_simple(arr_);
    vertices_ = arr_detail::enumerate_vertices_unchecked(arr_);
  }

  const Arrangement& arrangement() const { return arr_; }
  int dim() const { return arr_.dim; }
  int n() const { return arr_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  const std::set<SignVector>& faces(int k) {
    if (k < 0 || k > arr_.dim) throw std::invalid_argument("faces: k out of range");
    auto& slot = faces_[static_cast<std::size_t>(k)];
    if (!slot) slot = arr_detail::faces_from_vertices(vertices_, arr_.dim, k);
    return *slot;
  }

  bool bounded(const SignVector& f) {
    auto it = bounded_.find(f);
    if (it == bounded_.end()) it = bounded_.emplace(f, is_bounded_face(arr_, f)).first;
    return it->second;
  }

  // production definition: bounded facet with exactly one bounded cell
  const std::vector<SignVector>& external_facets() {
    if (!external_) {
      std::vector<SignVector> out;
      for (const auto& f : faces(arr_.dim - 1)) {
        if (!bounded(f)) continue;
        const auto [above, below] = adjacent_cells(f);
        if (bounded(above) != bounded(below)) out.push_back(f);
      }
      external_ = std::move(out);
    }
    return *external_;
  }

  // cross-check definition: bounded facet of an unbounded cell
  std::vector<SignVector> external_facets_by_unbounded_cell() {
    std::vector<SignVector> out;
    for (const auto& f : faces(arr_.dim - 1)) {
      if (!bounded(f)) continue;
      const auto [above, below] = adjacent_cells(f);
      if (!bounded(above) || !bounded(below)) out.push_back(f);
    }
    return out;
  }

  const std::set<SignVector>& external_faces(int k) {
    if (k < 0 || k >= arr_.dim) throw std::invalid_argument("external_faces: k out of range");
    auto& slot = external_k_[static_cast<std::size_t>(k)];
    if (!slot) {
      std::set<SignVector> out;
      const auto& ext = external_facets();
      if (k == arr_.dim - 1) {
        out.insert(ext.begin(), ext.end());
      } else {
        for (const auto& g : faces(k))
          for (const auto& f : ext)
            if (is_subface(g, f)) {
              out.insert(g);
              break;
            }
      }
      slot = std::move(out);
    }
    return *slot;
  }

  long long bounded_cell_count() {
    if (!bounded_cells_) {
      long long count = 0;
      for (const auto& c : faces(arr_.dim))
        if (bounded(c)) ++count;
      bounded_cells_ = count;
    }
    return *bounded_cells_;
  }

  EnvelopeReport report() {
    EnvelopeReport r;
    r.dim = arr_.dim;
    r.n = arr_.size();
    r.external_facets = external_facets();
    r.f0_external = static_cast<long long>(external_faces(0).size());
    r.f1_external = static_cast<long long>(external_faces(1).size());
    if (arr_.dim == 3) {
      r.f2_external = static_cast<long long>(external_faces(2).size());
      r.euler = r.f0_external - r.f1_external + *r.f2_external;
    }
    r.bounded_cells = bounded_cell_count();
    return r;
  }

 private:
  Arrangement arr_;
  std::vector<Vertex> vertices_;
  std::array<std::optional<std::set<SignVector>>, 4> faces_;
  std::array<std::optional<std::set<SignVector>>, 3> external_k_;
  std::map<SignVector, bool> bounded_;
  std::optional<std::vector<SignVector>> external_;
  std::optional<long long> bounded_cells_;
};

inline std::vector<SignVector> external_facets(const Arrangement& arr) {
  EnvelopeAnalysis analysis(arr);
  return analysis.external_facets();
}

// light path for the search loop: no k-face closure scans
inline long long count_external_facets(const Arrangement& arr) {
  EnvelopeAnalysis analysis(arr);
  return static_cast<long long>(analysis.external_facets().size());
}

inline EnvelopeReport external_face_counts(const Arrangement& arr) {
  EnvelopeAnalysis analysis(arr);
  return analysis.report();
}

// f0 - f1 + f2 of the envelope; defined for plane arrangements with n >= 4
inline long long euler_characteristic(const Arrangement& arr) {
  if (arr.dim != 3) throw std::invalid_argument("euler_characteristic: needs d=3");
  if (arr.size() < 4) throw std::invalid_argument("euler_characteristic: needs n >= 4");
  EnvelopeAnalysis analysis(arr);
  return *analysis.report().euler;
}

// The line arrangement induced on plane i by the other planes, written in
// an exact affine frame on that plane. The frame drops the coordinate
// with the largest |normal coefficient| (ties: lowest index), which keeps
// the substitution well-defined and the construction deterministic.
struct Restriction {
  Arrangement line_arrangement;  // d = 2, n-1 lines
  int plane_index = -1;
  std::vector<int> source_plane;  // line t was induced by plane source_plane[t]
  Hyperplane plane;
  int dropped_coordinate = -1;
  std::array<int, 2> kept_coordinates{};

  // frame coordinates (u, v) back to a point on the plane in 3-space
  Point lift(const Point& uv) const {
    Point x(3, Rational(0));
    x[static_cast<std::size_t>(kept_coordinates[0])] = uv[0];
    x[static_cast<std::size_t>(kept_coordinates[1])] = uv[1];
    const auto& a = plane.coeffs;
    x[static_cast<std::size_t>(dropped_coordinate)] =
        (plane.rhs - a[static_cast<std::size_t>(kept_coordinates[0])] * uv[0] -
         a[static_cast<std::size_t>(kept_coordinates[1])] * uv[1]) /
        a[static_cast<std::size_t>(dropped_coordinate)];
    return x;
  }

  // the 3-subset of plane indices defining the vertex where two induced
  // lines cross, ascending
  std::array<int, 3> vertex_triple(int line_s, int line_t) const {
    std::array<int, 3> triple{plane_index, source_plane[static_cast<std::size_t>(line_s)],
                              source_plane[static_cast<std::size_t>(line_t)]};
    std::sort(triple.begin(), triple.end());
    return triple;
  }
};

inline Restriction restrict_to_plane(const Arrangement& arr3, int i) {
  if (arr3.dim != 3) throw std::invalid_argument("restrict_to_plane: needs d=3");
  if (i < 0 || i >= arr3.size()) throw std::invalid_argument("restrict_to_plane: index out of range");
  require_simple(arr3);

  Restriction res;
  res.plane_index = i;
  res.plane = arr3.hyperplanes[static_cast<std::size_t>(i)];
  const auto& a = res.plane.coeffs;
  int drop = 0;
  for (int j = 1; j < 3; ++j)
    if (abs(a[static_cast<std::size_t>(j)]) > abs(a[static_cast<std::size_t>(drop)])) drop = j;
  res.dropped_coordinate = drop;
  int u = -1, v = -1;
  for (int j = 0; j < 3; ++j) {
    if (j == drop) continue;
    (u < 0 ? u : v) = j;
  }
  res.kept_coordinates = {u, v};

  res.line_arrangement.dim = 2;
  for (int m = 0; m < arr3.size(); ++m) {
    if (m == i) continue;
    const auto& h = arr3.hyperplanes[static_cast<std::size_t>(m)];
    // substitute x_drop = (b_i - a_u u - a_v v) / a_drop into h
    const Rational t = h.coeffs[static_cast<std::size_t>(drop)] / a[static_cast<std::size_t>(drop)];
    Hyperplane line;
    line.coeffs = {h.coeffs[static_cast<std::size_t>(u)] - t * a[static_cast<std::size_t>(u)],
                   h.coeffs[static_cast<std::size_t>(v)] - t * a[static_cast<std::size_t>(v)]};
    line.rhs = h.rhs - t * res.plane.rhs;
    res.line_arrangement.hyperplanes.push_back(std::move(line));
    res.source_plane.push_back(m);
  }
  // induced by a simple plane arrangement, the restriction is simple too;
  // verifying it here turns any frame bug into a loud failure
  require_simple(res.line_arrangement);
  return res;
}

}  // namespace envelopes
