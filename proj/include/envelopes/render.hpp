#pragma once

// Renderers. SVG for line arrangements: every line clipped to a padded
// bounding box of the vertex set, external edges restroked on top, and
// optionally the bounded cells shaded. OFF meshes for plane arrangements:
// the external vertices and external facet polygons, each facet wound
// counterclockwise as seen from outside its bounded cell.
//
// All geometry is computed exactly; doubles appear only in the final
// coordinate formatting, so output is deterministic.

#include "envelopes/envelope.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace envelopes {
namespace render_detail {

inline std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// 0 for the upper halfplane (y > 0, or y == 0 and x > 0), 1 otherwise
inline int halfplane_class(const std::array<Rational, 2>& d) {
  return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
}

// counterclockwise order of nonzero, pairwise non-equal directions
inline bool angular_less(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) {
  const int ca = halfplane_class(a);
  const int cb = halfplane_class(b);
  if (ca != cb) return ca < cb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

// indices of the points in counterclockwise order around their centroid,
// which is interior because the points are the vertices of a convex
// polygon
inline std::vector<std::size_t> convex_cycle_order(const std::vector<std::array<Rational, 2>>& pts) {
  std::array<Rational, 2> c{Rational(0), Rational(0)};
  for (const auto& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  const Rational m(pts.size());
  c[0] /= m;
  c[1] /= m;
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const std::array<Rational, 2> di{pts[i][0] - c[0], pts[i][1] - c[1]};
    const std::array<Rational, 2> dj{pts[j][0] - c[0], pts[j][1] - c[1]};
    return angular_less(di, dj);
  });
  return order;
}

// all vertices lying in the closure of face f
inline std::vector<const Vertex*> face_vertices(EnvelopeAnalysis& analysis, const SignVector& f) {
  std::vector<const Vertex*> out;
  for (const auto& v : analysis.vertices())
    if (is_subface(v.sign, f)) out.push_back(&v);
  return out;
}

}  // namespace render_detail

struct SvgOptions {
  bool shade_bounded_cells = false;
};

inline std::string render_svg(const Arrangement& arr, const SvgOptions& options = {}) {
  if (arr.dim != 2) throw std::invalid_argument("render_svg: needs d=2");
  EnvelopeAnalysis analysis(arr);
  using render_detail::fmt;
  using render_detail::to_double;

  // padded exact bounding box of the vertex set
  Rational xmin = analysis.vertices().front().point[0], xmax = xmin;
  Rational ymin = analysis.vertices().front().point[1], ymax = ymin;
  for (const auto& v : analysis.vertices()) {
    xmin = std::min(xmin, v.point[0]);
    xmax = std::max(xmax, v.point[0]);
    ymin = std::min(ymin, v.point[1]);
    ymax = std::max(ymax, v.point[1]);
  }
  const Rational xpad = (xmax - xmin) / 5;
  const Rational ypad = (ymax - ymin) / 5;
  const Rational bx0 = xmin - xpad, bx1 = xmax + xpad;
  const Rational by0 = ymin - ypad, by1 = ymax + ypad;

  // SVG's y axis points down; reflect within the box
  const auto X = [&](const Rational& x) { return fmt(to_double(x)); };
  const auto Y = [&](const Rational& y) { return fmt(to_double(by0 + by1 - y)); };

  const double wd = to_double(bx1 - bx0);
  const double hd = to_double(by1 - by0);
  const double stroke = std::max(wd, hd) / 240.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(to_double(bx0)) << " "
      << fmt(to_double(by0)) << " " << fmt(wd) << " " << fmt(hd) << "\">\n";
  svg << "  <style>\n";
  svg << "    line.line { stroke: #9aa0a6; stroke-width: " << fmt(stroke) << "; }\n";
  svg << "    line.external { stroke: #c43d00; stroke-width: " << fmt(stroke * 2.5)
      << "; stroke-linecap: round; }\n";
  svg << "    polygon.cell { fill: #d7e3f4; stroke: none; }\n";
  svg << "  </style>\n";

  if (options.shade_bounded_cells) {
    for (const auto& cell : analysis.faces(2)) {
      if (!analysis.bounded(cell)) continue;
      const auto vertices = render_detail::face_vertices(analysis, cell);
      std::vector<std::array<Rational, 2>> pts;
      pts.reserve(vertices.size());
      for (const auto* v : vertices) pts.push_back({v->point[0], v->point[1]});
      svg << "  <polygon class=\"cell\" points=\"";
      bool space = false;
      for (const std::size_t i : render_detail::convex_cycle_order(pts)) {
        if (space) svg << " ";
        space = true;
        svg << X(pts[i][0]) << "," << Y(pts[i][1]);
      }
      svg << "\"/>\n";
    }
  }

  // every line, clipped exactly to the box
  for (const auto& h : arr.hyperplanes) {
    std::set<std::pair<Rational, Rational>> hits;
    if (h.coeffs[1] != 0) {
      for (const Rational& x : {bx0, bx1}) {
        const Rational y = (h.rhs - h.coeffs[0] * x) / h.coeffs[1];
        if (y >= by0 && y <= by1) hits.insert({x, y});
      }
    }
    if (h.coeffs[0] != 0) {
      for (const Rational& y : {by0, by1}) {
        const Rational x = (h.rhs - h.coeffs[1] * y) / h.coeffs[0];
        if (x >= bx0 && x <= bx1) hits.insert({x, y});
      }
    }
    if (hits.size() < 2) continue;  // touches the box in at most a corner
    const auto& a = *hits.begin();
    const auto& b = *hits.rbegin();
    svg << "  <line class=\"line\" x1=\"" << X(a.first) << "\" y1=\"" << Y(a.second) << "\" x2=\""
        << X(b.first) << "\" y2=\"" << Y(b.second) << "\"/>\n";
  }

  // external edges on top
  for (const auto& edge : analysis.external_facets()) {
    const auto ends = render_detail::face_vertices(analysis, edge);
    if (ends.size() != 2) throw std::logic_error("render_svg: external edge without two endpoints");
    svg << "  <line class=\"external\" x1=\"" << X(ends[0]->point[0]) << "\" y1=\""
        << Y(ends[0]->point[1]) << "\" x2=\"" << X(ends[1]->point[0]) << "\" y2=\""
        << Y(ends[1]->point[1]) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// OFF mesh of the envelope: external vertices, then one polygon per
// external facet, outward-oriented (counterclockwise seen from outside
// the facet's bounded cell).
inline std::string render_envelope_off(const Arrangement& arr) {
  if (arr.dim != 3) throw std::invalid_argument("render_envelope_off: needs d=3");
  EnvelopeAnalysis analysis(arr);
  using render_detail::fmt;
  using render_detail::to_double;

  std::map<SignVector, const Vertex*> vertex_by_sign;
  for (const auto& v : analysis.vertices()) vertex_by_sign.emplace(v.sign, &v);

  const auto& external_vertices = analysis.external_faces(0);
  std::map<SignVector, int> index;
  std::vector<const Vertex*> ordered;
  for (const auto& sv : external_vertices) {
    index.emplace(sv, static_cast<int>(ordered.size()));
    ordered.push_back(vertex_by_sign.at(sv));
  }

  const auto& facets = analysis.external_facets();
  const long long f1 = static_cast<long long>(analysis.external_faces(1).size());

  std::ostringstream off;
  off << "OFF\n";
  off << ordered.size() << " " << facets.size() << " " << f1 << "\n";
  for (const auto* v : ordered)
    off << fmt(to_double(v->point[0])) << " " << fmt(to_double(v->point[1])) << " "
        << fmt(to_double(v->point[2])) << "\n";

  for (const auto& facet : facets) {
    const auto corners = render_detail::face_vertices(analysis, facet);
    // exact 2D frame on the facet's plane: drop the coordinate with the
    // largest |normal coefficient|
    const int plane = facet.zero_positions().front();
    const auto& normal = arr.hyperplanes[static_cast<std::size_t>(plane)].coeffs;
    int drop = 0;
    for (int j = 1; j < 3; ++j)
      if (abs(normal[static_cast<std::size_t>(j)]) > abs(normal[static_cast<std::size_t>(drop)])) drop = j;
    int u = -1, v = -1;
    for (int j = 0; j < 3; ++j) {
      if (j == drop) continue;
      (u < 0 ? u : v) = j;
    }
    std::vector<std::array<Rational, 2>> flat;
    flat.reserve(corners.size());
    for (const auto* c : corners)
      flat.push_back({c->point[static_cast<std::size_t>(u)], c->point[static_cast<std::size_t>(v)]});
    std::vector<std::size_t> cycle = render_detail::convex_cycle_order(flat);

    // orient away from the bounded side
    const auto [above, below] = adjacent_cells(facet);
    const SignVector& inside = analysis.bounded(above) ? above : below;
    Point interior(3, Rational(0));
    {
      const auto cell_vertices = render_detail::face_vertices(analysis, inside);
      for (const auto* cv : cell_vertices)
        for (int j = 0; j < 3; ++j) interior[static_cast<std::size_t>(j)] += cv->point[static_cast<std::size_t>(j)];
      const Rational m(cell_vertices.size());
      for (int j = 0; j < 3; ++j) interior[static_cast<std::size_t>(j)] /= m;
    }
    const Point& p0 = corners[cycle[0]]->point;
    const Point& p1 = corners[cycle[1]]->point;
    const Point& p2 = corners[cycle[2]]->point;
    Point e1(3), e2(3), to_interior(3);
    for (int j = 0; j < 3; ++j) {
      e1[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j)] - p0[static_cast<std::size_t>(j)];
      e2[static_cast<std::size_t>(j)] = p2[static_cast<std::size_t>(j)] - p0[static_cast<std::size_t>(j)];
      to_interior[static_cast<std::size_t>(j)] = interior[static_cast<std::size_t>(j)] - p0[static_cast<std::size_t>(j)];
    }
    const Point cross{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                      e1[0] * e2[1] - e1[1] * e2[0]};
    if (dot(cross, to_interior) > 0) std::reverse(cycle.begin(), cycle.end());

    off << cycle.size();
    for (const std::size_t i : cycle) off << " " << index.at(corners[i]->sign);
    off << "\n";
  }
  return off.str();
}

}  // namespace envelopes
