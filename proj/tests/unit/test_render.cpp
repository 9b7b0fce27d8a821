#include "envelopes/render.hpp"

#include "envelopes/generators.hpp"

#include "../support/formats.hpp"
#include "../support/oracles.hpp"

#include <algorithm>
#include <set>

#include <catch_amalgamated.hpp>

using namespace envelopes;
using namespace envelopes::test_support;

TEST_CASE("triangle svg has one clipped line per input line") {
  const std::string svg = render_svg(triangle());
  CHECK(xml_well_formed(svg));
  CHECK(count_occurrences(svg, "class=\"line\"") == 3);
  CHECK(count_occurrences(svg, "class=\"external\"") == 3);
  CHECK(count_occurrences(svg, "<polygon") == 0);
  CHECK(svg.rfind("<?xml", 0) == 0);

  SvgOptions shaded;
  shaded.shade_bounded_cells = true;
  const std::string with_cells = render_svg(triangle(), shaded);
  CHECK(xml_well_formed(with_cells));
  CHECK(count_occurrences(with_cells, "class=\"cell\"") == 1);  // one bounded cell
}

TEST_CASE("seven-line svg strokes every external edge") {
  const std::string svg = render_svg(paper_line_arrangement(7));
  CHECK(xml_well_formed(svg));
  CHECK(count_occurrences(svg, "class=\"line\"") == 7);
  CHECK(count_occurrences(svg, "class=\"external\"") == 12);

  SvgOptions shaded;
  shaded.shade_bounded_cells = true;
  const std::string with_cells = render_svg(paper_line_arrangement(7), shaded);
  CHECK(count_occurrences(with_cells, "class=\"cell\"") == 15);  // C(n-1, 2)
}

TEST_CASE("svg output is byte-deterministic") {
  const Arrangement arr = random_simple_arrangement(2, 6, 12, 50);
  CHECK(render_svg(arr) == render_svg(arr));
}

TEST_CASE("renderers reject the wrong dimension") {
  CHECK_THROWS_AS(render_svg(simplex()), std::invalid_argument);
  CHECK_THROWS_AS(render_envelope_off(triangle()), std::invalid_argument);
}

TEST_CASE("simplex envelope is a consistently wound tetrahedron") {
  const std::string off = render_envelope_off(simplex());
  const OffMesh mesh = parse_off(off);
  CHECK(mesh.header_vertices == 4);
  CHECK(mesh.header_faces == 4);
  CHECK(mesh.header_edges == 6);
  CHECK(distinct_edge_count(mesh) == 6);
  CHECK(mesh.header_vertices - mesh.header_edges + mesh.header_faces == 2);
  for (const auto& face : mesh.faces) CHECK(face.size() == 3);

  const std::set<std::array<double, 3>> coords(mesh.vertices.begin(), mesh.vertices.end());
  const std::set<std::array<double, 3>> expected{
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(coords == expected);

  // single bounded cell, so outward orientation must be globally
  // consistent: every directed edge appears exactly once, paired with its
  // reverse
  std::set<std::pair<int, int>> directed;
  for (const auto& face : mesh.faces)
    for (std::size_t t = 0; t < face.size(); ++t) {
      const auto edge = std::make_pair(face[t], face[(t + 1) % face.size()]);
      CHECK(directed.insert(edge).second);
    }
  for (const auto& [a, b] : directed) CHECK(directed.count({b, a}) == 1);
}

TEST_CASE("six-plane envelope mesh matches its face counts") {
  const std::string off = render_envelope_off(paper_plane_arrangement(6));
  const OffMesh mesh = parse_off(off);
  CHECK(mesh.header_vertices == 20);
  CHECK(mesh.header_faces == 23);
  CHECK(mesh.header_edges == 41);
  CHECK(distinct_edge_count(mesh) == 41);
  CHECK(mesh.header_vertices - mesh.header_edges + mesh.header_faces == 2);
  for (const auto& face : mesh.faces) CHECK(face.size() >= 3);
  CHECK(render_envelope_off(paper_plane_arrangement(6)) == off);
}
