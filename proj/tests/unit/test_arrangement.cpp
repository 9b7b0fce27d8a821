#include "envelopes/arrangement.hpp"

#include "envelopes/generators.hpp"
#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace envelopes;
using namespace envelopes::test_support;

TEST_CASE("guardrails") {
  CHECK_NOTHROW(enforce_size_guardrails(2, 24));
  CHECK_NOTHROW(enforce_size_guardrails(3, 16));
  CHECK_THROWS_AS(enforce_size_guardrails(2, 25), GuardrailError);
  CHECK_THROWS_AS(enforce_size_guardrails(3, 17), GuardrailError);
  CHECK_THROWS_AS(enforce_size_guardrails(1, 3), GuardrailError);
  CHECK_THROWS_AS(enforce_size_guardrails(4, 5), GuardrailError);
}

TEST_CASE("sign vectors") {
  const SignVector s("0+-");
  CHECK(s.size() == 3);
  CHECK(s.zero_count() == 1);
  CHECK(s.zero_positions() == std::vector<int>{0});
  CHECK(s.with(0, '+').str() == "++-");
  CHECK(s.str() == "0+-");
  CHECK(SignVector("0+-") < SignVector("00-"));  // lexicographic over chars: '+' < '0'
  CHECK_THROWS_AS(SignVector("0+x"), std::invalid_argument);
}

TEST_CASE("the triangle is simple with the expected vertices") {
  const Arrangement arr = triangle();
  CHECK(check_simple(arr).ok());
  const auto vertices = enumerate_vertices(arr);
  REQUIRE(vertices.size() == 3);
  CHECK(vertices[0].defining == std::vector<int>{0, 1});
  CHECK(vertices[0].point == Point{Rational(0), Rational(0)});
  CHECK(vertices[0].sign.str() == "00-");
  CHECK(vertices[1].defining == std::vector<int>{0, 2});
  CHECK(vertices[1].point == Point{Rational(0), Rational(1)});
  CHECK(vertices[1].sign.str() == "0+0");
  CHECK(vertices[2].defining == std::vector<int>{1, 2});
  CHECK(vertices[2].point == Point{Rational(1), Rational(0)});
  CHECK(vertices[2].sign.str() == "+00");
}

TEST_CASE("triangle face counts: 3 vertices, 9 edges, 7 cells") {
  const Arrangement arr = triangle();
  CHECK(enumerate_faces(arr, 0).size() == 3);
  CHECK(enumerate_faces(arr, 1).size() == 9);
  CHECK(enumerate_faces(arr, 2).size() == 7);
  // of the 8 zero-free sign patterns exactly one is infeasible
  CHECK_FALSE(is_feasible(face_membership_system(arr, SignVector("--+"))));
  CHECK(enumerate_faces(arr, 2).count(SignVector("--+")) == 0);
}

TEST_CASE("simplicity issues are detected and collected") {
  // parallel pair
  const auto parallel = check_simple(make_arrangement(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}));
  REQUIRE(parallel.issues.size() == 1);
  CHECK(parallel.issues[0].kind == SimplicityIssue::Kind::singular_subset);
  CHECK(parallel.issues[0].subset == std::vector<int>{0, 1});

  // three concurrent lines: two coincidence reports against the first pair
  const auto concurrent = check_simple(make_arrangement(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  REQUIRE(concurrent.issues.size() == 2);
  for (const auto& issue : concurrent.issues)
    CHECK(issue.kind == SimplicityIssue::Kind::coincident_points);

  const auto zero_row = check_simple(make_arrangement(2, {{1, 0, 0}, {0, 0, 5}, {0, 1, 0}}));
  REQUIRE(zero_row.issues.size() == 1);
  CHECK(zero_row.issues[0].kind == SimplicityIssue::Kind::invalid_hyperplane);
  CHECK(zero_row.issues[0].subset == std::vector<int>{1});

  const auto too_few = check_simple(make_arrangement(2, {{1, 0, 0}, {0, 1, 0}}));
  REQUIRE(too_few.issues.size() == 1);
  CHECK(too_few.issues[0].kind == SimplicityIssue::Kind::too_few_hyperplanes);

  CHECK_THROWS_AS(require_simple(make_arrangement(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}})),
                  NotSimpleError);
}

TEST_CASE("subface relation and adjacent cells") {
  CHECK(is_subface(SignVector("00-"), SignVector("0+-")));
  CHECK(is_subface(SignVector("0+-"), SignVector("0+-")));
  CHECK_FALSE(is_subface(SignVector("00-"), SignVector("0-+")));
  CHECK_FALSE(is_subface(SignVector("+0-"), SignVector("-0-")));
  CHECK_THROWS_AS(is_subface(SignVector("0+"), SignVector("0+-")), std::invalid_argument);

  const auto [above, below] = adjacent_cells(SignVector("0+-"));
  CHECK(above.str() == "++-");
  CHECK(below.str() == "-+-");
  CHECK_THROWS_AS(adjacent_cells(SignVector("00-")), std::invalid_argument);
  CHECK_THROWS_AS(adjacent_cells(SignVector("++-")), std::invalid_argument);
}

TEST_CASE("boundedness of triangle faces") {
  const Arrangement arr = triangle();
  // the three edges of the central triangle are bounded
  for (const char* edge : {"0+-", "+0-", "++0"}) {
    CHECK(is_bounded_face(arr, SignVector(edge)));
    CHECK(is_bounded_face_by_projection(arr, SignVector(edge)));
  }
  // rays and outer cells are not
  for (const char* face : {"0--", "0++", "-+-", "+++"}) {
    CHECK_FALSE(is_bounded_face(arr, SignVector(face)));
    CHECK_FALSE(is_bounded_face_by_projection(arr, SignVector(face)));
  }
  CHECK(is_bounded_face(arr, SignVector("++-")));  // the central cell
  // vertices are bounded
  CHECK(is_bounded_face(arr, SignVector("00-")));
}

TEST_CASE("every vertex sign vector has exactly d zeros") {
  for (const auto& arr :
       {random_simple_arrangement(2, 7, 11, 60), random_simple_arrangement(2, 5, 12, 60)}) {
    for (const auto& v : enumerate_vertices(arr)) {
      CHECK(v.sign.zero_count() == 2);
      CHECK(v.sign.zero_positions() == v.defining);
      // the point really lies on its defining lines
      for (int i : v.defining)
        CHECK(evaluate(arr.hyperplanes[static_cast<std::size_t>(i)], v.point) == 0);
    }
  }
}

TEST_CASE("face enumeration equals the 3^n brute-force scan (2D)") {
  const auto cases = {triangle(), paper_line_arrangement(4), paper_line_arrangement(6),
                      random_simple_arrangement(2, 5, 31, 40),
                      random_simple_arrangement(2, 8, 5, 50)};
  for (const auto& arr : cases) {
    for (int k = 0; k <= 2; ++k) {
      INFO("n=" << arr.size() << ", k=" << k);
      CHECK(enumerate_faces(arr, k) == brute_force_faces_with_vertex(arr, k));
    }
  }
}

TEST_CASE("face enumeration equals the 3^n brute-force scan (3D)") {
  const auto cases = {simplex(), paper_plane_arrangement(5),
                      random_simple_arrangement(3, 5, 17, 30),
                      random_simple_arrangement(3, 6, 9, 30)};
  for (const auto& arr : cases) {
    for (int k = 0; k <= 3; ++k) {
      INFO("n=" << arr.size() << ", k=" << k);
      CHECK(enumerate_faces(arr, k) == brute_force_faces_with_vertex(arr, k));
    }
  }
}

TEST_CASE("the two boundedness routes agree on every face") {
  const auto cases2 = {triangle(), paper_line_arrangement(5),
                       random_simple_arrangement(2, 6, 23, 40)};
  for (const auto& arr : cases2) {
    EnvelopeAnalysis analysis(arr);
    for (const auto& f : all_faces(analysis)) {
      INFO("face " << f.str());
      CHECK(is_bounded_face(arr, f) == is_bounded_face_by_projection(arr, f));
    }
  }
  const auto cases3 = {simplex(), random_simple_arrangement(3, 5, 29, 30)};
  for (const auto& arr : cases3) {
    EnvelopeAnalysis analysis(arr);
    for (const auto& f : all_faces(analysis)) {
      INFO("face " << f.str());
      CHECK(is_bounded_face(arr, f) == is_bounded_face_by_projection(arr, f));
    }
  }
}

TEST_CASE("face counts follow the simple-arrangement formulas") {
  for (int n : {4, 5, 6, 7}) {
    const Arrangement arr = paper_line_arrangement(n);
    CHECK(Int(enumerate_faces(arr, 0).size()) == binomial(n, 2));
  }
  for (int n : {5, 6}) {
    const Arrangement arr = paper_plane_arrangement(n);
    CHECK(Int(enumerate_faces(arr, 0).size()) == binomial(n, 3));
  }
}

TEST_CASE("enumerate_faces validates k") {
  CHECK_THROWS_AS(enumerate_faces(triangle(), 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_faces(triangle(), -1), std::invalid_argument);
}
