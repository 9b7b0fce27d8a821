#include "envelopes/feasibility.hpp"

#include "envelopes/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace envelopes;

namespace {

LinearConstraint c1(long long a, long long rhs, Relation rel) {
  return {{Rational(a)}, Rational(rhs), rel};
}

LinearConstraint c2(long long a, long long b, long long rhs, Relation rel) {
  return {{Rational(a), Rational(b)}, Rational(rhs), rel};
}

}  // namespace

TEST_CASE("one-variable systems") {
  CHECK(is_feasible({1, {c1(1, 0, Relation::ge), c1(1, 1, Relation::ge)}}));
  CHECK_FALSE(is_feasible({1, {c1(1, 0, Relation::ge), c1(-1, 0, Relation::gt)}}));
  // boundary point: x >= 1 and x <= 1 meets exactly at 1
  CHECK(is_feasible({1, {c1(1, 1, Relation::ge), c1(-1, -1, Relation::ge)}}));
  // either side strict kills the single point
  CHECK_FALSE(is_feasible({1, {c1(1, 1, Relation::gt), c1(-1, -1, Relation::ge)}}));
  CHECK_FALSE(is_feasible({1, {c1(1, 1, Relation::ge), c1(-1, -1, Relation::gt)}}));
  CHECK(is_feasible({1, {c1(1, 1, Relation::eq)}}));
  CHECK_FALSE(is_feasible({1, {c1(1, 1, Relation::eq), c1(1, 2, Relation::eq)}}));
}

TEST_CASE("two-variable systems with equalities and strict rows") {
  // open triangle interior: x > 0, y > 0, x + y = 1
  CHECK(is_feasible({2, {c2(1, 0, 0, Relation::gt), c2(0, 1, 0, Relation::gt), c2(1, 1, 1, Relation::eq)}}));
  // same but require x >= 1 too: only (1, 0) satisfies the equality, and y > 0 fails
  CHECK_FALSE(is_feasible({2, {c2(1, 0, 1, Relation::ge), c2(0, 1, 0, Relation::gt), c2(1, 1, 1, Relation::eq)}}));
  // unbounded wedge
  CHECK(is_feasible({2, {c2(1, -1, 0, Relation::gt), c2(1, 1, 5, Relation::ge)}}));
}

TEST_CASE("zero rows decide immediately") {
  CHECK(is_feasible({2, {c2(0, 0, -1, Relation::ge)}}));   // 0 >= -1
  CHECK(is_feasible({2, {c2(0, 0, 0, Relation::ge)}}));    // 0 >= 0
  CHECK_FALSE(is_feasible({2, {c2(0, 0, 0, Relation::gt)}}));   // 0 > 0
  CHECK_FALSE(is_feasible({2, {c2(0, 0, 1, Relation::ge)}}));   // 0 >= 1
  CHECK(is_feasible({2, {c2(0, 0, 0, Relation::eq)}}));
  CHECK_FALSE(is_feasible({2, {c2(0, 0, 1, Relation::eq)}}));
}

TEST_CASE("an empty system is feasible") {
  CHECK(is_feasible({2, {}}));
  CHECK(is_feasible({3, {}}));
}

TEST_CASE("infeasibility can hide behind an eliminated variable") {
  // y <= 0, y >= 1 linked through x: x >= y + 1, x <= y  =>  empty
  CHECK_FALSE(is_feasible({2, {c2(1, -1, 1, Relation::ge), c2(-1, 1, 0, Relation::ge)}}));
}

TEST_CASE("constraint dimension mismatch throws") {
  CHECK_THROWS_AS(is_feasible({2, {c1(1, 0, Relation::ge)}}), std::invalid_argument);
}

TEST_CASE("project_to_coordinate reports interval shape") {
  // box: 0 <= x <= 2, 1 <= y <= 5
  const LinearSystem box{2,
                         {c2(1, 0, 0, Relation::ge), c2(-1, 0, -2, Relation::ge),
                          c2(0, 1, 1, Relation::ge), c2(0, -1, -5, Relation::ge)}};
  for (int j : {0, 1}) {
    const auto shadow = project_to_coordinate(box, j);
    CHECK(shadow.feasible);
    CHECK(shadow.has_lower);
    CHECK(shadow.has_upper);
  }

  // quadrant: unbounded above in both coordinates
  const LinearSystem quadrant{2, {c2(1, 0, 0, Relation::ge), c2(0, 1, 0, Relation::ge)}};
  for (int j : {0, 1}) {
    const auto shadow = project_to_coordinate(quadrant, j);
    CHECK(shadow.feasible);
    CHECK(shadow.has_lower);
    CHECK_FALSE(shadow.has_upper);
  }

  // diagonal strip x - y = 0: each coordinate alone is unbounded both ways
  const LinearSystem diag{2, {c2(1, -1, 0, Relation::eq)}};
  for (int j : {0, 1}) {
    const auto shadow = project_to_coordinate(diag, j);
    CHECK(shadow.feasible);
    CHECK_FALSE(shadow.has_lower);
    CHECK_FALSE(shadow.has_upper);
  }

  // a bound induced only through elimination: y >= x, y <= 1 bounds x above
  const LinearSystem induced{2, {c2(-1, 1, 0, Relation::ge), c2(0, -1, -1, Relation::ge)}};
  const auto shadow = project_to_coordinate(induced, 0);
  CHECK(shadow.feasible);
  CHECK(shadow.has_upper);
  CHECK_FALSE(shadow.has_lower);

  // empty interval detected on the kept coordinate
  const LinearSystem empty{1, {c1(1, 2, Relation::ge), c1(-1, -1, Relation::ge)}};
  CHECK_FALSE(project_to_coordinate(empty, 0).feasible);

  CHECK_THROWS_AS(project_to_coordinate(box, 2), std::invalid_argument);
  CHECK_THROWS_AS(project_to_coordinate(box, -1), std::invalid_argument);
}

TEST_CASE("projection feasibility agrees with is_feasible on random systems") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_int(0, 1));
    LinearSystem sys;
    sys.dim = dim;
    const int m = static_cast<int>(rng.next_int(1, 6));
    for (int i = 0; i < m; ++i) {
      LinearConstraint c;
      for (int j = 0; j < dim; ++j) c.coeffs.emplace_back(rng.next_int(-3, 3));
      c.rhs = Rational(rng.next_int(-4, 4));
      const long long kind = rng.next_int(0, 5);
      c.rel = kind == 0 ? Relation::eq : kind <= 3 ? Relation::ge : Relation::gt;
      sys.constraints.push_back(std::move(c));
    }
    const bool feasible = is_feasible(sys);
    for (int j = 0; j < dim; ++j) {
      INFO("trial " << trial << ", coordinate " << j);
      CHECK(project_to_coordinate(sys, j).feasible == feasible);
    }
  }
}
