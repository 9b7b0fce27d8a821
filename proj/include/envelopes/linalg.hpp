#pragma once

// Small exact linear algebra: dot products and dense square solves. The
// systems here are at most 3x3, so plain Gaussian elimination over the
// rationals is the whole story.

#include "envelopes/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace envelopes {

using Matrix = std::vector<std::vector<Rational>>;

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Solves A x = b exactly. Returns the unique solution, or nullopt when A
// is singular. Pivoting just takes the first nonzero entry in the column;
// with exact arithmetic there is nothing to stabilize.
inline std::optional<Point> solve_square_system(Matrix a, Point b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_square_system: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_square_system: matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  Point x(n, Rational(0));
  for (std::size_t row = n; row-- > 0;) {
    Rational acc = b[row];
    for (std::size_t j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

}  // namespace envelopes
