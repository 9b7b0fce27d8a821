#pragma once

// Constructors for the explicit line/plane families with few external
// facets and for random simple arrangements. All randomness flows through
// one splitmix64 stream, and integers are drawn by modulo reduction, so
// identical parameters reproduce identical arrangements on every
// platform.

#include "envelopes/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace envelopes {

// splitmix64 (Vigna's constants), the de-facto standard 64-bit mixer.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [lo, hi] by modulo reduction. The bias is astronomically
  // small for the tiny ranges used here, and the mapping is portable.
  long long next_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }
};

// midpoint of the valid perturbation interval (0, 1/(n-3))
inline Rational default_epsilon_2d(int n) { return Rational(1, 2 * (n - 3)); }

// midpoint of the valid perturbation interval (0, 1/(n-4))
inline Rational default_epsilon_3d(int n) { return Rational(1, 2 * (n - 4)); }

// n >= 4 lines whose envelope has exactly 2(n-1) edges: the two axes, the
// near-concurrent lines h_k (k = 3..n-1) through (1+(k-3)e, 0) and
// (0, 1-(k-3)e), and a closing line h_n through (2, 0) and (0, 2+e),
// with 0 < e < 1/(n-3).
inline Arrangement paper_line_arrangement(int n, const Rational& epsilon) {
  if (n < 4) throw std::invalid_argument("paper_line_arrangement: n must be at least 4");
  if (!(epsilon > 0 && epsilon * (n - 3) < 1))
    throw std::invalid_argument("paper_line_arrangement: epsilon must satisfy 0 < epsilon < 1/(n-3)");
  Arrangement arr;
  arr.dim = 2;
  arr.hyperplanes.push_back({{Rational(0), Rational(1)}, Rational(0)});  // h1: the x1 axis
  arr.hyperplanes.push_back({{Rational(1), Rational(0)}, Rational(0)});  // h2: the x2 axis
  // line with x1-intercept p and x2-intercept q: q*x1 + p*x2 = p*q
  const auto through_intercepts = [](const Rational& p, const Rational& q) {
    return Hyperplane{{q, p}, p * q};
  };
  for (int k = 3; k <= n - 1; ++k) {
    const Rational shift = Rational(k - 3) * epsilon;
    arr.hyperplanes.push_back(through_intercepts(1 + shift, 1 - shift));
  }
  arr.hyperplanes.push_back(through_intercepts(Rational(2), 2 + epsilon));
  require_simple(arr);
  return arr;
}

inline Arrangement paper_line_arrangement(int n) {
  if (n < 4) throw std::invalid_argument("paper_line_arrangement: n must be at least 4");
  return paper_line_arrangement(n, default_epsilon_2d(n));
}

// n >= 5 planes whose envelope has exactly (n-4)(2n-3)+5 facets: the
// three coordinate planes, the near-concurrent planes h_k (k = 4..n-1)
// with axis intercepts (1+2(k-4)e, 1+(k-4)e, 1-(k-4)e), and a closing
// plane with intercepts (3, 2, 3+e), with 0 < e < 1/(n-4).
inline Arrangement paper_plane_arrangement(int n, const Rational& epsilon) {
  if (n < 5) throw std::invalid_argument("paper_plane_arrangement: n must be at least 5");
  if (!(epsilon > 0 && epsilon * (n - 4) < 1))
    throw std::invalid_argument("paper_plane_arrangement: epsilon must satisfy 0 < epsilon < 1/(n-4)");
  Arrangement arr;
  arr.dim = 3;
  arr.hyperplanes.push_back({{Rational(0), Rational(0), Rational(1)}, Rational(0)});  // h1: x3 = 0
  arr.hyperplanes.push_back({{Rational(0), Rational(1), Rational(0)}, Rational(0)});  // h2: x2 = 0
  arr.hyperplanes.push_back({{Rational(1), Rational(0), Rational(0)}, Rational(0)});  // h3: x1 = 0
  // plane with axis intercepts (p, q, r): q*r*x1 + p*r*x2 + p*q*x3 = p*q*r
  const auto through_intercepts = [](const Rational& p, const Rational& q, const Rational& r) {
    return Hyperplane{{q * r, p * r, p * q}, p * q * r};
  };
  for (int k = 4; k <= n - 1; ++k) {
    const Rational shift = Rational(k - 4) * epsilon;
    arr.hyperplanes.push_back(through_intercepts(1 + 2 * shift, 1 + shift, 1 - shift));
  }
  arr.hyperplanes.push_back(through_intercepts(Rational(3), Rational(2), 3 + epsilon));
  require_simple(arr);
  return arr;
}

inline Arrangement paper_plane_arrangement(int n) {
  if (n < 5) throw std::invalid_argument("paper_plane_arrangement: n must be at least 5");
  return paper_plane_arrangement(n, default_epsilon_3d(n));
}

// The first n planes of the (n+1)-plane construction above; n >= 4. Its
// envelope has exactly 2(n-2)(n-3) facets for n >= 5.
inline Arrangement cyclic_plane_arrangement(int n, const Rational& epsilon) {
  if (n < 4) throw std::invalid_argument("cyclic_plane_arrangement: n must be at least 4");
  Arrangement arr = paper_plane_arrangement(n + 1, epsilon);
  arr.hyperplanes.pop_back();
  return arr;
}

inline Arrangement cyclic_plane_arrangement(int n) {
  if (n < 4) throw std::invalid_argument("cyclic_plane_arrangement: n must be at least 4");
  return cyclic_plane_arrangement(n, default_epsilon_3d(n + 1));
}

namespace gen_detail {

inline Hyperplane random_hyperplane(SplitMix64& rng, int d, long long coord_bound) {
  Hyperplane h;
  h.coeffs.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) h.coeffs.emplace_back(rng.next_int(-coord_bound, coord_bound));
  h.rhs = Rational(rng.next_int(-coord_bound, coord_bound));
  return h;
}

// one wholesale draw; nullopt when the draw is degenerate or not simple
inline std::optional<Arrangement> try_random_arrangement(SplitMix64& rng, int d, int n,
                                                         long long coord_bound) {
  Arrangement arr;
  arr.dim = d;
  for (int i = 0; i < n; ++i) arr.hyperplanes.push_back(random_hyperplane(rng, d, coord_bound));
  for (const auto& h : arr.hyperplanes)
    if (!is_valid_hyperplane(h)) return std::nullopt;
  if (!check_simple(arr).ok()) return std::nullopt;
  return arr;
}

inline constexpr int kResampleBudget = 1000;

}  // namespace gen_detail

// Integer data uniform in [-coord_bound, coord_bound], resampled
// wholesale until simple. Deterministic in (d, n, seed, coord_bound).
inline Arrangement random_simple_arrangement(int d, int n, std::uint64_t seed, long long coord_bound) {
  enforce_size_guardrails(d, n);
  if (n < d + 1)
    throw std::invalid_argument("random_simple_arrangement: need n >= d+1 hyperplanes");
  if (coord_bound < 1)
    throw std::invalid_argument("random_simple_arrangement: coord_bound must be positive");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < gen_detail::kResampleBudget; ++attempt) {
    if (auto arr = gen_detail::try_random_arrangement(rng, d, n, coord_bound)) return std::move(*arr);
  }
  throw std::runtime_error("random_simple_arrangement: no simple arrangement in " +
                           std::to_string(gen_detail::kResampleBudget) + " attempts (d=" +
                           std::to_string(d) + ", n=" + std::to_string(n) +
                           ", coord_bound=" + std::to_string(coord_bound) + ")");
}

}  // namespace envelopes
