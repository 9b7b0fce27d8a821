#pragma once

// Exact rational scalars and points. Every geometric quantity in this
// library is an arbitrary-precision rational kept in canonical form
// (gcd(|num|, den) = 1, den > 0), so equality is structural and no
// tolerance appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace envelopes {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A d-tuple of exact coordinates; length equals the owning arrangement's
// dimension.
using Point = std::vector<Rational>;

inline int sign_of(const Rational& x) { return x.sign(); }

// Text syntax accepted everywhere: "p" or "p/q" with an optional leading
// '-', digits only otherwise, q > 0. Unreduced input is fine; the result
// is canonical.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&](const char* why) -> Rational {
    throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s;
  std::string_view den;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den)) return fail("denominator must be a positive integer");
  }
  if (!all_digits(num)) return fail("expected digits");
  const Int p{std::string(num)};
  const Int q = den.empty() ? Int(1) : Int{std::string(den)};
  if (q == 0) return fail("zero denominator");
  const Rational r(p, q);
  return negative ? Rational(-r) : r;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  std::string out = num.str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  // multiply in an order that keeps every partial product integral
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace envelopes
