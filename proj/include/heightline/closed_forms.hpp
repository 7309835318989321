#pragma once

// Closed-form bounds and exact values for the line height h(a).
//
// Everything here is exact: interval endpoints, bounds and strict
// comparisons are decided with integer cross-multiplication or Rational.
// Each function states a guarantee about h(a) that the test suites check
// against the naive oracle.

#include <cstdint>
#include <optional>
#include <string>

#include "heightline/modular.hpp"
#include "heightline/rational.hpp"

namespace heightline {

/// Linear bound for (l-1)p/m <= a < lp/m, 1 <= l <= m <= p-1:
/// h(a) <= m*a - (l-1)*p + m.
std::int64_t line_bound(std::int64_t a, PrimeModulus p, std::int64_t ell, std::int64_t m);

/// H(x) = l*p - m*x - 1 + m*p / (l*p - m*x), defined for x < l*p/m.
/// For integer a with (l-1)p/m < a < (lp-1)/m, h(a) < H(a).
Rational hyperbola_H(const Rational& x, PrimeModulus p, std::int64_t ell, std::int64_t m);

/// True when integer a lies strictly inside the interval where h(a) < H(a) is guaranteed.
bool in_hyperbola_interval(std::int64_t a, PrimeModulus p, std::int64_t ell, std::int64_t m);

struct BoundWindow {
  Rational lo;
  Rational hi;
  Rational bound;
  std::int64_t ell;
  std::int64_t m;
  std::optional<Rational> w;

  /// Smallest and largest integer a inside [lo, hi]; first > last when empty.
  std::int64_t first_integer() const { return static_cast<std::int64_t>(lo.ceil()); }
  std::int64_t last_integer() const { return static_cast<std::int64_t>(hi.floor()); }
  bool contains(std::int64_t a) const { return lo <= Rational(a) && Rational(a) <= hi; }
};

/// Window [lp/m - p/w, lp/m - w/m] on which h(a) < m*p/w + w - 1,
/// for m < w and w^2 <= m*p.
BoundWindow window_bound(PrimeModulus p, std::int64_t ell, std::int64_t m, const Rational& w);

/// Exact h(p - b) = (p + r(b-1)) / b with r = p mod b, when p > (b-1)^2.
std::int64_t height_p_minus_b(PrimeModulus p, std::int64_t b);

/// Exact h((p - b)/2) for odd b: (p+1)/2 when b = 1, otherwise
/// p/b + (b-2)r/(2b) with r = (p+b) mod 2b, when p > (b-1)^2.
std::int64_t height_half_p_minus_b(PrimeModulus p, std::int64_t b);

enum class PeakClass { A1, A2, A3, NonPeak };

std::string to_string(PeakClass c);

struct PeakClassification {
  std::int64_t a;
  PeakClass cls;
  /// Exact height for A1/A2/A3; the tail bound floor(p/3) for NonPeak.
  std::int64_t predicted;

  friend bool operator==(const PeakClassification&, const PeakClassification&) = default;
};

/// Smallest prime accepted by classify_peak.
inline constexpr std::int64_t kPeakTheoremMinPrime = 17;

/// Classifies a against the peak sets
///   A1 = {p-1}, A2 = {[p/2], p-2}, A3 = {[p/3], (p-3)/2, [2p/3], p-3}
/// and predicts h(a) (or the tail bound 3h(a) <= p). Requires p >= 17.
/// The tail bound does not hold at p = 19 (a = 14, 15) or p = 23 (a = 17, 19);
/// it holds for every other prime up to 3000.
PeakClassification classify_peak(std::int64_t a, PrimeModulus p);

}  // namespace heightline
