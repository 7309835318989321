#include "heightline/closed_forms.hpp"

#include <array>
#include <stdexcept>

namespace heightline {

namespace {

void check_ell_m(PrimeModulus p, std::int64_t ell, std::int64_t m) {
  if (!(1 <= ell && ell <= m && m <= p.value() - 1)) {
    throw std::domain_error("need 1 <= l <= m <= p-1, got l=" + std::to_string(ell) + " m=" + std::to_string(m) +
                            " p=" + std::to_string(p.value()));
  }
}

std::string show(const Rational& r) { return r.to_string(); }

}  // namespace

std::int64_t line_bound(std::int64_t a, PrimeModulus p, std::int64_t ell, std::int64_t m) {
  check_ell_m(p, ell, m);
  a = reduce_residue(a, p);
  const int128 am = static_cast<int128>(a) * m;
  const int128 lo = static_cast<int128>(ell - 1) * p.value();
  const int128 hi = static_cast<int128>(ell) * p.value();
  if (!(lo <= am)) {
    throw std::domain_error("line_bound: (l-1)p <= a*m fails for a=" + std::to_string(a));
  }
  if (!(am < hi)) {
    throw std::domain_error("line_bound: a*m < l*p fails for a=" + std::to_string(a));
  }
  return static_cast<std::int64_t>(am - lo + m);
}

Rational hyperbola_H(const Rational& x, PrimeModulus p, std::int64_t ell, std::int64_t m) {
  check_ell_m(p, ell, m);
  const Rational mp = Rational(static_cast<int128>(m) * p.value());
  const Rational gap = Rational(static_cast<int128>(ell) * p.value()) - Rational(m) * x;
  if (gap <= Rational(0)) {
    throw std::domain_error("hyperbola_H: x = " + show(x) + " is not below the pole l*p/m");
  }
  return gap - Rational(1) + mp / gap;
}

bool in_hyperbola_interval(std::int64_t a, PrimeModulus p, std::int64_t ell, std::int64_t m) {
  const int128 am = static_cast<int128>(a) * m;
  return static_cast<int128>(ell - 1) * p.value() < am && am < static_cast<int128>(ell) * p.value() - 1;
}

BoundWindow window_bound(PrimeModulus p, std::int64_t ell, std::int64_t m, const Rational& w) {
  check_ell_m(p, ell, m);
  if (!(Rational(m) < w)) {
    throw std::domain_error("window_bound: need m < w, got m=" + std::to_string(m) + " w=" + show(w));
  }
  if (!(w * w <= Rational(static_cast<int128>(m) * p.value()))) {
    throw std::domain_error("window_bound: need w^2 <= m*p, got w=" + show(w));
  }
  const Rational pr(p.value());
  const Rational center = Rational(static_cast<int128>(ell) * p.value(), m);
  return BoundWindow{
      .lo = center - pr / w,
      .hi = center - w / Rational(m),
      .bound = Rational(m) * pr / w + w - Rational(1),
      .ell = ell,
      .m = m,
      .w = w,
  };
}

std::int64_t height_p_minus_b(PrimeModulus p, std::int64_t b) {
  if (b < 1) throw std::domain_error("height_p_minus_b: b must be positive");
  const std::int64_t n = p.value();
  if (!(static_cast<int128>(n) > static_cast<int128>(b - 1) * (b - 1))) {
    throw HypothesisNotMetError("height_p_minus_b: needs p > (b-1)^2, got p=" + std::to_string(n) +
                                " b=" + std::to_string(b));
  }
  const std::int64_t r = n % b;
  const int128 num = static_cast<int128>(n) + static_cast<int128>(r) * (b - 1);
  if (num % b != 0) throw std::logic_error("height_p_minus_b: b does not divide p + r(b-1)");
  return static_cast<std::int64_t>(num / b);
}

std::int64_t height_half_p_minus_b(PrimeModulus p, std::int64_t b) {
  if (b < 1 || b % 2 == 0) {
    throw std::domain_error("height_half_p_minus_b: b must be an odd positive integer, got " + std::to_string(b));
  }
  const std::int64_t n = p.value();
  if (b == 1) return (n + 1) / 2;
  if (!(static_cast<int128>(n) > static_cast<int128>(b - 1) * (b - 1))) {
    throw HypothesisNotMetError("height_half_p_minus_b: needs p > (b-1)^2, got p=" + std::to_string(n) +
                                " b=" + std::to_string(b));
  }
  const std::int64_t r = static_cast<std::int64_t>((static_cast<int128>(n) + b) % (2 * b));
  // p/b + (b-2)r/(2b) = (2p + (b-2)r) / 2b
  const int128 num = 2 * static_cast<int128>(n) + static_cast<int128>(b - 2) * r;
  if (num % (2 * b) != 0) throw std::logic_error("height_half_p_minus_b: 2b does not divide 2p + (b-2)r");
  return static_cast<std::int64_t>(num / (2 * b));
}

std::string to_string(PeakClass c) {
  switch (c) {
    case PeakClass::A1: return "A1";
    case PeakClass::A2: return "A2";
    case PeakClass::A3: return "A3";
    case PeakClass::NonPeak: return "NonPeak";
  }
  return "?";
}

PeakClassification classify_peak(std::int64_t a, PrimeModulus p) {
  const std::int64_t n = p.value();
  if (n < kPeakTheoremMinPrime) {
    throw HypothesisNotMetError("classify_peak: needs p >= 17, got p=" + std::to_string(n));
  }
  a = reduce_residue(a, p);
  const bool one_mod_3 = n % 3 == 1;

  struct Member {
    std::int64_t a;
    PeakClass cls;
    std::int64_t value;
  };
  const std::int64_t third_low = one_mod_3 ? (n + 2) / 3 : (n + 1) / 3;
  const std::int64_t third_high = one_mod_3 ? (n + 2) / 3 : (n + 4) / 3;
  const std::array<Member, 7> members{{
      {n - 1, PeakClass::A1, n},
      {n / 2, PeakClass::A2, (n + 1) / 2},
      {n - 2, PeakClass::A2, (n + 1) / 2},
      {n / 3, PeakClass::A3, third_low},
      {(n - 3) / 2, PeakClass::A3, third_low},
      {2 * n / 3, PeakClass::A3, third_high},
      {n - 3, PeakClass::A3, third_high},
  }};

  const Member* hit = nullptr;
  for (const auto& mem : members) {
    if (mem.a != a) continue;
    if (hit != nullptr) {
      throw std::logic_error("classify_peak: peak sets overlap at a=" + std::to_string(a));
    }
    hit = &mem;
  }
  if (hit == nullptr) return {a, PeakClass::NonPeak, n / 3};
  return {a, hit->cls, hit->value};
}

}  // namespace heightline
