#include "heightline/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "heightline/closed_forms.hpp"

namespace heightline {

unsigned default_worker_count() {
  if (const char* env = std::getenv("HEIGHTLINE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Spectrum compute_spectrum(PrimeModulus p, HeightMethod method, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t n = p.value();
  Spectrum s{.p = p, .heights = std::vector<HeightRecord>(static_cast<std::size_t>(n)), .method = method};

  if (workers == 0) workers = default_worker_count();
  // Small spectra are not worth a thread.
  const std::int64_t min_chunk = method == HeightMethod::naive ? 64 : 4096;
  const auto shards = static_cast<std::int64_t>(std::clamp<std::int64_t>(n / min_chunk, 1, workers));

  auto fill = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t a = lo; a < hi; ++a) s.heights[static_cast<std::size_t>(a)] = line_height(a, p, method);
  };
  if (shards == 1) {
    fill(0, n);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    // Interleaved blocks balance the naive scan, whose cost is flat in a.
    for (std::int64_t t = 0; t < shards; ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t lo = t * min_chunk; lo < n; lo += shards * min_chunk) fill(lo, std::min(n, lo + min_chunk));
      });
    }
  }
  s.compute_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return s;
}

std::vector<Peak> extract_peaks(const Spectrum& s, std::int64_t b) {
  if (b < 1) throw std::domain_error("extract_peaks: b must be positive");
  const std::int64_t n = s.p.value();
  std::vector<Peak> peaks;
  for (const auto& rec : s.heights) {
    // At b = 1 the top tier h = p is included.
    const int128 scaled = static_cast<int128>(b) * rec.h;
    if (scaled > n || (b == 1 && scaled == n)) peaks.push_back({rec.a, rec.h});
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& x, const Peak& y) {
    return x.h != y.h ? x.h > y.h : x.a < y.a;
  });
  return peaks;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "?";
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::pass: return "pass";
    case Overall::fail: return "fail";
    case Overall::skipped: return "skipped";
  }
  return "?";
}

namespace {

Check make_check(std::string name, const std::vector<std::string>& failures, std::string ok_detail = {}) {
  if (failures.empty()) return {std::move(name), CheckStatus::pass, std::move(ok_detail)};
  std::string detail = failures.front();
  if (failures.size() > 1) detail += " (+" + std::to_string(failures.size() - 1) + " more)";
  return {std::move(name), CheckStatus::fail, std::move(detail)};
}

std::string at(std::int64_t a, std::int64_t h) { return "h(" + std::to_string(a) + ")=" + std::to_string(h); }

void theorem_checks(const Spectrum& s, std::vector<Check>& out) {
  const std::int64_t n = s.p.value();
  const char* names[] = {"A1 height is p", "A2 height is (p+1)/2", "2h <= p off A1,A2", "A3 heights match case table",
                         "3h <= p off A1,A2,A3"};
  if (n < kPeakTheoremMinPrime) {
    for (const char* name : names) out.push_back({name, CheckStatus::hypothesis_not_met, "requires p >= 17"});
    return;
  }
  std::vector<std::string> f[5];
  for (std::int64_t a = 0; a < n; ++a) {
    const std::int64_t h = s.h(a);
    const PeakClassification c = classify_peak(a, s.p);
    switch (c.cls) {
      case PeakClass::A1:
        if (h != n) f[0].push_back(at(a, h) + " != p");
        break;
      case PeakClass::A2:
        if (h != (n + 1) / 2) f[1].push_back(at(a, h) + " != (p+1)/2");
        break;
      case PeakClass::A3:
        if (2 * h > n) f[2].push_back(at(a, h) + " exceeds p/2");
        if (h != c.predicted) f[3].push_back(at(a, h) + " != predicted " + std::to_string(c.predicted));
        break;
      case PeakClass::NonPeak:
        if (2 * h > n) f[2].push_back(at(a, h) + " exceeds p/2");
        if (3 * h > n) f[4].push_back(at(a, h) + " exceeds p/3");
        break;
    }
  }
  for (int i = 0; i < 5; ++i) out.push_back(make_check(names[i], f[i]));
}

void closed_form_checks(const Spectrum& s, std::vector<Check>& out) {
  const std::int64_t n = s.p.value();
  std::vector<std::string> fail_b, fail_half;
  int ran_b = 0, ran_half = 0;
  for (std::int64_t b = 1; b <= 9; ++b) {
    if (n > (b - 1) * (b - 1) && b < n) {
      ++ran_b;
      const std::int64_t v = height_p_minus_b(s.p, b);
      if (v != s.h(n - b)) {
        fail_b.push_back("b=" + std::to_string(b) + ": formula " + std::to_string(v) + " vs " + at(n - b, s.h(n - b)));
      }
    }
    if (b % 2 == 1 && (b == 1 || n > (b - 1) * (b - 1))) {
      ++ran_half;
      const std::int64_t v = height_half_p_minus_b(s.p, b);
      const std::int64_t a = (n - b) / 2;
      if (v != s.h(a)) {
        fail_half.push_back("b=" + std::to_string(b) + ": formula " + std::to_string(v) + " vs " + at(a, s.h(a)));
      }
    }
  }
  out.push_back(make_check("h(p-b) formula, b<=9", fail_b, std::to_string(ran_b) + " values of b"));
  out.push_back(make_check("h((p-b)/2) formula, odd b<=9", fail_half, std::to_string(ran_half) + " values of b"));
}

}  // namespace

VerificationReport verify_spectrum(const Spectrum& s) {
  VerificationReport r{.p = s.p, .checks = {}};
  theorem_checks(s, r.checks);
  closed_form_checks(s, r.checks);
  bool any_pass = false, any_fail = false;
  for (const auto& c : r.checks) {
    any_pass |= c.status == CheckStatus::pass;
    any_fail |= c.status == CheckStatus::fail;
  }
  r.overall = any_fail ? Overall::fail : any_pass ? Overall::pass : Overall::skipped;
  return r;
}

VerificationReport verify_theorems(PrimeModulus p, HeightMethod method) {
  return verify_spectrum(compute_spectrum(p, method));
}

std::string summarize(const VerificationReport& r) {
  std::string line = "p=" + std::to_string(r.p.value()) + " " + to_string(r.overall);
  int skipped = 0;
  for (const auto& c : r.checks) skipped += c.status == CheckStatus::hypothesis_not_met;
  line += " (" + std::to_string(r.checks.size() - static_cast<std::size_t>(skipped)) + " checks";
  if (skipped) line += ", " + std::to_string(skipped) + " hypothesis-not-met";
  line += ")";
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::fail) line += "; FAIL " + c.name + ": " + c.detail;
  }
  return line;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= hi; ++n) {
    if (is_odd_prime(n)) out.push_back(n);
  }
  return out;
}

ConjectureScan scan_conjecture(std::int64_t b, std::int64_t p_lo, std::int64_t p_hi) {
  if (b < 2) throw std::domain_error("scan_conjecture: b must be at least 2");
  if (p_lo > p_hi) throw std::domain_error("scan_conjecture: empty range");
  const std::vector<std::int64_t> primes = primes_in_range(p_lo, p_hi);
  if (primes.empty()) {
    throw std::domain_error("scan_conjecture: no odd primes in [" + std::to_string(p_lo) + ", " +
                            std::to_string(p_hi) + "]");
  }

  ConjectureScan scan{.b = b, .primes = {}};
  for (std::int64_t n : primes) {
    const Spectrum s = compute_spectrum(PrimeModulus(n));
    PrimeScan ps{.p = n, .buckets = {}, .residual_max = 0};
    for (std::int64_t j = 1; j <= b; ++j) ps.buckets.push_back({j, {}});
    for (const auto& rec : s.heights) {
      if (static_cast<int128>(b) * rec.h <= n) {
        ps.residual_max = std::max(ps.residual_max, rec.h);
        continue;
      }
      // Nearest p/j: minimize |h - p/j|, ties to the smaller j.
      std::int64_t best_j = 1;
      Rational best_off = Rational(rec.h) - Rational(n);
      for (std::int64_t j = 2; j <= b; ++j) {
        const Rational off = Rational(rec.h) - Rational(n, j);
        const Rational abs_off = off < Rational(0) ? -off : off;
        const Rational abs_best = best_off < Rational(0) ? -best_off : best_off;
        if (abs_off < abs_best) {
          best_j = j;
          best_off = off;
        }
      }
      ps.buckets[static_cast<std::size_t>(best_j - 1)].members.push_back({rec.a, rec.h, best_off});
    }
    scan.primes.push_back(std::move(ps));
  }
  return scan;
}

void print_scan(std::ostream& os, const ConjectureScan& scan) {
  os << "# b=" << scan.b << '\n';
  for (const auto& ps : scan.primes) {
    os << "p=" << ps.p << '\n';
    for (const auto& bucket : ps.buckets) {
      os << "  p/" << bucket.j << " (" << Rational(ps.p, bucket.j) << "): " << bucket.members.size() << " point(s)";
      for (const auto& m : bucket.members) os << "  a=" << m.a << " h=" << m.h << " offset=" << m.offset;
      os << '\n';
    }
    os << "  residual max (b*h <= p): " << ps.residual_max << '\n';
  }
}

}  // namespace heightline
