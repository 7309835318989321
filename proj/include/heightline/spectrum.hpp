#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heightline/height.hpp"
#include "heightline/rational.hpp"

namespace heightline {

/// Heights of every point of the projective line over F_p.
struct Spectrum {
  PrimeModulus p;
  /// heights[a] for a = 0..p-1.
  std::vector<HeightRecord> heights;
  /// Height of the point at infinity <0, 1>; always 1.
  std::int64_t infinity_height = 1;
  HeightMethod method = HeightMethod::fast;
  /// Wall time of the computation. Not part of the content: operator== ignores it.
  std::chrono::nanoseconds compute_time{0};

  std::int64_t h(std::int64_t a) const { return heights.at(static_cast<std::size_t>(a)).h; }

  friend bool operator==(const Spectrum& x, const Spectrum& y) {
    return x.p == y.p && x.heights == y.heights && x.infinity_height == y.infinity_height && x.method == y.method;
  }
};

/// Worker count for parallel sweeps: HEIGHTLINE_WORKERS if set and positive,
/// else the hardware concurrency.
unsigned default_worker_count();

/// Computes h(a) for every a = 0..p-1. Disjoint a-ranges are evaluated on
/// `workers` threads; the result does not depend on the partition.
Spectrum compute_spectrum(PrimeModulus p, HeightMethod method = HeightMethod::fast, unsigned workers = 0);

struct Peak {
  std::int64_t a;
  std::int64_t h;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// All a with b*h(a) > p (for b = 1, h(a) = p), sorted by descending h then ascending a.
std::vector<Peak> extract_peaks(const Spectrum& s, std::int64_t b);

enum class CheckStatus { pass, fail, hypothesis_not_met };
enum class Overall { pass, fail, skipped };

std::string to_string(CheckStatus s);
std::string to_string(Overall o);

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  PrimeModulus p;
  std::vector<Check> checks;
  /// fail iff any check failed; skipped when no check could run.
  Overall overall = Overall::skipped;
};

/// Runs the peak-theorem and closed-form checks against the given spectrum.
VerificationReport verify_spectrum(const Spectrum& s);

/// compute_spectrum followed by verify_spectrum.
VerificationReport verify_theorems(PrimeModulus p, HeightMethod method = HeightMethod::fast);

/// One line per report, e.g. "p=17 pass (7 checks)".
std::string summarize(const VerificationReport& r);

struct ScanMember {
  std::int64_t a;
  std::int64_t h;
  /// h - p/j for the bucket this member landed in.
  Rational offset;
};

struct ScanBucket {
  std::int64_t j;  // members are nearest to p/j
  std::vector<ScanMember> members;
};

struct PrimeScan {
  std::int64_t p;
  std::vector<ScanBucket> buckets;  // j = 1..b, in order
  /// Largest height with b*h <= p.
  std::int64_t residual_max;
};

struct ConjectureScan {
  std::int64_t b;
  std::vector<PrimeScan> primes;
};

/// Observational scan: for every prime in [p_lo, p_hi], buckets the heights
/// with b*h > p by the nearest p/j (j = 1..b, ties to the smaller j).
ConjectureScan scan_conjecture(std::int64_t b, std::int64_t p_lo, std::int64_t p_hi);

void print_scan(std::ostream& os, const ConjectureScan& scan);

/// Odd primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace heightline
