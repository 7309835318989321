#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heightline {

/// Largest modulus accepted anywhere in the library.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;

/// Raised when an argument is not invertible modulo p.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when the hypothesis of a closed form (e.g. p > (b-1)^2) does not hold.
class HypothesisNotMetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic primality test; exact for every n in (0, 2^62].
/// Throws std::out_of_range outside that range.
bool is_odd_prime(std::int64_t n);

/// A validated odd prime 3 <= p <= 2^62.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  operator std::int64_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::int64_t p_;
};

/// (x * y) mod p for x, y in [0, p).
inline std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t p) noexcept {
  if (((x | y) >> 31) == 0) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y) %
                                     static_cast<std::uint64_t>(p));
  }
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(y) %
                                   static_cast<unsigned __int128>(p));
}

/// Reduces a nonnegative integer into [0, p-1]. Negative input is rejected
/// with std::invalid_argument instead of being normalized.
std::int64_t reduce_residue(std::int64_t a, PrimeModulus p, const char* what = "a");

/// Returns x in [1, p-1] with a*x = 1 (mod p).
std::int64_t mod_inverse(std::int64_t a, PrimeModulus p);

/// One strict record of k -> (k*a mod p): no smaller multiplier reaches a residue <= r.
struct ResidueRecord {
  std::int64_t k;
  std::int64_t r;

  friend bool operator==(const ResidueRecord&, const ResidueRecord&) = default;
};

/// An arithmetic run of consecutive records:
/// (k0 + j*dk, r0 - j*dr) for j = 0 .. count-1.
struct RecordRun {
  std::int64_t k0;
  std::int64_t r0;
  std::int64_t dk;
  std::int64_t dr;
  std::int64_t count;

  ResidueRecord at(std::int64_t j) const noexcept { return {k0 + j * dk, r0 - j * dr}; }
  ResidueRecord front() const noexcept { return at(0); }
  ResidueRecord back() const noexcept { return at(count - 1); }

  friend bool operator==(const RecordRun&, const RecordRun&) = default;
};

/// The complete strict-record chain of k -> (k*a mod p), k = 1..p-1.
///
/// The chain itself can hold Theta(p) records (a = p-1 makes every k a
/// record), so it is stored as O(log p) arithmetic runs. Runs are produced by
/// the subtractive Euclidean descent on the pair (low residue, high gap).
class ResidueRecordChain {
 public:
  ResidueRecordChain(std::int64_t a, PrimeModulus p, std::vector<RecordRun> runs);

  std::int64_t residue() const noexcept { return a_; }
  PrimeModulus modulus() const noexcept { return p_; }
  const std::vector<RecordRun>& runs() const noexcept { return runs_; }
  std::size_t run_count() const noexcept { return runs_.size(); }

  /// Number of records (sum of run lengths).
  std::int64_t size() const noexcept;
  ResidueRecord front() const { return runs_.front().front(); }
  ResidueRecord back() const { return runs_.back().back(); }

  /// Materializes every record. Linear in size(); intended for small inputs and tests.
  std::vector<ResidueRecord> expand() const;

 private:
  std::int64_t a_;
  PrimeModulus p_;
  std::vector<RecordRun> runs_;
};

/// Computes the record chain of a in O(log p) steps. a = 0 (mod p) is a domain error.
ResidueRecordChain residue_records(std::int64_t a, PrimeModulus p);

namespace detail {

/// Drives the record descent for a reduced a in [1, p-1], invoking
/// visit(const RecordRun&) once per run in increasing k order.
template <typename Visitor>
void walk_record_runs(std::int64_t a, std::int64_t p, Visitor&& visit) {
  // low: k_lo * a = r_lo (mod p); high: k_hi * a = -d_hi (mod p).
  std::int64_t k_lo = 1, r_lo = a;
  std::int64_t k_hi = 0, d_hi = p;
  visit(RecordRun{k_lo, r_lo, 0, 0, 1});
  while (r_lo != 1) {
    // Here r_lo < d_hi. Shrink the gap below r_lo.
    const std::int64_t t = (d_hi - 1) / r_lo;
    k_hi += t * k_lo;
    d_hi -= t * r_lo;
    // Every intermediate low-side point is a new record.
    const std::int64_t q = (r_lo - 1) / d_hi;
    visit(RecordRun{k_lo + k_hi, r_lo - d_hi, k_hi, d_hi, q});
    k_lo += q * k_hi;
    r_lo -= q * d_hi;
  }
}

}  // namespace detail

}  // namespace heightline
