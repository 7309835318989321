#include "heightline/modular.hpp"

#include <array>
#include <utility>

namespace heightline {

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

// The first twelve primes are a witness set for every n < 3.3 * 10^24.
constexpr std::array<std::int64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_odd_prime(std::int64_t n) {
  if (n <= 0 || n > kMaxModulus) {
    throw std::out_of_range("is_odd_prime: " + std::to_string(n) + " is outside (0, 2^62]");
  }
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::int64_t w : kWitnesses) {
    std::int64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
  if (p <= 0 || p > kMaxModulus || !is_odd_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
}

std::int64_t reduce_residue(std::int64_t a, PrimeModulus p, const char* what) {
  if (a < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(a));
  }
  return a % p.value();
}

std::int64_t mod_inverse(std::int64_t a, PrimeModulus p) {
  a = reduce_residue(a, p);
  if (a == 0) {
    throw NotInvertibleError("mod_inverse: 0 has no inverse modulo " + std::to_string(p.value()));
  }
  // Extended Euclid on (p, a), tracking only the coefficient of a.
  std::int64_t r0 = p.value(), r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return t0 < 0 ? t0 + p.value() : t0;
}

ResidueRecordChain::ResidueRecordChain(std::int64_t a, PrimeModulus p, std::vector<RecordRun> runs)
    : a_(a), p_(p), runs_(std::move(runs)) {
  if (runs_.empty()) throw std::logic_error("ResidueRecordChain: empty chain");
}

std::int64_t ResidueRecordChain::size() const noexcept {
  std::int64_t n = 0;
  for (const auto& run : runs_) n += run.count;
  return n;
}

std::vector<ResidueRecord> ResidueRecordChain::expand() const {
  std::vector<ResidueRecord> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& run : runs_) {
    for (std::int64_t j = 0; j < run.count; ++j) out.push_back(run.at(j));
  }
  return out;
}

ResidueRecordChain residue_records(std::int64_t a, PrimeModulus p) {
  a = reduce_residue(a, p);
  if (a == 0) {
    throw std::domain_error("residue_records: chain is undefined for a = 0 (mod p)");
  }
  std::vector<RecordRun> runs;
  detail::walk_record_runs(a, p.value(), [&](const RecordRun& run) { runs.push_back(run); });
  return ResidueRecordChain(a, p, std::move(runs));
}

}  // namespace heightline
