#include <doctest.h>

#include <cmath>

#include "heightline/modular.hpp"
#include "oracles.hpp"

using namespace heightline;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> as_pairs(const ResidueRecordChain& chain) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& rec : chain.expand()) out.emplace_back(rec.k, rec.r);
  return out;
}

std::size_t run_bound(std::int64_t p) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return 2 * static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(p)) / std::log(phi))) + 2;
}

}  // namespace

TEST_CASE("is_odd_prime examples") {
  CHECK_FALSE(is_odd_prime(2));
  CHECK(is_odd_prime(4409));
  CHECK_FALSE(is_odd_prime(4411));  // 11 * 401
  CHECK_FALSE(is_odd_prime(1));
  CHECK(is_odd_prime(3));
}

TEST_CASE("is_odd_prime agrees with trial division below 20000") {
  for (std::int64_t n = 1; n < 20000; ++n) {
    const bool expected = n % 2 == 1 && oracle::is_prime_trial(n);
    REQUIRE_MESSAGE(is_odd_prime(n) == expected, "n = " << n);
  }
}

TEST_CASE("is_odd_prime on large inputs") {
  CHECK(is_odd_prime(2147483647));                      // 2^31 - 1
  CHECK(is_odd_prime((std::int64_t{1} << 61) - 1));     // 2^61 - 1
  CHECK(is_odd_prime((std::int64_t{1} << 62) - 57));    // largest prime below 2^62
  CHECK_FALSE(is_odd_prime((std::int64_t{1} << 62) - 59));
  CHECK_FALSE(is_odd_prime(3215031751));                // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_odd_prime(3825123056546413051));       // strong pseudoprime to 2..23
  CHECK_FALSE(is_odd_prime(std::int64_t{1} << 62));
}

TEST_CASE("is_odd_prime range errors") {
  CHECK_THROWS_AS(is_odd_prime(0), std::out_of_range);
  CHECK_THROWS_AS(is_odd_prime(-7), std::out_of_range);
  CHECK_THROWS_AS(is_odd_prime((std::int64_t{1} << 62) + 1), std::out_of_range);
}

TEST_CASE("PrimeModulus validation") {
  CHECK(PrimeModulus(7).value() == 7);
  CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(-5), std::invalid_argument);
}

TEST_CASE("mod_inverse examples") {
  CHECK(mod_inverse(3, PrimeModulus(7)) == 5);
  CHECK(mod_inverse(1, PrimeModulus(13)) == 1);
  CHECK(mod_inverse(8, PrimeModulus(13)) == oracle::inverse_by_scan(8, 13));
  CHECK(mod_inverse(8, PrimeModulus(13)) == 5);
  // Inputs are reduced mod p at the boundary.
  CHECK(mod_inverse(21, PrimeModulus(13)) == 5);
}

TEST_CASE("mod_inverse errors") {
  CHECK_THROWS_AS(mod_inverse(0, PrimeModulus(13)), NotInvertibleError);
  CHECK_THROWS_AS(mod_inverse(26, PrimeModulus(13)), NotInvertibleError);
  CHECK_THROWS_AS(mod_inverse(-3, PrimeModulus(13)), std::invalid_argument);
}

TEST_CASE("mod_inverse is an involution and matches the scan") {
  for (std::int64_t n : oracle::odd_primes_upto(400)) {
    const PrimeModulus p(n);
    for (std::int64_t a = 1; a < n; ++a) {
      const std::int64_t x = mod_inverse(a, p);
      REQUIRE(x == oracle::inverse_by_scan(a, n));
      REQUIRE(mod_inverse(x, p) == a);
    }
  }
  const PrimeModulus big((std::int64_t{1} << 62) - 57);
  for (std::int64_t a : {std::int64_t{2}, std::int64_t{12345678901234567}, big.value() - 1}) {
    const std::int64_t x = mod_inverse(a, big);
    CHECK(mul_mod(a, x, big.value()) == 1);
    CHECK(mod_inverse(x, big) == a);
  }
}

TEST_CASE("residue_records examples") {
  using V = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(as_pairs(residue_records(5, PrimeModulus(7))) == V{{1, 5}, {2, 3}, {3, 1}});
  CHECK(as_pairs(residue_records(1, PrimeModulus(7))) == V{{1, 1}});
  CHECK(as_pairs(residue_records(8, PrimeModulus(13))) == V{{1, 8}, {2, 3}, {5, 1}});
  CHECK_THROWS_AS(residue_records(0, PrimeModulus(7)), std::domain_error);
  CHECK_THROWS_AS(residue_records(7, PrimeModulus(7)), std::domain_error);
}

TEST_CASE("residue_records equals the definitional record scan for p <= 997") {
  for (std::int64_t n : oracle::odd_primes_upto(997)) {
    const PrimeModulus p(n);
    for (std::int64_t a = 1; a < n; ++a) {
      const auto chain = residue_records(a, p);
      REQUIRE_MESSAGE(as_pairs(chain) == oracle::records_by_scan(a, n), "p=" << n << " a=" << a);
      REQUIRE(chain.front() == ResidueRecord{1, a});
      REQUIRE(chain.back() == ResidueRecord{mod_inverse(a, p), 1});
      REQUIRE_MESSAGE(chain.run_count() <= run_bound(n), "p=" << n << " a=" << a);
    }
  }
}

TEST_CASE("a = p-1 makes every multiplier a record but stays a two-run chain") {
  const PrimeModulus p(1009);
  const auto chain = residue_records(1008, p);
  CHECK(chain.size() == 1008);
  CHECK(chain.run_count() == 2);
  CHECK(chain.back() == ResidueRecord{1008, 1});
}

TEST_CASE("record chains near 2^62 keep the record property at every run boundary") {
  const std::int64_t n = (std::int64_t{1} << 62) - 57;
  const PrimeModulus p(n);
  for (std::int64_t a : {std::int64_t{2}, std::int64_t{3}, std::int64_t{1} << 40, n / 2, n / 3, n - 2, n - 1,
                         std::int64_t{1618033988749894848}}) {
    const auto chain = residue_records(a, p);
    CHECK(chain.run_count() <= run_bound(n));
    std::int64_t prev_k = 0, prev_r = n;
    for (const auto& run : chain.runs()) {
      for (const auto& rec : {run.front(), run.back()}) {
        CHECK(mul_mod(rec.k, a, n) == rec.r);
      }
      CHECK(run.front().k > prev_k);
      CHECK(run.front().r < prev_r);
      prev_k = run.back().k;
      prev_r = run.back().r;
    }
    CHECK(chain.back().r == 1);
    CHECK(chain.back().k == mod_inverse(a, p));
  }
}
