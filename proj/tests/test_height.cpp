#include <doctest.h>

#include <algorithm>
#include <random>

#include "heightline/height.hpp"
#include "oracles.hpp"

using namespace heightline;

TEST_CASE("naive_height examples") {
  const PrimeModulus p7(7);
  CHECK(naive_height(6, p7) == HeightRecord{6, 7, 1});
  CHECK(naive_height(0, p7) == HeightRecord{0, 1, 1});
  CHECK(naive_height(5, p7) == HeightRecord{5, 4, 3});
}

TEST_CASE("naive_height matches the definitional scan") {
  for (std::int64_t n : oracle::odd_primes_upto(211)) {
    for (std::int64_t a = 0; a < n; ++a) {
      const auto [h, k] = oracle::height_by_scan(a, n);
      REQUIRE(naive_height(a, PrimeModulus(n)) == HeightRecord{a, h, k});
    }
  }
}

TEST_CASE("fast_height examples") {
  CHECK(fast_height(5, PrimeModulus(7)) == HeightRecord{5, 4, 3});
  CHECK(fast_height(4, PrimeModulus(13)) == HeightRecord{4, 5, 1});
  // (p-1)/2 at p = 4409: h = (p+1)/2, first reached at k = 1.
  CHECK(fast_height(2204, PrimeModulus(4409)) == HeightRecord{2204, 2205, 1});
  CHECK(naive_height(2204, PrimeModulus(4409)) == HeightRecord{2204, 2205, 1});
  CHECK(fast_height(0, PrimeModulus(4409)) == HeightRecord{0, 1, 1});
}

TEST_CASE("fast_height equals naive_height, h and witness, for p < 400") {
  for (std::int64_t n : oracle::odd_primes_upto(400)) {
    const PrimeModulus p(n);
    for (std::int64_t a = 0; a < n; ++a) REQUIRE(fast_height(a, p) == naive_height(a, p));
  }
}

TEST_CASE("fast_height agrees with naive_height on sampled a for mid-size primes") {
  std::mt19937_64 rng(20261015);
  for (std::int64_t n : {104729, 1000003, 999983}) {
    const PrimeModulus p(n);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int i = 0; i < 25; ++i) {
      const std::int64_t a = pick(rng);
      REQUIRE(fast_height(a, p) == naive_height(a, p));
    }
  }
}

TEST_CASE("height bounds and fixed values") {
  for (std::int64_t n : oracle::odd_primes_upto(1000)) {
    const PrimeModulus p(n);
    CHECK(fast_height(n - 1, p).h == n);
    CHECK(fast_height(0, p).h == 1);
    CHECK(fast_height(1, p).h == 2);
    for (std::int64_t a = 0; a < n; a += 7) {
      const auto h = fast_height(a, p).h;
      REQUIRE(1 <= h);
      REQUIRE(h <= n);
    }
  }
}

TEST_CASE("height is invariant under a -> a^-1") {
  for (std::int64_t n : oracle::odd_primes_upto(600)) {
    const PrimeModulus p(n);
    for (std::int64_t a = 1; a < n; ++a) REQUIRE(fast_height(a, p).h == fast_height(mod_inverse(a, p), p).h);
  }
}

TEST_CASE("fast_height near 2^62 returns a self-consistent witness") {
  const std::int64_t n = (std::int64_t{1} << 62) - 57;
  const PrimeModulus p(n);
  for (std::int64_t a : {std::int64_t{1}, n / 2, n / 3, 2 * (n / 3) + 1, n - 3, n - 1}) {
    const auto rec = fast_height(a, p);
    CHECK(rec.k_min + mul_mod(rec.k_min, a, n) == rec.h);
    CHECK(rec.h <= n);
  }
  CHECK(fast_height(n - 1, p).h == n);
  CHECK(fast_height(n / 2, p).h == (n + 1) / 2);
}

TEST_CASE("negative residues are rejected") {
  CHECK_THROWS_AS(naive_height(-1, PrimeModulus(7)), std::invalid_argument);
  CHECK_THROWS_AS(fast_height(-1, PrimeModulus(7)), std::invalid_argument);
}

TEST_CASE("height method names") {
  CHECK(parse_height_method("naive") == HeightMethod::naive);
  CHECK(parse_height_method("fast") == HeightMethod::fast);
  CHECK(to_string(HeightMethod::naive) == "naive");
  CHECK_THROWS_AS(parse_height_method("quick"), std::invalid_argument);
}

TEST_CASE("normalize_point examples") {
  using V = std::vector<std::int64_t>;
  auto coords = [](const ProjectivePoint& pt) { return V(pt.coords().begin(), pt.coords().end()); };
  CHECK(coords(normalize_point(V{2, 4}, PrimeModulus(7))) == V{1, 2});
  CHECK(coords(normalize_point(V{0, 3, 5}, PrimeModulus(7))) == V{0, 1, 4});
  CHECK(coords(normalize_point(V{1, 0, 0}, PrimeModulus(13))) == V{1, 0, 0});
  CHECK(normalize_point(V{0, 3, 5}, PrimeModulus(7)).to_string() == "<0,1,4>");

  const auto pt = normalize_point(V{3, 5, 6}, PrimeModulus(11));
  CHECK(normalize_point(pt.coords(), PrimeModulus(11)) == pt);
}

TEST_CASE("normalize_point errors") {
  using V = std::vector<std::int64_t>;
  CHECK_THROWS_AS(normalize_point(V{0, 0}, PrimeModulus(7)), std::domain_error);
  CHECK_THROWS_AS(normalize_point(V{7, 14, 0}, PrimeModulus(7)), std::domain_error);
  CHECK_THROWS_AS(normalize_point(V{1}, PrimeModulus(7)), std::invalid_argument);
  CHECK_THROWS_AS(normalize_point(V{1, -2}, PrimeModulus(7)), std::invalid_argument);
}

TEST_CASE("height_point examples") {
  using V = std::vector<std::int64_t>;
  CHECK(height_point(normalize_point(V{0, 1}, PrimeModulus(7))) == 1);
  CHECK(height_point(normalize_point(V{1, 2, 3}, PrimeModulus(7))) == 6);
  for (std::int64_t n : {7, 13, 101}) {
    for (std::int64_t a = 0; a < n; ++a) {
      REQUIRE(height_point(normalize_point(V{1, a}, PrimeModulus(n))) == naive_height(a, PrimeModulus(n)).h);
    }
  }
}

TEST_CASE("height_point properties on random tuples") {
  std::mt19937_64 rng(7);
  const std::vector<std::int64_t> primes = oracle::odd_primes_upto(60);
  for (int iter = 0; iter < 400; ++iter) {
    const std::int64_t n = primes[rng() % primes.size()];
    const PrimeModulus p(n);
    const std::size_t d = 2 + rng() % 4;
    std::uniform_int_distribution<std::int64_t> coord(0, n - 1);
    std::vector<std::int64_t> c(d);
    do {
      std::generate(c.begin(), c.end(), [&] { return coord(rng); });
    } while (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; }));

    const auto pt = normalize_point(c, p);
    const std::int64_t h = height_point(pt);
    REQUIRE(h == oracle::point_height_by_scan(c, n));

    // Scale invariance.
    const std::int64_t lambda = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<std::int64_t> scaled(d);
    std::transform(c.begin(), c.end(), scaled.begin(), [&](std::int64_t x) { return x * lambda % n; });
    REQUIRE(normalize_point(scaled, p) == pt);
    REQUIRE(height_point(normalize_point(scaled, p)) == h);

    // Permutation invariance.
    std::vector<std::int64_t> perm = c;
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(height_point(normalize_point(perm, p)) == h);

    // Each nonzero coordinate contributes at least 1.
    const auto nonzero = std::count_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
    REQUIRE(h >= nonzero);
  }
}
