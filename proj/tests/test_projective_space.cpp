#include <doctest.h>

#include <random>
#include <sstream>

#include "heightline/projective_space.hpp"
#include "heightline/spectrum.hpp"
#include "oracles.hpp"

using namespace heightline;

namespace {

std::vector<std::vector<std::int64_t>> collect(PrimeModulus p, std::size_t d) {
  std::vector<std::vector<std::int64_t>> out;
  auto stream = enumerate_points(p, d);
  while (auto pt = stream.next()) out.emplace_back(pt->coords().begin(), pt->coords().end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_points examples") {
  using VV = std::vector<std::vector<std::int64_t>>;
  CHECK(collect(PrimeModulus(3), 2) == VV{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(collect(PrimeModulus(3), 3).size() == 13);
  CHECK(collect(PrimeModulus(7), 2).size() == 8);
}

TEST_CASE("enumeration is canonical, lexicographic and complete") {
  for (auto [n, d] : {std::pair<std::int64_t, std::size_t>{3, 4}, {5, 3}, {7, 3}, {11, 2}, {3, 5}}) {
    const PrimeModulus p(n);
    const auto pts = collect(p, d);
    REQUIRE(static_cast<std::int64_t>(pts.size()) == projective_point_count(p, d));
    REQUIRE(std::is_sorted(pts.begin(), pts.end()));
    REQUIRE(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (const auto& c : pts) {
      const auto lead = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
      REQUIRE(lead != c.end());
      REQUIRE(*lead == 1);
    }
  }
}

TEST_CASE("point counts and the scale guard") {
  CHECK(projective_point_count(PrimeModulus(3), 3) == 13);
  CHECK(projective_point_count(PrimeModulus(5), 3) == 31);
  CHECK(projective_point_count(PrimeModulus(7), 3) == 57);
  CHECK(projective_point_count(PrimeModulus(101), 4) == 1040604);
  CHECK_THROWS_AS(projective_point_count(PrimeModulus(101), 5), TooLargeError);
  CHECK_THROWS_AS(enumerate_points(PrimeModulus(3), 40), TooLargeError);
  CHECK_THROWS_AS(space_spectrum(PrimeModulus(4409), 3), TooLargeError);
  CHECK_THROWS_AS(enumerate_points(PrimeModulus(3), 1), std::invalid_argument);
}

TEST_CASE("space_spectrum examples") {
  using H = std::map<std::int64_t, std::int64_t>;
  CHECK(space_spectrum(PrimeModulus(3), 2).histogram == H{{1, 2}, {2, 1}, {3, 1}});
  const auto s7 = space_spectrum(PrimeModulus(7), 2);
  CHECK(s7.histogram == H{{1, 2}, {2, 1}, {3, 2}, {4, 2}, {7, 1}});
  CHECK(s7.point_count == 8);
  std::int64_t mass = 0;
  for (const auto& [h, c] : space_spectrum(PrimeModulus(3), 3).histogram) mass += c;
  CHECK(mass == 13);
}

TEST_CASE("d = 2 space spectrum is the line spectrum plus the point at infinity") {
  for (std::int64_t n : oracle::odd_primes_upto(120)) {
    const PrimeModulus p(n);
    std::map<std::int64_t, std::int64_t> expected{{1, 1}};
    for (const auto& rec : compute_spectrum(p).heights) ++expected[rec.h];
    const auto space = space_spectrum(p, 2);
    REQUIRE(space.histogram == expected);
    REQUIRE(space.histogram.rbegin()->first == n);
  }
}

TEST_CASE("histograms do not depend on the chosen representatives") {
  std::mt19937_64 rng(42);
  for (auto [n, d] : {std::pair<std::int64_t, std::size_t>{5, 3}, {7, 3}, {3, 4}, {13, 2}}) {
    const PrimeModulus p(n);
    std::map<std::int64_t, std::int64_t> hist;
    auto stream = enumerate_points(p, d);
    while (auto pt = stream.next()) {
      const std::int64_t lambda = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1));
      std::vector<std::int64_t> rep;
      for (std::int64_t c : pt->coords()) rep.push_back(c * lambda % n);
      ++hist[height_point(normalize_point(rep, p))];
    }
    REQUIRE(hist == space_spectrum(p, d).histogram);
  }
}

TEST_CASE("space spectrum minimum key is at least 1 and counts are positive") {
  const auto s = space_spectrum(PrimeModulus(5), 4);
  CHECK(s.histogram.begin()->first >= 1);
  std::int64_t mass = 0;
  for (const auto& [h, c] : s.histogram) {
    CHECK(c > 0);
    mass += c;
  }
  CHECK(mass == s.point_count);
  CHECK(s.point_count == 156);
}

TEST_CASE("histogram CSV layout") {
  std::ostringstream os;
  write_histogram_csv(space_spectrum(PrimeModulus(3), 2), os);
  CHECK(os.str() == "# p=3 d=2\nheight,count\n1,2\n2,1\n3,1\n");
}
