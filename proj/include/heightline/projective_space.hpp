#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>

#include "heightline/height.hpp"

namespace heightline {

/// Desk-scale ceiling on the number of points enumerated in one call.
inline constexpr std::int64_t kMaxSpacePoints = 10'000'000;

class TooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// (p^d - 1)/(p - 1). Throws TooLargeError above kMaxSpacePoints.
std::int64_t projective_point_count(PrimeModulus p, std::size_t d);

/// Yields each point of P^{d-1}(F_p) once, canonical, in lexicographic order
/// of the canonical coordinates.
class PointStream {
 public:
  PointStream(PrimeModulus p, std::size_t d);

  std::optional<ProjectivePoint> next();

 private:
  PrimeModulus p_;
  std::vector<std::int64_t> coords_;
  std::size_t lead_;
  bool done_ = false;
};

/// Checks the scale guard before any work.
PointStream enumerate_points(PrimeModulus p, std::size_t d);

struct SpaceSpectrum {
  PrimeModulus p;
  std::size_t d;
  std::map<std::int64_t, std::int64_t> histogram;  // height -> count
  std::int64_t point_count = 0;

  friend bool operator==(const SpaceSpectrum&, const SpaceSpectrum&) = default;
};

/// Histogram of height_point over every point. Theta(point_count * p * d).
SpaceSpectrum space_spectrum(PrimeModulus p, std::size_t d);

/// "# p=<p> d=<d>", "height,count", then one row per height, ascending.
void write_histogram_csv(const SpaceSpectrum& s, std::ostream& os);

}  // namespace heightline
