#include "heightline/projective_space.hpp"

#include <ostream>

namespace heightline {

namespace {

void check_dimension(std::size_t d) {
  if (d < 2) throw std::invalid_argument("projective space needs d >= 2 coordinates");
}

}  // namespace

std::int64_t projective_point_count(PrimeModulus p, std::size_t d) {
  check_dimension(d);
  const std::int64_t n = p.value();
  std::int64_t total = 0;
  std::int64_t power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    if (total > kMaxSpacePoints) {
      throw TooLargeError("P^" + std::to_string(d - 1) + "(F_" + std::to_string(n) + ") has more than " +
                          std::to_string(kMaxSpacePoints) + " points");
    }
    if (i + 1 < d) {
      if (power > kMaxSpacePoints / n + 1) {
        throw TooLargeError("P^" + std::to_string(d - 1) + "(F_" + std::to_string(n) + ") is too large");
      }
      power *= n;
    }
  }
  return total;
}

PointStream::PointStream(PrimeModulus p, std::size_t d) : p_(p), coords_(d, 0), lead_(d - 1) {
  check_dimension(d);
  coords_[lead_] = 1;
}

std::optional<ProjectivePoint> PointStream::next() {
  if (done_) return std::nullopt;
  ProjectivePoint out(p_, coords_);

  // Advance the odometer over the coordinates after the leading 1.
  std::size_t i = coords_.size();
  while (i > lead_ + 1) {
    --i;
    if (++coords_[i] < p_.value()) return out;
    coords_[i] = 0;
  }
  // Tail exhausted: move the leading 1 one position left.
  if (lead_ == 0) {
    done_ = true;
  } else {
    coords_[lead_] = 0;
    --lead_;
    coords_[lead_] = 1;
  }
  return out;
}

PointStream enumerate_points(PrimeModulus p, std::size_t d) {
  projective_point_count(p, d);
  return PointStream(p, d);
}

SpaceSpectrum space_spectrum(PrimeModulus p, std::size_t d) {
  SpaceSpectrum s{.p = p, .d = d, .histogram = {}, .point_count = 0};
  auto stream = enumerate_points(p, d);
  while (auto pt = stream.next()) {
    ++s.histogram[height_point(*pt)];
    ++s.point_count;
  }
  return s;
}

void write_histogram_csv(const SpaceSpectrum& s, std::ostream& os) {
  os << "# p=" << s.p.value() << " d=" << s.d << '\n';
  os << "height,count\n";
  for (const auto& [h, c] : s.histogram) os << h << ',' << c << '\n';
}

}  // namespace heightline
