#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heightline/modular.hpp"

namespace heightline {

/// Height of the line point <1, a> with the smallest minimizing multiplier.
struct HeightRecord {
  std::int64_t a;
  std::int64_t h;
  std::int64_t k_min;

  friend bool operator==(const HeightRecord&, const HeightRecord&) = default;
};

/// Reference oracle: scans every k = 1..p-1 and keeps the first minimum of
/// k + (k*a mod p). O(p).
HeightRecord naive_height(std::int64_t a, PrimeModulus p);

/// Same contract as naive_height, evaluated over the residue record chain.
/// The value k + r is linear along each run, so only run endpoints are
/// inspected. O(log p).
HeightRecord fast_height(std::int64_t a, PrimeModulus p);

enum class HeightMethod { naive, fast };

std::string to_string(HeightMethod m);
HeightMethod parse_height_method(const std::string& s);

inline HeightRecord line_height(std::int64_t a, PrimeModulus p, HeightMethod m) {
  return m == HeightMethod::naive ? naive_height(a, p) : fast_height(a, p);
}

/// A point of P^{d-1}(F_p) in canonical form: the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  friend ProjectivePoint normalize_point(std::span<const std::int64_t>, PrimeModulus);
  friend class PointStream;
  ProjectivePoint(PrimeModulus p, std::vector<std::int64_t> coords) : p_(p), coords_(std::move(coords)) {}

  PrimeModulus p_;
  std::vector<std::int64_t> coords_;
};

/// Scales coords by the inverse of the first nonzero coordinate. Requires at
/// least two coordinates, none negative, and not all zero mod p.
ProjectivePoint normalize_point(std::span<const std::int64_t> coords, PrimeModulus p);

/// min over k = 1..p-1 of sum_i (k*c_i mod p), by exhaustive scan.
std::int64_t height_point(const ProjectivePoint& point);

}  // namespace heightline
