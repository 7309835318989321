#include "heightline/height.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace heightline {

HeightRecord naive_height(std::int64_t a, PrimeModulus p) {
  a = reduce_residue(a, p);
  const std::int64_t n = p.value();
  HeightRecord best{a, std::numeric_limits<std::int64_t>::max(), 0};
  for (std::int64_t k = 1; k < n; ++k) {
    const std::int64_t v = k + mul_mod(k, a, n);
    if (v < best.h) {
      best.h = v;
      best.k_min = k;
    }
  }
  return best;
}

HeightRecord fast_height(std::int64_t a, PrimeModulus p) {
  a = reduce_residue(a, p);
  if (a == 0) return {0, 1, 1};

  // Minimizers are always records: a non-record k is beaten by an earlier k'
  // with a smaller residue. Runs arrive in increasing k, so the first strict
  // improvement is the smallest minimizing k.
  HeightRecord best{a, std::numeric_limits<std::int64_t>::max(), 0};
  detail::walk_record_runs(a, p.value(), [&](const RecordRun& run) {
    const ResidueRecord first = run.front();
    const ResidueRecord last = run.back();
    const ResidueRecord pick = (last.k + last.r < first.k + first.r) ? last : first;
    if (pick.k + pick.r < best.h) {
      best.h = pick.k + pick.r;
      best.k_min = pick.k;
    }
  });
  return best;
}

std::string to_string(HeightMethod m) { return m == HeightMethod::naive ? "naive" : "fast"; }

HeightMethod parse_height_method(const std::string& s) {
  if (s == "naive") return HeightMethod::naive;
  if (s == "fast") return HeightMethod::fast;
  throw std::invalid_argument("unknown height method '" + s + "' (expected naive or fast)");
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << '>';
  return os.str();
}

ProjectivePoint normalize_point(std::span<const std::int64_t> coords, PrimeModulus p) {
  if (coords.size() < 2) {
    throw std::invalid_argument("normalize_point: a projective point needs at least 2 coordinates");
  }
  std::vector<std::int64_t> c(coords.size());
  std::transform(coords.begin(), coords.end(), c.begin(),
                 [&](std::int64_t x) { return reduce_residue(x, p, "coordinate"); });
  const auto lead = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
  if (lead == c.end()) {
    throw std::domain_error("normalize_point: the zero tuple is not a projective point");
  }
  const std::int64_t inv = mod_inverse(*lead, p);
  for (auto& x : c) x = mul_mod(x, inv, p.value());
  return ProjectivePoint(p, std::move(c));
}

std::int64_t height_point(const ProjectivePoint& point) {
  const std::int64_t n = point.modulus().value();
  const auto coords = point.coords();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t k = 1; k < n; ++k) {
    std::int64_t sum = 0;
    for (std::int64_t c : coords) sum += mul_mod(k, c, n);
    best = std::min(best, sum);
  }
  return best;
}

}  // namespace heightline
