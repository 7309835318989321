#include "heightline/spectrum_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>

namespace heightline {

void write_spectrum_csv(const Spectrum& s, std::ostream& os) {
  os << "# p=" << s.p.value() << " method=" << to_string(s.method) << '\n';
  os << "a,height,k_min\n";
  for (const auto& rec : s.heights) os << rec.a << ',' << rec.h << ',' << rec.k_min << '\n';
  os << "inf," << s.infinity_height << ",-\n";
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_spectrum_csv(s, out);
  if (!out.flush()) throw std::runtime_error("write to " + path.string() + " failed");
}

namespace {

std::int64_t parse_int(std::string_view field, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return v;
}

std::vector<std::string_view> split3(std::string_view row, std::size_t line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = row.find(',', start);
    out.push_back(row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != 3) throw ParseError(line, "expected 3 fields, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

Spectrum read_spectrum_csv(std::istream& is) {
  std::string row;
  std::size_t line = 0;
  auto next = [&]() -> bool {
    if (!std::getline(is, row)) return false;
    ++line;
    if (!row.empty() && row.back() == '\r') throw ParseError(line, "CR line terminator");
    return true;
  };

  if (!next()) throw ParseError(1, "empty input");
  static const std::regex header(R"(# p=(\d+) method=(naive|fast))");
  std::smatch m;
  if (!std::regex_match(row, m, header)) throw ParseError(line, "header mismatch: '" + row + "'");
  const std::int64_t n = parse_int(m[1].str(), line, "p");
  if (n <= 0 || n > kMaxModulus || !is_odd_prime(n)) {
    throw ParseError(line, std::to_string(n) + " is not an odd prime");
  }
  Spectrum s{.p = PrimeModulus(n), .heights = {}, .method = parse_height_method(m[2].str())};
  s.heights.reserve(static_cast<std::size_t>(n));

  if (!next() || row != "a,height,k_min") throw ParseError(line, "expected column header 'a,height,k_min'");

  for (std::int64_t a = 0; a < n; ++a) {
    if (!next()) throw ParseError(line + 1, "missing row for a=" + std::to_string(a));
    const auto f = split3(row, line);
    if (parse_int(f[0], line, "a") != a) throw ParseError(line, "expected a=" + std::to_string(a));
    const std::int64_t h = parse_int(f[1], line, "height");
    const std::int64_t k = parse_int(f[2], line, "k_min");
    if (a == n - 1 && h != n) throw ParseError(line, "integrity: h(p-1) must equal p");
    if (k < 1 || k >= n) throw ParseError(line, "k_min out of range");
    if (k + mul_mod(k, a, n) != h) throw ParseError(line, "witness does not reproduce height");
    s.heights.push_back({a, h, k});
  }

  if (!next()) throw ParseError(line + 1, "missing point-at-infinity row");
  const auto f = split3(row, line);
  if (f[0] != "inf" || f[2] != "-") throw ParseError(line, "malformed point-at-infinity row");
  s.infinity_height = parse_int(f[1], line, "height");
  if (s.infinity_height != 1) throw ParseError(line, "integrity: height at infinity must be 1");

  while (next()) {
    if (!row.empty()) throw ParseError(line, "trailing data");
  }
  return s;
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_spectrum_csv(in);
}

}  // namespace heightline
