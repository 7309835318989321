#pragma once

// Spectrum CSV format (LF line endings, ASCII decimal):
//
//   # p=<p> method=<naive|fast>
//   a,height,k_min
//   0,1,1
//   ...                 one row per a = 0..p-1, increasing
//   inf,1,-             the point at infinity

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "heightline/spectrum.hpp"

namespace heightline {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

void write_spectrum_csv(const Spectrum& s, std::ostream& os);
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);

/// Parses and re-validates a spectrum: p must be an odd prime, rows must be
/// complete and ordered, every witness must satisfy k + (k*a mod p) = h, and
/// h(p-1) = p. The stored witnesses are trusted to be minimal.
Spectrum read_spectrum_csv(std::istream& is);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

}  // namespace heightline
