#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace heightline {

using int128 = __int128;

/// Raised when an exact computation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {
int128 add(int128 x, int128 y);
int128 sub(int128 x, int128 y);
int128 mul(int128 x, int128 y);
}  // namespace checked

std::string to_string(int128 v);

/// Exact rational number over 128-bit integers, always in lowest terms with a
/// positive denominator. Every operation is overflow-checked.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int128 num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int128 num, int128 den);

  int128 num() const noexcept { return num_; }
  int128 den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  int128 floor() const noexcept;
  int128 ceil() const noexcept;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

}  // namespace heightline
