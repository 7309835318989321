#include "heightline/rational.hpp"

#include <algorithm>

namespace heightline {

namespace checked {

int128 add(int128 x, int128 y) {
  int128 out;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("128-bit overflow in addition");
  return out;
}

int128 sub(int128 x, int128 y) {
  int128 out;
  if (__builtin_sub_overflow(x, y, &out)) throw OverflowError("128-bit overflow in subtraction");
  return out;
}

int128 mul(int128 x, int128 y) {
  int128 out;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("128-bit overflow in multiplication");
  return out;
}

}  // namespace checked

namespace {

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr int128 kMin128 = static_cast<int128>(static_cast<unsigned __int128>(1) << 127);

}  // namespace

std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  auto u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Rational::Rational(int128 num, int128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == kMin128 || den == kMin128) throw OverflowError("Rational: operand out of range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int128 g = gcd128(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

int128 Rational::floor() const noexcept {
  int128 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

int128 Rational::ceil() const noexcept {
  int128 q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const { return Rational(checked::sub(0, num_), den_); }

Rational operator+(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return Rational(checked::add(x.num_, y.num_), x.den_);
  const int128 g = gcd128(x.den_, y.den_);
  const int128 xs = y.den_ / g;
  const int128 ys = x.den_ / g;
  return Rational(checked::add(checked::mul(x.num_, xs), checked::mul(y.num_, ys)), checked::mul(x.den_, xs));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  // Cross-cancel first to keep intermediates small.
  const int128 g1 = gcd128(x.num_, y.den_);
  const int128 g2 = gcd128(y.num_, x.den_);
  const int128 a = g1 > 1 ? x.num_ / g1 : x.num_;
  const int128 d = g1 > 1 ? y.den_ / g1 : y.den_;
  const int128 c = g2 > 1 ? y.num_ / g2 : y.num_;
  const int128 b = g2 > 1 ? x.den_ / g2 : x.den_;
  return Rational(checked::mul(a, c), checked::mul(b, d));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
  return x * Rational(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return x.num_ <=> y.num_;
  return checked::mul(x.num_, y.den_) <=> checked::mul(y.num_, x.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return heightline::to_string(num_);
  return heightline::to_string(num_) + "/" + heightline::to_string(den_);
}

}  // namespace heightline
