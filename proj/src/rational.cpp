#include "spinparadox/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace spinparadox {

namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  wide g = wide_gcd(a.den_, b.den_);
  wide num = static_cast<wide>(a.num_) * (b.den_ / g) + static_cast<wide>(b.num_) * (a.den_ / g);
  wide den = static_cast<wide>(a.den_) * (b.den_ / g);
  return Rational::from_wide(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce so the 128-bit product never overflows for 64-bit operands
  wide g1 = wide_gcd(a.num_, b.den_);
  wide g2 = wide_gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  wide num = (a.num_ / g1) * (b.num_ / g2);
  wide den = (a.den_ / g2) * (b.den_ / g1);
  return Rational::from_wide(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t binomial(int n, int k) {
  if (n < 0 || n > 62) throw std::out_of_range("binomial: n outside [0, 62]");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  wide result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return narrow(result);
}

}  // namespace spinparadox
