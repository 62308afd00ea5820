#include "msplit/rational.hpp"

#include <numeric>

namespace msplit {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > (i128)INT64_MAX || v < (i128)INT64_MIN)
    fail(errc::arithmetic_overflow, "rational no longer fits 64 bits");
  return (long long)v;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

Rational Rational::reduced(i128 n, i128 d) {
  if (d == 0) fail(errc::arithmetic_overflow, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d), raw_t{});
}

Rational::Rational(long long n, long long d) {
  Rational r = reduced(n, d);
  num_ = r.num_;
  den_ = r.den_;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduced((i128)a.num_ * b.den_ + (i128)b.num_ * a.den_, (i128)a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::reduced((i128)a.num_ * b.den_ - (i128)b.num_ * a.den_, (i128)a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduced((i128)a.num_ * b.num_, (i128)a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(errc::arithmetic_overflow, "division by zero");
  return Rational::reduced((i128)a.num_ * b.den_, (i128)a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return (i128)a.num_ * b.den_ < (i128)b.num_ * a.den_;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(errc::parse_error, "not a rational: '" + s + "'");
  }
}

} // namespace msplit
