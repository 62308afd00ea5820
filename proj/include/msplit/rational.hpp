#pragma once

// Exact fractions over 64-bit integers.  Intermediates run through 128-bit
// arithmetic and anything that no longer fits 64 bits after reduction throws
// instead of rounding.

#include <cstdint>
#include <string>

#include "msplit/error.hpp"

namespace msplit {

class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d); // reduces; throws on d == 0

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const; // "p/q"
  static Rational parse(const std::string& s);

private:
  struct raw_t {};
  Rational(long long n, long long d, raw_t) : num_(n), den_(d) {}
  static Rational reduced(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

} // namespace msplit
