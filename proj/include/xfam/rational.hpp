// Exact rational arithmetic over 128-bit components. Densities and inequality
// checks never touch floating point.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xfam {

using Int128 = __int128;

std::string int128_to_string(Int128 v);

struct Rational {
  Int128 num = 0;
  Int128 den = 1;  // always > 0, fraction fully reduced

  Rational() = default;
  Rational(long long v) : num(v), den(1) {}
  static Rational make(Int128 num, Int128 den);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  bool is_zero() const { return num == 0; }
  std::string str() const;
};

}  // namespace xfam
