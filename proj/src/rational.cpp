#include "xfam/rational.hpp"

namespace xfam {

namespace {

using UInt128 = unsigned __int128;

UInt128 uabs(Int128 v) { return v < 0 ? UInt128(-(v + 1)) + 1 : UInt128(v); }

UInt128 gcd_u(UInt128 a, UInt128 b) {
  while (b) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt128 u = uabs(v);
  std::string s;
  while (u) {
    s += char('0' + int(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

Rational Rational::make(Int128 num, Int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  UInt128 g = gcd_u(uabs(num), UInt128(den));
  if (g > 1) {
    num = num < 0 ? -Int128(uabs(num) / g) : Int128(UInt128(num) / g);
    den = Int128(UInt128(den) / g);
  }
  Rational r;
  r.num = num;
  r.den = den;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return make(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce before multiplying to keep components small.
  Rational a = make(num, o.den);
  Rational b = make(o.num, den);
  Rational r;
  r.num = a.num * b.num;
  r.den = a.den * b.den;
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("rational division by zero");
  return *this * make(o.den, o.num);
}

bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

bool Rational::operator<=(const Rational& o) const {
  return num * o.den <= o.num * den;
}

std::string Rational::str() const {
  if (den == 1) return int128_to_string(num);
  return int128_to_string(num) + "/" + int128_to_string(den);
}

}  // namespace xfam
