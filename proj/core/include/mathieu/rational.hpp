#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "mathieu/types.hpp"

namespace mathieu {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

/// Gaussian rational a + b i. Exact arithmetic for the rational paths of the
/// unit-circle polylogarithm identities (roots of unity in {±1, ±i}).
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit RationalComplex(const Rational& r) : re(r), im(0) {}
  static RationalComplex from_int(long r, long i = 0) {
    return {Rational(r), Rational(i)};
  }

  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  bool operator==(const RationalComplex&) const = default;

  RationalComplex operator-() const { return {-re, -im}; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator*(const Rational& c, const RationalComplex& a) {
    return {c * a.re, c * a.im};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) fail(ErrorKind::singular, "RationalComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }

  RationalComplex pow(unsigned e) const {
    RationalComplex acc = from_int(1);
    RationalComplex base = *this;
    while (e > 0) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }
};

}  // namespace mathieu
