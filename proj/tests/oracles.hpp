#pragma once

// Brute-force reference evaluators used only by the tests. Each one stays on
// the defining-series side of the identities so it is independent of the
// continuation machinery it checks.

#include <cmath>
#include <complex>

#include "mathieu/summation.hpp"
#include "mathieu/types.hpp"

namespace oracles {

using mathieu::Complex;

// zeta(s, q) by direct summation for Re(s) > 1, plus the integral tail bound
// (q real). Returns value; writes the certified tail bound if requested.
inline Complex hurwitz_direct(Complex s, Complex q, long terms = 1'000'000,
                              double* tail = nullptr) {
  mathieu::ComplexCompensatedSum sum;
  for (long n = 0; n < terms; ++n) {
    sum.add(std::pow(q + static_cast<double>(n), -s));
  }
  if (tail) {
    double re_s = s.real();
    double base = static_cast<double>(terms) + q.real() - 1.0;
    *tail = std::pow(base, 1.0 - re_s) / (re_s - 1.0);
  }
  return sum.value();
}

// eta(s) = sum (-1)^{n+1} n^{-s} by plain alternating partial sums averaged
// over the last two (error ~ |d/dn n^{-s}| at the cutoff), Re(s) > 0.
inline Complex eta_alternating(Complex s, long terms = 200'000) {
  mathieu::ComplexCompensatedSum sum;
  double sign = 1.0;
  Complex prev(0.0, 0.0);
  for (long n = 1; n < terms; ++n) {
    prev = sum.value();
    sum.add(sign * std::pow(Complex(static_cast<double>(n), 0.0), -s));
    sign = -sign;
  }
  return 0.5 * (prev + sum.value());
}

// Li_alpha(z) by the defining series, |z| < 1.
inline Complex polylog_series_direct(Complex alpha, Complex z, long terms = 200'000) {
  mathieu::ComplexCompensatedSum sum;
  Complex z_pow(1.0, 0.0);
  for (long n = 1; n <= terms; ++n) {
    z_pow = (n % 256 == 0) ? mathieu::pow_int(z, n) : z_pow * z;
    sum.add(z_pow * std::pow(Complex(static_cast<double>(n), 0.0), -alpha));
  }
  return sum.value();
}

// F_mu(r, z) by plain truncated summation (no tail control; the caller picks
// a generous term count).
inline Complex mathieu_series_direct(double mu, double r, Complex z, long terms) {
  mathieu::ComplexCompensatedSum sum;
  Complex z_pow(1.0, 0.0);
  for (long n = 1; n <= terms; ++n) {
    z_pow = (n % 256 == 0) ? mathieu::pow_int(z, n) : z_pow * z;
    double nn = static_cast<double>(n);
    sum.add(2.0 * nn * std::pow(nn * nn + r * r, -(mu + 1.0)) * z_pow);
  }
  return sum.value();
}

inline double rel_err(Complex got, Complex want) {
  double scale = std::abs(want);
  if (scale == 0.0) return std::abs(got - want);
  return std::abs(got - want) / scale;
}

}  // namespace oracles
