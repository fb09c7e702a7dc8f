#pragma once

#include <cmath>

#include "mathieu/types.hpp"

namespace mathieu {

/// Neumaier-compensated accumulator. Tracks the rounding error of each
/// addition and reintroduces it when the total is read.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum + comp; }
};

struct ComplexCompensatedSum {
  CompensatedSum re;
  CompensatedSum im;

  void add(const Complex& z) {
    re.add(z.real());
    im.add(z.imag());
  }

  ComplexCompensatedSum& operator+=(const Complex& z) {
    add(z);
    return *this;
  }

  Complex value() const { return {re.value(), im.value()}; }
};

/// z^n by binary exponentiation; error stays O(log n) ulp instead of O(n).
Complex pow_int(Complex z, long n);

}  // namespace mathieu
