#pragma once

#include <functional>

#include "mathieu/types.hpp"

namespace mathieu {

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error = 0.0;  // global error estimate
  long evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 quadrature for a complex-valued
/// integrand on [a, b]. Bisects the panel with the largest error estimate
/// until sum of panel errors <= max(abs_tol, rel_tol * |value|). Throws
/// ConvergenceError if the panel budget runs out first.
QuadratureResult integrate_gk15(const std::function<Complex(double)>& f,
                                double a, double b, double abs_tol,
                                double rel_tol, int max_panels = 4000);

}  // namespace mathieu
