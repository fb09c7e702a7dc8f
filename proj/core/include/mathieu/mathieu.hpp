#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mathieu/types.hpp"

namespace mathieu {

/// Parameters of F_mu(r, z) = sum_{n>=1} 2 n z^n / (n^2 + r^2)^{mu+1}.
/// mu > 0, r > 0, |z| <= 1. z = 1 (the classical series) is accepted by the
/// direct evaluator only; the asymptotic operations require z != 1.
struct MathieuParams {
  double mu;
  double r;
  Complex z;
};

/// Mellin variable of (M F_mu)(u).
struct MellinQuery {
  Complex u;
};

/// Coefficients of the large-r expansion
///   F_mu(r,z) ~ sum_k c_k r^{-2k-2mu-2},
///   c_k = 2 (-1)^k binom(k+mu, k) Li_{-2k-1}(z).
/// c_k depends on (mu, z) only, never on r.
struct AsymExpansion {
  double mu = 0.0;
  Complex z{0.0, 0.0};
  std::vector<Complex> coeffs;
  int k_max = -1;
};

/// Truncated direct summation with a certified tail bound: the integral
/// comparison (N^2+r^2)^{-mu}/mu (valid for all |z| <= 1), sharpened for
/// z != 1 by the summation-by-parts bound 2 a_{N+1} / |1-z| once the
/// coefficients decrease. Compensated summation throughout.
EvalOutcome mathieu_direct(const MathieuParams& params, double tol);

/// Closed form of the Mellin transform w.r.t. r:
///   Gamma(mu+1-u/2) Gamma(u/2) / (2 Gamma(mu+1)) * Li_{2mu+1-u}(z).
Complex mellin_closed(const MellinQuery& query, double mu, const Complex& z);

/// Independent oracle: adaptive quadrature of int_0^R r^{u-1} F_mu(r,z) dr
/// plus the analytic tail from the leading asymptotic term. Valid strip
/// 0 < Re(u) < 2mu+2 for z != 1.
EvalOutcome mellin_numeric(const MellinQuery& query, double mu, const Complex& z,
                           double tol);

AsymExpansion asym_coeffs(double mu, const Complex& z, int k_max);

/// Evaluates the expansion at r; in auto mode truncates at the smallest
/// term of the (divergent) series. Heuristic bound = first omitted term.
EvalOutcome asym_eval(const MathieuParams& params,
                      std::optional<int> k_max = {});

/// Least-squares slope of log|F| against log r over the grid; expected
/// -2mu-2 for z != 1 and -2mu for z = 1.
double growth_order_probe(double mu, const Complex& z,
                          std::span<const double> r_grid, double tol = 1e-14);

}  // namespace mathieu
