#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mathieu/rational.hpp"
#include "mathieu/types.hpp"

namespace mathieu {

/// Arguments of Li_alpha(z). z must stay off the cut [1, inf).
struct PolylogQuery {
  Complex alpha;
  Complex z;
};

/// Eulerian numbers A(n, k), 0 <= k < n (A(0,0) = 1), exact integers.
/// Row n supplies the closed form Li_{-n}(z) = sum_k A(n,k) z^{k+1} / (1-z)^{n+1}.
class EulerianTriangle {
 public:
  static EulerianTriangle build(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  const BigInt& at(int n, int k) const;
  std::span<const BigInt> row(int n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Cached Eulerian row as doubles (throws DomainError once entries overflow).
std::vector<double> eulerian_row_d(int n);

/// Angle x = p*pi/q in (0, 2*pi), reduced; represents z = e^{ix} != 1.
struct RationalAngle {
  int p = 1;
  int q = 1;

  static RationalAngle reduced(int p, int q);

  double x() const;
  /// e^{i p pi / q}; exact component values at the cardinal angles.
  Complex unit() const;
};

/// Tries to recognize x/pi as a small-denominator rational (q <= max_q).
std::optional<RationalAngle> detect_rational_angle(double x, int max_q = 64,
                                                   double tol = 1e-12);

/// e^{ix}, with exact components at the cardinal angles pi/2, pi, 3 pi/2.
Complex unit_circle_point(double x);

/// Defining series sum_{n>=1} z^n / n^alpha, valid for |z| < 1, or |z| = 1
/// with Re(alpha) > 1 and z != 1. Certified tail bound.
EvalOutcome polylog_series(const PolylogQuery& query, double tol);

/// Closed form at nonpositive integer order, for any z != 1 (including
/// |z| > 1): a rational function of z assembled from Eulerian numbers.
Complex polylog_neg_int(int n, const Complex& z);
RationalComplex polylog_neg_int(int n, const RationalComplex& z);

/// Jonquiere's representation through two Hurwitz zeta values,
///   Li_alpha(z) = Gamma(1-alpha)/(2 pi)^{1-alpha}
///     ( i^{1-alpha} zeta(1-alpha, 1/2 + log(-z)/(2 pi i))
///     + i^{alpha-1} zeta(1-alpha, 1/2 - log(-z)/(2 pi i)) ),
/// principal log(-z), i^w := e^{i pi w / 2}. Valid off [0, inf) and for
/// alpha away from the nonnegative integers.
EvalOutcome polylog_jonquiere(const PolylogQuery& query);

/// Vertical-line integral representation evaluated by adaptive quadrature on
/// [-T, T]; the certified truncation estimate decays like
/// exp((|arg(-z)| - pi) T). Requires z off [0, inf) and Re(alpha) >= 0.
EvalOutcome polylog_lindelof(const PolylogQuery& query, double half_width);

/// Half-width that pushes the Lindelof truncation estimate below tol.
double lindelof_half_width(const Complex& z, double tol);

/// 2q-term multisection through Hurwitz zeta values at rational shifts:
///   Li_alpha(e^{i p pi/q}) = (2q)^{-alpha} ( zeta(alpha)
///       + sum_{m=1}^{2q-1} e^{i m p pi / q} zeta(alpha, m/2q) ),
/// for alpha != 1. Negative integer orders go through the exact
/// Bernoulli-polynomial values.
EvalOutcome polylog_unit_circle(const Complex& alpha, const RationalAngle& angle);

/// Fully rational multisection value for order -n when the 2q-th roots of
/// unity are Gaussian rationals (q <= 2).
RationalComplex polylog_unit_circle_exact(int n, const RationalAngle& angle);

/// Dispatcher: negative-integer closed form when alpha is a nonpositive
/// integer, the defining series for |z| <= 0.95, Jonquiere otherwise; on the
/// unit circle integer orders >= 2 fall back to multisection at recognized
/// rational angles or to the series for Re(alpha) > 1.
EvalOutcome polylog(const PolylogQuery& query, double tol);

}  // namespace mathieu
