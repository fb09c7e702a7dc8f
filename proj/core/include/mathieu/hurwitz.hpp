#pragma once

#include <optional>

#include "mathieu/rational.hpp"
#include "mathieu/types.hpp"

namespace mathieu {

/// Arguments of zeta(s, q). Requires Re(q) > 0 and s away from the pole at 1.
struct HurwitzQuery {
  Complex s;
  Complex q;
};

/// Euler-Maclaurin evaluation parameters: head-sum length a and number of
/// Bernoulli correction pairs k. The identity is valid for Re(s) > -2k.
struct EulerMaclaurinConfig {
  int offset_a = 10;
  int order_k = 8;
};

/// Configuration used when none is supplied:
///   a = max(ceil|Im s|, ceil|s|, 10) + ceil|q|,  k = max(ceil((2-Re s)/2), 8).
EulerMaclaurinConfig auto_em_config(const Complex& s, const Complex& q);

/// Analytic continuation of zeta(s, q) by the Euler-Maclaurin identity
///
///   zeta(s,q) = sum_{n<a} (n+q)^{-s} + (a+q)^{1-s}/(s-1) + (a+q)^{-s}/2
///             + sum_{j=1..k} B_{2j}/(2j)! (s)_{2j-1} (a+q)^{-s-2j+1} + R,
///
/// with the remainder R replaced by the heuristic estimate 2x the magnitude
/// of the last correction term. Target relative accuracy ~1e-11 in auto mode
/// for |s| <= 40, |q| <= 20.
EvalOutcome hurwitz_zeta(const HurwitzQuery& query,
                         std::optional<EulerMaclaurinConfig> cfg = {});

/// zeta(s) = zeta(s, 1).
EvalOutcome riemann_zeta(const Complex& s);

/// eta(s) = (1 - 2^{1-s}) zeta(s); the removable singularity at s = 1 is
/// filled with the limit value ln 2.
EvalOutcome dirichlet_eta(const Complex& s);

/// Exact continued values at nonpositive integer order:
/// zeta(-n, q) = -B_{n+1}(q)/(n+1).
Complex hurwitz_zeta_neg_int(int n, const Complex& q);
Rational hurwitz_zeta_neg_int(int n, const Rational& q);

}  // namespace mathieu
