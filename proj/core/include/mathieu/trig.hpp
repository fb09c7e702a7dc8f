#pragma once

#include <optional>

#include "mathieu/mathieu.hpp"
#include "mathieu/polylog.hpp"
#include "mathieu/types.hpp"

namespace mathieu {

/// Arguments of the trigonometric Mathieu series (z = e^{ix} != 1).
struct TrigQuery {
  double mu;
  double r;
  double x;  // strictly inside (0, 2*pi)
};

/// Parameters of the generalized families with coefficients
///   a_n = n^alpha (log n)^gamma / (n^beta (log n)^delta + r^2)^{mu+1},
/// n >= 2. The decay exponent is theta = beta*(mu+1) - alpha.
struct SeriesFamilyParams {
  double alpha = 0.0;
  double beta = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double r = 0.0;
};

/// Parameters of the expansion of sum_{nu>=0} (nu+a)^gamma / (y (nu+a)^alpha + 1)^mu
/// as y -> 0. Requires mu > max{(gamma+1)/alpha, 0} and -(gamma+1)/alpha
/// away from the nonnegative integers.
struct ZastavnyiParams {
  double a;
  double gamma;
  double alpha;
  double mu;
  double y;
  int k_max;
};

/// Real and imaginary parts of F_mu(r, e^{ix}) by certified direct summation.
EvalOutcome cosine_series(const TrigQuery& query, double tol);
EvalOutcome sine_series(const TrigQuery& query, double tol);

struct TrigAsymResult {
  EvalOutcome cos_part;
  EvalOutcome sin_part;
};

/// (Re, Im) of the large-r expansion at z = e^{ix}.
TrigAsymResult trig_asym_eval(const TrigQuery& query,
                              std::optional<int> k_max = {});

/// The power/gamma expansion; heuristic bound = first omitted y-power term.
EvalOutcome zastavnyi_expansion(const ZastavnyiParams& params);

/// Direct summation of the same series with a certified integral tail bound
/// (the independent check of the expansion).
EvalOutcome zastavnyi_direct(const ZastavnyiParams& params, double tol);

/// Cos-part expansion coefficients at a rational angle assembled from
/// zeta(-2k-1) and zeta(-2k-1, m/2q) with cos(m p pi/q) weights:
///   chat_k = Re( 2 (-1)^k binom(k+mu,k) (2q)^{2k+1}
///                [ zeta(-2k-1) + sum_m e^{i m p pi/q} zeta(-2k-1, m/2q) ] ).
/// The zeta values are exact rationals; for q <= 3 the weights are rational
/// too and the whole coefficient is assembled exactly.
AsymExpansion cosine_multisection_expansion(double mu, const RationalAngle& angle,
                                            int k_max);

/// theta = beta*(mu+1) - alpha.
double theta_exponent(const SeriesFamilyParams& fam);

/// sum_{n>=2} a_n sin(nx) (resp. cos) with summation-by-parts tail control:
/// past the turning point of a_n the truncation carries the certified
/// Dirichlet-kernel bound a_N / sin(x/2).
EvalOutcome general_sine_series(const SeriesFamilyParams& fam, double x, double tol);
EvalOutcome general_cosine_series(const SeriesFamilyParams& fam, double x, double tol);

/// Leading small-x law: for 0 < theta < 2,
///   pi / (2 Gamma(theta) sin(pi theta/2)) x^{theta-1} (log 1/x)^{gamma-delta(mu+1)};
/// for theta = 0 (requires gamma - delta(mu+1) < 0),
///   (1/x) (log 1/x)^{gamma-delta(mu+1)}.
double smallx_leading_sine(const SeriesFamilyParams& fam, double x);

/// Hartman-Wintner regime theta > 2: x * sum_{n>=2} n a_n, the moment sum
/// with a certified integral-comparison tail bound.
EvalOutcome smallx_hartman_wintner(const SeriesFamilyParams& fam, double x,
                                   double tol);

/// The log-factorial coefficient at index n:
/// (log n!)^alpha / ((log n!)^beta + r^2)^{mu+1}.
double log_factorial_coefficient(double alpha, double beta, double mu, double r,
                                 long n);

struct LogFactorialSineOutcome {
  EvalOutcome sum;
  double theta = 0.0;
  /// Present when theta > 2: the prediction x * sum n b_n.
  std::optional<EvalOutcome> hartman_wintner;
};

/// Sine series with log-factorial coefficients; same summation-by-parts
/// contract as general_sine_series.
LogFactorialSineOutcome log_factorial_sine_series(double alpha, double beta,
                                                  double mu, double r, double x,
                                                  double tol);

}  // namespace mathieu
