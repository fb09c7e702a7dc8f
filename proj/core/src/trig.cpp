#include "mathieu/trig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "mathieu/hurwitz.hpp"
#include "mathieu/special.hpp"
#include "mathieu/summation.hpp"

namespace mathieu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kTrigCap = 100'000'000;

void check_trig_query(const TrigQuery& query) {
  if (!(query.mu > 0.0)) fail(ErrorKind::domain, "trig: mu must be > 0");
  if (!(query.r > 0.0)) fail(ErrorKind::domain, "trig: r must be > 0");
  if (!(query.x > 1e-12) || !(query.x < 2.0 * kPi - 1e-12)) {
    fail(ErrorKind::domain, "trig: x must lie strictly inside (0, 2 pi)");
  }
}

Complex unit_from_angle(double x) { return unit_circle_point(x); }

// Validated (gamma+1)/alpha for the Zastavnyi parameters.
double zastavnyi_ratio(const ZastavnyiParams& p) {
  if (!(p.a > 0.0)) fail(ErrorKind::parameter, "zastavnyi: a must be > 0");
  if (!(p.alpha > 0.0)) fail(ErrorKind::parameter, "zastavnyi: alpha must be > 0");
  if (!(p.y > 0.0)) fail(ErrorKind::parameter, "zastavnyi: y must be > 0");
  if (p.k_max < 0) fail(ErrorKind::parameter, "zastavnyi: k_max must be >= 0");
  double ratio = (p.gamma + 1.0) / p.alpha;
  if (!(p.mu > std::max(ratio, 0.0))) {
    fail(ErrorKind::parameter, "zastavnyi: requires mu > max{(gamma+1)/alpha, 0}");
  }
  double neg = -ratio;
  double nearest = std::round(neg);
  if (nearest >= 0.0 && std::fabs(neg - nearest) < 1e-9) {
    fail(ErrorKind::parameter, "zastavnyi: -(gamma+1)/alpha must avoid 0, 1, 2, ...");
  }
  return ratio;
}

// zeta(-alpha k - gamma, a): exact Bernoulli value at (near-)integer order,
// Euler-Maclaurin continuation otherwise.
double zeta_for_zastavnyi(double s, double a) {
  double nearest = std::round(s);
  if (nearest <= 0.0 && std::fabs(s - nearest) < 1e-12) {
    return hurwitz_zeta_neg_int(static_cast<int>(-nearest), Complex(a, 0.0)).real();
  }
  if (std::fabs(s - 1.0) < 1e-10) {
    fail(ErrorKind::parameter, "zastavnyi: zeta order hit the pole at 1");
  }
  return hurwitz_zeta(HurwitzQuery{Complex(s, 0.0), Complex(a, 0.0)}).value.real();
}

// Shared engine: sum_{n>=2} a_n trig(n x) with the Dirichlet-kernel tail bound
// a_N / sin(x/2) once n exceeds the decreasing-start index n0.
EvalOutcome trig_tail_sum(const std::function<double(long)>& coeff, long n0,
                          double x, double tol, bool use_sine) {
  const double sin_half = std::sin(x / 2.0);
  const double inv_kernel = 1.0 / sin_half;

  // Incremental rotation with periodic resync.
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  double c = std::cos(2.0 * x);
  double s = std::sin(2.0 * x);

  CompensatedSum sum;
  long n = 2;
  double bound = std::numeric_limits<double>::infinity();
  while (n <= kTrigCap) {
    double a_n = coeff(n);
    if (n > n0) {
      bound = a_n * inv_kernel;  // tail starting at this term
      if (bound <= tol) break;   // truncate before adding term n
    }
    sum.add(a_n * (use_sine ? s : c));
    ++n;
    if (n % 4096 == 0) {
      double angle = std::fmod(static_cast<double>(n) * x, 2.0 * kPi);
      c = std::cos(angle);
      s = std::sin(angle);
    } else {
      double c_next = c * cx - s * sx;
      s = s * cx + c * sx;
      c = c_next;
    }
  }
  if (bound > tol) {
    fail(ErrorKind::tolerance, "trig series: term cap reached before tolerance");
  }
  double value = sum.value();
  require_finite(value, "trig series");
  return EvalOutcome{Complex(value, 0.0), bound, BoundKind::certified, n - 2,
                     Method::direct_sum};
}

double family_coefficient(const SeriesFamilyParams& fam, long n) {
  double ln_n = std::log(static_cast<double>(n));
  double ln_ln = std::log(ln_n);
  double num = std::exp(fam.alpha * ln_n + fam.gamma * ln_ln);
  double base = std::exp(fam.beta * ln_n + fam.delta * ln_ln) + fam.r * fam.r;
  return num * std::exp(-(fam.mu + 1.0) * std::log(base));
}

// First index from which the coefficients were observed to decrease: scan for
// 50 consecutive decreases starting at the analytic turning-point estimate.
long find_decreasing_start(const std::function<double(long)>& coeff, long n_begin) {
  constexpr long kScanCap = 2'000'000;
  constexpr int kStreak = 50;
  long n = std::max<long>(2, n_begin);
  double prev = coeff(n);
  if (!(prev > 0.0) || !std::isfinite(prev)) {
    fail(ErrorKind::parameter, "series family: coefficients must be positive");
  }
  int streak = 0;
  long run_start = n;
  while (n < kScanCap) {
    ++n;
    double cur = coeff(n);
    if (!std::isfinite(cur)) {
      fail(ErrorKind::parameter, "series family: coefficient overflow");
    }
    if (cur < prev) {
      if (streak == 0) run_start = n;
      ++streak;
      if (streak >= kStreak) return run_start;
    } else {
      streak = 0;
    }
    prev = cur;
  }
  fail(ErrorKind::parameter,
       "series family: coefficients not eventually decreasing within scan range");
}

// Analytic turning point of n^alpha / (n^beta ... + r^2)^{mu+1}: ignoring slow
// log factors the coefficient decreases once n^beta theta > alpha r^2.
long turning_point_estimate(double alpha, double beta, double theta, double r) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(theta > 0.0)) return 2;
  double est = std::pow(alpha * r * r / theta, 1.0 / beta);
  if (!(est > 2.0)) return 2;
  return static_cast<long>(std::min(est + 2.0, 1.5e6));
}

void check_family_x(double x) {
  if (!(x > 1e-12) || !(x < kPi - 1e-12)) {
    fail(ErrorKind::domain, "series family: x must lie strictly inside (0, pi)");
  }
}

EvalOutcome general_trig_series(const SeriesFamilyParams& fam, double x, double tol,
                                bool use_sine) {
  check_family_x(x);
  if (!(tol > 0.0)) fail(ErrorKind::domain, "series family: tol must be > 0");
  if (!(fam.mu >= 0.0) || !(fam.r >= 0.0)) {
    fail(ErrorKind::parameter, "series family: requires mu >= 0 and r >= 0");
  }
  auto coeff = [&fam](long n) { return family_coefficient(fam, n); };
  double theta = theta_exponent(fam);
  long n_turn = turning_point_estimate(fam.alpha, fam.beta, theta, fam.r);
  long n0 = find_decreasing_start(coeff, n_turn);
  return trig_tail_sum(coeff, n0, x, tol, use_sine);
}

}  // namespace

EvalOutcome cosine_series(const TrigQuery& query, double tol) {
  check_trig_query(query);
  EvalOutcome f = mathieu_direct(
      MathieuParams{query.mu, query.r, unit_from_angle(query.x)}, tol);
  EvalOutcome out = f;
  out.value = Complex(f.value.real(), 0.0);
  return out;
}

EvalOutcome sine_series(const TrigQuery& query, double tol) {
  check_trig_query(query);
  EvalOutcome f = mathieu_direct(
      MathieuParams{query.mu, query.r, unit_from_angle(query.x)}, tol);
  EvalOutcome out = f;
  out.value = Complex(f.value.imag(), 0.0);
  return out;
}

TrigAsymResult trig_asym_eval(const TrigQuery& query, std::optional<int> k_max) {
  check_trig_query(query);
  EvalOutcome f = asym_eval(
      MathieuParams{query.mu, query.r, unit_from_angle(query.x)}, k_max);
  TrigAsymResult out;
  out.cos_part = f;
  out.cos_part.value = Complex(f.value.real(), 0.0);
  out.sin_part = f;
  out.sin_part.value = Complex(f.value.imag(), 0.0);
  return out;
}

EvalOutcome zastavnyi_expansion(const ZastavnyiParams& params) {
  const double ratio = zastavnyi_ratio(params);
  const double y = params.y;

  double leading = complex_gamma(Complex(ratio, 0.0)).real() *
                   complex_gamma(Complex(params.mu - ratio, 0.0)).real() /
                   (params.alpha * complex_gamma(Complex(params.mu, 0.0)).real()) *
                   std::exp(-ratio * std::log(y));

  CompensatedSum power_sum;
  double sign = 1.0;
  double factorial = 1.0;
  double y_pow = 1.0;
  for (int k = 0; k <= params.k_max; ++k) {
    if (k > 0) {
      factorial *= static_cast<double>(k);
      y_pow *= y;
      sign = -sign;
    }
    double zeta_k = zeta_for_zastavnyi(-params.alpha * k - params.gamma, params.a);
    power_sum.add(sign / factorial * pochhammer(params.mu, k) * zeta_k * y_pow);
  }
  int k1 = params.k_max + 1;
  double omitted = std::fabs(
      1.0 / (factorial * k1) * pochhammer(params.mu, k1) *
      zeta_for_zastavnyi(-params.alpha * k1 - params.gamma, params.a) *
      y_pow * y);

  double value = leading + power_sum.value();
  require_finite(value, "zastavnyi_expansion");
  return EvalOutcome{Complex(value, 0.0), omitted, BoundKind::heuristic,
                     params.k_max + 2, Method::zastavnyi};
}

EvalOutcome zastavnyi_direct(const ZastavnyiParams& params, double tol) {
  const double ratio = zastavnyi_ratio(params);
  if (!(tol > 0.0)) fail(ErrorKind::domain, "zastavnyi_direct: tol must be > 0");
  const double a = params.a;
  const double y = params.y;
  const double alpha = params.alpha;
  const double gamma = params.gamma;
  const double mu = params.mu;
  (void)ratio;  // parameters validated; convergence needs alpha mu - gamma > 1

  auto term = [&](double nu) {
    double t = nu + a;
    double ln_t = std::log(t);
    return std::exp(gamma * ln_t) *
           std::exp(-mu * std::log(y * std::exp(alpha * ln_t) + 1.0));
  };

  // Decreasing once y t^alpha (mu alpha - gamma) > gamma.
  double nu_dec = 0.0;
  if (gamma > 0.0) {
    double t_dec = std::pow(gamma / (y * (mu * alpha - gamma)), 1.0 / alpha);
    nu_dec = std::max(0.0, std::ceil(t_dec - a));
  }

  const double decay = alpha * mu - gamma - 1.0;  // > 0 by the parameter check
  CompensatedSum sum;
  double nu = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  const double cap = 1e9;
  while (nu < cap) {
    sum.add(term(nu));
    if (nu >= nu_dec) {
      // sum_{k>nu} term(k) <= int_nu^inf (t+a)^gamma (y (t+a)^alpha)^{-mu} dt
      tail = std::exp(-mu * std::log(y)) *
             std::exp((gamma - alpha * mu + 1.0) * std::log(nu + a)) / decay;
      if (tail <= tol) break;
    }
    nu += 1.0;
  }
  if (tail > tol) {
    fail(ErrorKind::tolerance, "zastavnyi_direct: term cap reached before tolerance");
  }
  double value = sum.value();
  require_finite(value, "zastavnyi_direct");
  return EvalOutcome{Complex(value, 0.0), tail, BoundKind::certified,
                     static_cast<long>(nu) + 1, Method::direct_sum};
}

AsymExpansion cosine_multisection_expansion(double mu, const RationalAngle& angle,
                                            int k_max) {
  if (!(mu > 0.0)) fail(ErrorKind::domain, "cosine_multisection_expansion: mu > 0");
  if (k_max < 0 || k_max > 80) {
    fail(ErrorKind::domain, "cosine_multisection_expansion: k_max out of range");
  }
  const int q = angle.q;
  const int p = angle.p;
  const int two_q = 2 * q;

  // cos(j pi / q) as an exact rational where one exists (q <= 3 covers the
  // whole acceptance grid).
  auto rational_cos = [&](int j) -> std::optional<Rational> {
    int w = j % (2 * two_q);  // period 2q in j <-> 2 pi
    w = w % two_q;            // cos has period 2 pi = two_q * (pi/q)
    int folded = std::min(w, two_q - w);  // cos(-t) = cos(t)
    // folded in [0, q]; cos(folded pi / q)
    if (folded == 0) return Rational(1);
    if (2 * folded == q) return Rational(0);
    if (folded == q) return Rational(-1);
    if (q == 3) {
      if (folded == 1) return Rational(1, 2);
      if (folded == 2) return Rational(-1, 2);
    }
    return std::nullopt;
  };

  bool exact = true;
  for (int m = 1; m < two_q && exact; ++m) {
    exact = rational_cos(m * p).has_value();
  }

  AsymExpansion expansion;
  expansion.mu = mu;
  expansion.z = angle.unit();
  expansion.k_max = k_max;
  expansion.coeffs.reserve(static_cast<size_t>(k_max) + 1);

  for (int k = 0; k <= k_max; ++k) {
    const int order = 2 * k + 1;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double scale = 2.0 * sign * binom_shifted(mu, k) *
                   std::pow(static_cast<double>(two_q), static_cast<double>(order));
    double bracket;
    if (exact) {
      Rational acc = riemann_zeta_neg_int(order);
      for (int m = 1; m < two_q; ++m) {
        acc += *rational_cos(m * p) * hurwitz_zeta_neg_int(order, Rational(m, two_q));
      }
      bracket = to_double(acc);
    } else {
      CompensatedSum acc;
      acc.add(to_double(riemann_zeta_neg_int(order)));
      for (int m = 1; m < two_q; ++m) {
        acc.add(std::cos(static_cast<double>(m) * p * kPi / q) *
                to_double(hurwitz_zeta_neg_int(order, Rational(m, two_q))));
      }
      bracket = acc.value();
    }
    expansion.coeffs.push_back(Complex(scale * bracket, 0.0));
  }
  return expansion;
}

double theta_exponent(const SeriesFamilyParams& fam) {
  return fam.beta * (fam.mu + 1.0) - fam.alpha;
}

EvalOutcome general_sine_series(const SeriesFamilyParams& fam, double x, double tol) {
  return general_trig_series(fam, x, tol, /*use_sine=*/true);
}

EvalOutcome general_cosine_series(const SeriesFamilyParams& fam, double x, double tol) {
  return general_trig_series(fam, x, tol, /*use_sine=*/false);
}

double smallx_leading_sine(const SeriesFamilyParams& fam, double x) {
  const double theta = theta_exponent(fam);
  const double log_power = fam.gamma - fam.delta * (fam.mu + 1.0);
  if (theta < -1e-12 || theta >= 2.0 - 1e-12) {
    fail(ErrorKind::range, "smallx_leading_sine: requires 0 <= theta < 2");
  }
  if (!(x > 0.0)) fail(ErrorKind::range, "smallx_leading_sine: x must be > 0");
  double log_factor = 1.0;
  if (log_power != 0.0) {
    if (!(x < 1.0)) {
      fail(ErrorKind::range,
           "smallx_leading_sine: log-power law needs x in (0, 1)");
    }
    log_factor = std::pow(std::log(1.0 / x), log_power);
  }
  if (std::fabs(theta) <= 1e-12) {
    if (!(log_power < 0.0)) {
      fail(ErrorKind::range,
           "smallx_leading_sine: theta = 0 requires gamma - delta (mu+1) < 0");
    }
    return log_factor / x;
  }
  double gamma_theta = complex_gamma(Complex(theta, 0.0)).real();
  return kPi / (2.0 * gamma_theta * std::sin(kPi * theta / 2.0)) *
         std::pow(x, theta - 1.0) * log_factor;
}

EvalOutcome smallx_hartman_wintner(const SeriesFamilyParams& fam, double x,
                                   double tol) {
  const double theta = theta_exponent(fam);
  if (!(theta > 2.0 + 1e-12)) {
    fail(ErrorKind::range, "smallx_hartman_wintner: requires theta > 2");
  }
  if (!(x >= 0.0)) fail(ErrorKind::range, "smallx_hartman_wintner: x must be >= 0");
  if (!(tol > 0.0)) fail(ErrorKind::domain, "smallx_hartman_wintner: tol > 0");
  if (x == 0.0) {
    return EvalOutcome{Complex(0.0, 0.0), 0.0, BoundKind::certified, 0,
                       Method::moment_sum};
  }

  const double c = fam.gamma - fam.delta * (fam.mu + 1.0);
  // Majorant n a_n <= n^{1-theta} (log n)^c, valid for every n >= 2; the
  // integral comparison needs the majorant decreasing: log n > c/(theta-1).
  long n_dec = 2;
  if (c > 0.0) {
    n_dec = std::max<long>(2, static_cast<long>(std::ceil(std::exp(c / (theta - 1.0)))));
  }

  const double tol_m = tol / x;
  CompensatedSum sum;
  long n = 2;
  double tail = std::numeric_limits<double>::infinity();
  while (n <= kTrigCap) {
    sum.add(static_cast<double>(n) * family_coefficient(fam, n));
    if (n >= n_dec) {
      double ln_n = std::log(static_cast<double>(n));
      double base = std::exp((2.0 - theta) * ln_n + c * std::log(ln_n)) / (theta - 2.0);
      if (c > 0.0) {
        double slack = 1.0 - c / ((theta - 2.0) * ln_n);
        tail = (slack > 0.0) ? base / slack : std::numeric_limits<double>::infinity();
      } else {
        tail = base;
      }
      if (tail <= tol_m) break;
    }
    ++n;
  }
  if (tail > tol_m) {
    fail(ErrorKind::tolerance, "smallx_hartman_wintner: cap reached before tolerance");
  }
  double value = x * sum.value();
  require_finite(value, "smallx_hartman_wintner");
  return EvalOutcome{Complex(value, 0.0), x * tail, BoundKind::certified, n - 1,
                     Method::moment_sum};
}

double log_factorial_coefficient(double alpha, double beta, double mu, double r,
                                 long n) {
  double log_fact = std::lgamma(static_cast<double>(n) + 1.0);
  double ln_l = std::log(log_fact);
  double num = std::exp(alpha * ln_l);
  double base = std::exp(beta * ln_l) + r * r;
  return num * std::exp(-(mu + 1.0) * std::log(base));
}

LogFactorialSineOutcome log_factorial_sine_series(double alpha, double beta,
                                                  double mu, double r, double x,
                                                  double tol) {
  check_family_x(x);
  if (!(mu >= 0.0) || !(r >= 0.0)) {
    fail(ErrorKind::parameter, "log_factorial_sine_series: mu >= 0 and r >= 0");
  }
  const double theta = beta * (mu + 1.0) - alpha;
  auto coeff = [=](long n) {
    return log_factorial_coefficient(alpha, beta, mu, r, n);
  };
  long n_turn = turning_point_estimate(alpha, beta, theta, r);
  long n0 = find_decreasing_start(coeff, n_turn);

  LogFactorialSineOutcome out;
  out.theta = theta;
  out.sum = trig_tail_sum(coeff, n0, x, tol, /*use_sine=*/true);

  if (theta > 2.0 + 1e-12 && x > 0.0) {
    // Moment sum with the majorant n b_n <= 2^theta n^{1-theta} (log n)^{-theta}
    // (log n! >= n log n / 2 for n >= 8).
    const double tol_m = tol / x;
    CompensatedSum sum;
    long n = 2;
    double tail = std::numeric_limits<double>::infinity();
    while (n <= kTrigCap) {
      sum.add(static_cast<double>(n) * coeff(n));
      if (n >= 8) {
        double ln_n = std::log(static_cast<double>(n));
        tail = std::exp(theta * std::numbers::ln2 +
                        (2.0 - theta) * ln_n - theta * std::log(ln_n)) /
               (theta - 2.0);
        if (tail <= tol_m) break;
      }
      ++n;
    }
    if (tail <= tol_m) {
      double value = x * sum.value();
      out.hartman_wintner = EvalOutcome{Complex(value, 0.0), x * tail,
                                        BoundKind::certified, n - 1,
                                        Method::moment_sum};
    }
  }
  return out;
}

}  // namespace mathieu
