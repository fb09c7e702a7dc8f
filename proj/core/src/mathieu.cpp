#include "mathieu/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mathieu/polylog.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special.hpp"
#include "mathieu/summation.hpp"

namespace mathieu {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kDirectCap = 1'000'000'000;
constexpr int kAsymKCap = 80;

void check_params(const MathieuParams& p, bool allow_z_one) {
  if (!(p.mu > 0.0)) fail(ErrorKind::domain, "mathieu: mu must be > 0");
  if (!(p.r > 0.0)) fail(ErrorKind::domain, "mathieu: r must be > 0");
  if (std::abs(p.z) > 1.0 + 1e-12) fail(ErrorKind::domain, "mathieu: |z| must be <= 1");
  if (!allow_z_one && std::abs(p.z - Complex(1.0, 0.0)) < 1e-12) {
    fail(ErrorKind::singular, "mathieu: z = 1 not allowed for this operation");
  }
}

// a_n = 2 n / (n^2 + r^2)^{mu+1}, the coefficient of z^n.
double coefficient(double n, double r2, double mu) {
  return 2.0 * n * std::pow(n * n + r2, -(mu + 1.0));
}

// Integral-comparison tail bound, valid uniformly for |z| <= 1:
//   sum_{n>N} |a_n| <= int_N^inf 2 t (t^2+r^2)^{-mu-1} dt = (N^2+r^2)^{-mu}/mu
// (the integrand decreases for t >= r / sqrt(2 mu + 1); N >= r suffices).
double uniform_tail(double n, double r2, double mu) {
  return std::pow(n * n + r2, -mu) / mu;
}

}  // namespace

EvalOutcome mathieu_direct(const MathieuParams& params, double tol) {
  check_params(params, /*allow_z_one=*/true);
  if (!(tol > 0.0)) fail(ErrorKind::domain, "mathieu_direct: tol must be > 0");
  const Complex z = params.z;
  const double mu = params.mu;
  const double r = params.r;
  const double r2 = r * r;

  if (std::abs(z) < 1e-300) {
    return EvalOutcome{Complex(0, 0), 0.0, BoundKind::certified, 0, Method::direct_sum};
  }

  // Pick N with a safety margin so the realized tail sits well under tol.
  const double tol_eff = tol / 8.0;
  const double dist_one = std::abs(Complex(1.0, 0.0) - z);
  const double n_floor = std::max(1.0, std::ceil(r));

  // Uniform bound: (N^2 + r^2)^{-mu} <= mu * tol.
  double n_uniform = std::numeric_limits<double>::infinity();
  double log_target = -std::log(mu * tol_eff) / mu;  // ln(N^2 + r^2) target
  if (log_target < 700.0) {
    n_uniform = std::ceil(std::sqrt(std::max(std::exp(log_target) - r2, 0.0)));
  }

  // Summation-by-parts bound for z != 1 once a_n decreases:
  //   |sum_{n>N} a_n z^n| <= 2 a_{N+1} / |1-z|  (and a_n <= 2 n^{-2mu-1}).
  double n_abel = std::numeric_limits<double>::infinity();
  if (dist_one >= 1e-12) {
    n_abel = std::ceil(std::pow(4.0 / (dist_one * tol_eff), 1.0 / (2.0 * mu + 1.0)));
  }

  double n_target = std::max(n_floor, std::min(n_uniform, n_abel));
  if (!(n_target < static_cast<double>(kDirectCap))) {
    fail(ErrorKind::tolerance,
         "mathieu_direct: requested tolerance needs more than 1e9 terms");
  }
  const long N = static_cast<long>(n_target);

  ComplexCompensatedSum sum;
  Complex z_pow(1.0, 0.0);
  for (long n = 1; n <= N; ++n) {
    // Resync the power periodically so rounding drift stays O(log n) ulp.
    z_pow = (n % 256 == 0) ? pow_int(z, n) : z_pow * z;
    sum.add(coefficient(static_cast<double>(n), r2, mu) * z_pow);
  }

  double bound = uniform_tail(static_cast<double>(N), r2, mu);
  if (dist_one >= 1e-12) {
    double a_next = coefficient(static_cast<double>(N + 1), r2, mu);
    bound = std::min(bound, 2.0 * a_next / dist_one);
  }
  Complex value = sum.value();
  require_finite(value, "mathieu_direct");
  return EvalOutcome{value, bound, BoundKind::certified, N, Method::direct_sum};
}

Complex mellin_closed(const MellinQuery& query, double mu, const Complex& z) {
  if (!(mu > 0.0)) fail(ErrorKind::domain, "mellin_closed: mu must be > 0");
  if (std::abs(z) > 1.0 + 1e-12 || std::abs(z - Complex(1.0, 0.0)) < 1e-12) {
    fail(ErrorKind::domain, "mellin_closed: requires |z| <= 1, z != 1");
  }
  const Complex u = query.u;
  // Poles of Gamma(u/2) at u = -2k and of Gamma(mu+1-u/2) at u = 2k+2mu+2.
  auto near_gamma_pole = [](const Complex& w) {
    double nearest = std::round(w.real());
    return nearest <= 0.0 && std::abs(w - Complex(nearest, 0.0)) < 1e-9;
  };
  if (near_gamma_pole(u / 2.0) || near_gamma_pole(mu + 1.0 - u / 2.0)) {
    fail(ErrorKind::pole, "mellin_closed: u at a pole of the gamma factors");
  }
  // The 2n in the summand cancels the 1/2 of the Beta integral
  // int_0^inf t^{u-1} (1+t^2)^{-mu-1} dt, leaving Gamma(mu+1) alone in the
  // denominator (cross-checked against the quadrature oracle).
  EvalOutcome li = polylog(PolylogQuery{2.0 * mu + 1.0 - u, z}, 1e-12);
  Complex value = complex_gamma(mu + 1.0 - u / 2.0) * complex_gamma(u / 2.0) /
                  complex_gamma(Complex(mu + 1.0, 0.0)) * li.value;
  require_finite(value, "mellin_closed");
  return value;
}

EvalOutcome mellin_numeric(const MellinQuery& query, double mu, const Complex& z,
                           double tol) {
  if (!(mu > 0.0)) fail(ErrorKind::domain, "mellin_numeric: mu must be > 0");
  if (!(tol > 0.0)) fail(ErrorKind::domain, "mellin_numeric: tol must be > 0");
  const Complex u = query.u;
  const double dist_one = std::abs(Complex(1.0, 0.0) - z);
  if (std::abs(z) > 1.0 + 1e-12 || dist_one < 1e-12) {
    fail(ErrorKind::domain, "mellin_numeric: requires |z| <= 1, z != 1");
  }
  if (!(u.real() > 1e-9) || !(u.real() < 2.0 * mu + 2.0 - 1e-9)) {
    fail(ErrorKind::domain,
         "mellin_numeric: valid strip is 0 < Re(u) < 2 mu + 2 for z != 1");
  }

  const double R = 50.0 * (1.0 + mu) / std::min(1.0, dist_one);
  const Complex c0 = 2.0 * polylog_neg_int(1, z);   // leading asymptotic coefficient
  const Complex c1 = -2.0 * (mu + 1.0) * polylog_neg_int(3, z);

  // Analytic tail from F ~ c0 r^{-2mu-2} beyond R.
  const Complex tail = c0 * std::pow(Complex(R, 0.0), u - 2.0 * mu - 2.0) /
                       (2.0 * mu + 2.0 - u);
  const double tail_err = std::abs(c1) * std::pow(R, u.real() - 2.0 * mu - 4.0) /
                          (2.0 * mu + 4.0 - u.real());

  // int_0^1 r^{u-1} F dr with r = v^m flattening the r -> 0 power.
  const int m_sub = std::clamp(static_cast<int>(std::ceil(2.0 / u.real())), 1, 8);
  double f_tol = 1e-8;

  const Complex zz = z;
  auto piece_small = [mu, u, zz, m_sub](double f_tol_inner) {
    return [=](double v) -> Complex {
      double rr = std::pow(v, static_cast<double>(m_sub));
      Complex fv =
          mathieu_direct(MathieuParams{mu, std::max(rr, 1e-300), zz}, f_tol_inner)
              .value;
      return static_cast<double>(m_sub) *
             std::exp((static_cast<double>(m_sub) * u - 1.0) * std::log(v)) * fv;
    };
  };
  auto piece_large = [mu, u, zz](double f_tol_inner) {
    return [=](double rr) -> Complex {
      Complex fv = mathieu_direct(MathieuParams{mu, rr, zz}, f_tol_inner).value;
      return std::pow(Complex(rr, 0.0), u - 1.0) * fv;
    };
  };

  // Scale pass at ~3% accuracy, then the refined pass.
  QuadratureResult rough_small =
      integrate_gk15(piece_small(f_tol), 0.0, 1.0, 1e-10, 0.03, 200);
  QuadratureResult rough_large =
      integrate_gk15(piece_large(f_tol), 1.0, R, 1e-10, 0.03, 400);
  double scale =
      std::max(std::abs(rough_small.value + rough_large.value + tail), 1e-12);

  f_tol = std::min(1e-8, tol * scale / (6.0 * R));
  const double abs_tol = tol * scale / 4.0;
  QuadratureResult fine_small =
      integrate_gk15(piece_small(f_tol), 0.0, 1.0, abs_tol / 2.0, tol / 4.0, 2000);
  QuadratureResult fine_large =
      integrate_gk15(piece_large(f_tol), 1.0, R, abs_tol / 2.0, tol / 4.0, 4000);

  Complex value = fine_small.value + fine_large.value + tail;
  require_finite(value, "mellin_numeric");
  double bound = fine_small.error + fine_large.error + tail_err + f_tol * (1.0 + R);
  return EvalOutcome{value, bound, BoundKind::heuristic,
                     fine_small.evaluations + fine_large.evaluations,
                     Method::quadrature};
}

AsymExpansion asym_coeffs(double mu, const Complex& z, int k_max) {
  if (!(mu > 0.0)) fail(ErrorKind::domain, "asym_coeffs: mu must be > 0");
  if (k_max < 0 || k_max > kAsymKCap) {
    fail(ErrorKind::domain, "asym_coeffs: k_max out of range [0, 80]");
  }
  if (std::abs(z - Complex(1.0, 0.0)) < 1e-12) {
    fail(ErrorKind::singular, "asym_coeffs: expansion undefined at z = 1");
  }
  if (std::abs(z) > 1.0 + 1e-12) fail(ErrorKind::domain, "asym_coeffs: |z| must be <= 1");

  AsymExpansion expansion;
  expansion.mu = mu;
  expansion.z = z;
  expansion.k_max = k_max;
  expansion.coeffs.reserve(static_cast<size_t>(k_max) + 1);
  double sign = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    Complex c = 2.0 * sign * binom_shifted(mu, k) * polylog_neg_int(2 * k + 1, z);
    expansion.coeffs.push_back(c);
    sign = -sign;
  }
  return expansion;
}

EvalOutcome asym_eval(const MathieuParams& params, std::optional<int> k_max) {
  check_params(params, /*allow_z_one=*/false);
  const double mu = params.mu;
  const double r = params.r;
  const Complex z = params.z;

  const double log_r = std::log(r);
  const double base_pow = std::exp(-(2.0 * mu + 2.0) * log_r);  // r^{-2mu-2}
  const double step = std::exp(-2.0 * log_r);                   // r^{-2}

  auto term_at = [&](int k, double r_pow) -> Complex {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * binom_shifted(mu, k) * polylog_neg_int(2 * k + 1, z) * r_pow;
  };

  ComplexCompensatedSum sum;
  double abs_sum = 0.0;

  if (k_max) {
    if (*k_max < 0 || *k_max > kAsymKCap) {
      fail(ErrorKind::domain, "asym_eval: k_max out of range [0, 80]");
    }
    double r_pow = base_pow;
    for (int k = 0; k <= *k_max; ++k) {
      Complex t = term_at(k, r_pow);
      sum.add(t);
      abs_sum += std::abs(t);
      r_pow *= step;
    }
    // First two omitted terms: near the optimum the term minimum is flat and
    // the remainder routinely exceeds the single first-omitted term.
    double omitted = std::abs(term_at(*k_max + 1, r_pow)) +
                     std::abs(term_at(*k_max + 2, r_pow * step));
    Complex value = sum.value();
    require_finite(value, "asym_eval");
    double bound = std::max(omitted, 2.0 * kEps * abs_sum);
    return EvalOutcome{value, bound, BoundKind::heuristic, *k_max + 1,
                       Method::asymptotic};
  }

  // Auto mode: optimal truncation at the smallest term of the divergent series.
  double r_pow = base_pow;
  double prev_mag = std::numeric_limits<double>::infinity();
  double bound = 0.0;
  int used = 0;
  for (int k = 0; k <= kAsymKCap; ++k) {
    Complex t = term_at(k, r_pow);
    double mag = std::abs(t);
    if (k == 1 && mag >= prev_mag) {
      fail(ErrorKind::degenerate,
           "asym_eval: terms grow from the start; r too small for the expansion");
    }
    if (k >= 1 && mag >= prev_mag) {
      // First two omitted terms: the minimum is flat, and with rotating
      // coefficient phases the remainder can top the single smallest term.
      bound = mag + std::abs(term_at(k + 1, r_pow * step));
      break;
    }
    sum.add(t);
    abs_sum += std::abs(t);
    used = k + 1;
    prev_mag = mag;
    bound = 2.0 * mag;  // provisional (cap or underflow exit)
    r_pow *= step;
    if (mag < 1e-300) break;
  }
  Complex value = sum.value();
  require_finite(value, "asym_eval");
  bound = std::max(bound, 2.0 * kEps * abs_sum);
  return EvalOutcome{value, bound, BoundKind::heuristic, used, Method::asymptotic};
}

double growth_order_probe(double mu, const Complex& z,
                          std::span<const double> r_grid, double tol) {
  if (r_grid.size() < 3) {
    fail(ErrorKind::domain, "growth_order_probe: need at least 3 grid points");
  }
  for (size_t i = 1; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > r_grid[i - 1])) {
      fail(ErrorKind::domain, "growth_order_probe: grid must be increasing");
    }
  }
  std::vector<double> xs, ys;
  xs.reserve(r_grid.size());
  ys.reserve(r_grid.size());
  for (double r : r_grid) {
    EvalOutcome f = mathieu_direct(MathieuParams{mu, r, z}, tol);
    double mag = std::abs(f.value);
    if (!(mag > 0.0)) {
      fail(ErrorKind::degenerate, "growth_order_probe: |F| vanished on the grid");
    }
    xs.push_back(std::log(r));
    ys.push_back(std::log(mag));
  }
  double x_mean = 0.0, y_mean = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= static_cast<double>(xs.size());
  y_mean /= static_cast<double>(xs.size());
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - x_mean) * (ys[i] - y_mean);
    den += (xs[i] - x_mean) * (xs[i] - x_mean);
  }
  return num / den;
}

}  // namespace mathieu
