#include "mathieu/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include "mathieu/hurwitz.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special.hpp"
#include "mathieu/summation.hpp"

namespace mathieu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Grow-only cache of Eulerian rows, exact and as doubles.
class EulerianCache {
 public:
  static EulerianCache& instance() {
    static EulerianCache cache;
    return cache;
  }

  std::vector<BigInt> row(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow(n);
    return rows_[static_cast<size_t>(n)];
  }

  std::vector<double> row_d(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow(n);
    std::vector<double> out;
    out.reserve(rows_[static_cast<size_t>(n)].size());
    for (const BigInt& v : rows_[static_cast<size_t>(n)]) {
      double d = to_double(v);
      if (!std::isfinite(d)) {
        fail(ErrorKind::domain, "eulerian_row_d: entries overflow double");
      }
      out.push_back(d);
    }
    return out;
  }

 private:
  // A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1), entries outside the
  // previous row count as zero.
  void grow(int n) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});  // A(0,0) = 1
    while (static_cast<int>(rows_.size()) <= n) {
      int m = static_cast<int>(rows_.size());
      const auto& prev = rows_.back();
      const int prev_size = static_cast<int>(prev.size());
      std::vector<BigInt> row(static_cast<size_t>(m));
      for (int k = 0; k < m; ++k) {
        BigInt v = 0;
        if (k < prev_size) v += BigInt(k + 1) * prev[static_cast<size_t>(k)];
        if (k >= 1 && k - 1 < prev_size) {
          v += BigInt(m - k) * prev[static_cast<size_t>(k - 1)];
        }
        row[static_cast<size_t>(k)] = v;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

bool near_int(double x, double tol) { return std::fabs(x - std::round(x)) <= tol; }

// alpha within tol of a nonpositive integer.
std::optional<int> as_nonpos_int(const Complex& alpha, double tol = 1e-12) {
  if (std::fabs(alpha.imag()) > tol) return std::nullopt;
  double n = std::round(alpha.real());
  if (n > 0.0 || std::fabs(alpha.real() - n) > tol) return std::nullopt;
  return static_cast<int>(-n);
}

bool on_nonneg_axis(const Complex& z, double tol = 1e-12) {
  return std::fabs(z.imag()) <= tol && z.real() >= -tol;
}

void check_off_cut(const Complex& z) {
  if (z.real() >= 1.0 && std::fabs(z.imag()) < 1e-12) {
    fail(ErrorKind::domain, "polylog: z on the cut [1, inf)");
  }
}

Complex i_to_power(const Complex& w) {
  // i^w := e^{i pi w / 2}
  return std::exp(Complex(0.0, kPi / 2.0) * w);
}

}  // namespace

// ---------------------------------------------------------------------------
// EulerianTriangle

EulerianTriangle EulerianTriangle::build(int n_max) {
  if (n_max < 0) fail(ErrorKind::domain, "EulerianTriangle: n_max must be >= 0");
  EulerianTriangle t;
  t.rows_.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) t.rows_.push_back(EulerianCache::instance().row(n));
  return t;
}

const BigInt& EulerianTriangle::at(int n, int k) const {
  auto r = row(n);
  if (k < 0 || k >= static_cast<int>(r.size())) {
    fail(ErrorKind::range, "EulerianTriangle::at: index");
  }
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

std::span<const BigInt> EulerianTriangle::row(int n) const {
  if (n < 0 || n > n_max()) fail(ErrorKind::range, "EulerianTriangle::row: index");
  return rows_[static_cast<size_t>(n)];
}

std::vector<double> eulerian_row_d(int n) {
  if (n < 0) fail(ErrorKind::domain, "eulerian_row_d: n must be >= 0");
  return EulerianCache::instance().row_d(n);
}

// ---------------------------------------------------------------------------
// RationalAngle

RationalAngle RationalAngle::reduced(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorKind::domain, "RationalAngle: p, q must be >= 1");
  int g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p >= 2 * q) fail(ErrorKind::domain, "RationalAngle: p/q must lie in (0, 2)");
  return RationalAngle{p, q};
}

double RationalAngle::x() const { return static_cast<double>(p) * kPi / static_cast<double>(q); }

Complex RationalAngle::unit() const {
  // Cardinal angles get exact components so downstream identities stay exact.
  int num = 2 * p;  // angle = num * (pi/2) / ... only when q divides 2p
  if (num % q == 0) {
    switch ((num / q) % 4) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  return std::polar(1.0, x());
}

Complex unit_circle_point(double x) {
  if (x == kPi) return {-1.0, 0.0};
  if (x == kPi / 2.0) return {0.0, 1.0};
  if (x == 3.0 * kPi / 2.0) return {0.0, -1.0};
  return std::polar(1.0, x);
}

std::optional<RationalAngle> detect_rational_angle(double x, int max_q, double tol) {
  if (!(x > 0.0) || !(x < 2.0 * kPi)) return std::nullopt;
  double t = x / kPi;  // target p/q in (0, 2)
  for (int q = 1; q <= max_q; ++q) {
    double p = std::round(t * q);
    if (p < 1.0) continue;
    if (std::fabs(t - p / q) <= tol) {
      int pi_ = static_cast<int>(p);
      int g = std::gcd(pi_, q);
      return RationalAngle::reduced(pi_ / g, q / g);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Defining series

EvalOutcome polylog_series(const PolylogQuery& query, double tol) {
  if (!(tol > 0.0)) fail(ErrorKind::domain, "polylog_series: tol must be > 0");
  const Complex alpha = query.alpha;
  const Complex z = query.z;
  check_off_cut(z);
  const double rho = std::abs(z);
  if (rho < 1e-300) {
    return EvalOutcome{Complex(0, 0), 0.0, BoundKind::certified, 0, Method::series};
  }
  const bool on_circle = std::fabs(rho - 1.0) <= 1e-12;
  if (rho > 1.0 + 1e-12) {
    fail(ErrorKind::domain, "polylog_series: series requires |z| <= 1");
  }
  if (on_circle && alpha.real() <= 1.0) {
    fail(ErrorKind::domain,
         "polylog_series: on |z| = 1 the series requires Re(alpha) > 1");
  }

  ComplexCompensatedSum sum;
  Complex z_pow(1.0, 0.0);
  const double re_a = alpha.real();
  double tail = std::numeric_limits<double>::infinity();
  long n = 0;
  const long cap = 50'000'000;
  while (n < cap) {
    ++n;
    z_pow = (n % 256 == 0) ? pow_int(z, n) : z_pow * z;
    Complex term = z_pow * std::pow(Complex(static_cast<double>(n), 0.0), -alpha);
    sum.add(term);

    if (on_circle) {
      // Certified tails on the circle: integral comparison, and the
      // summation-by-parts bound using the variation of n^{-alpha}.
      double nn = static_cast<double>(n);
      double integral = std::pow(nn, 1.0 - re_a) / (re_a - 1.0);
      double abel = 2.0 / std::abs(1.0 - z) * std::pow(nn, -re_a) *
                    (1.0 + std::abs(alpha) / re_a);
      tail = std::min(integral, abel);
      if (tail <= tol) break;
    } else {
      // Inside the disk: term moduli are eventually dominated by a geometric
      // sequence with ratio rho * ((n+1)/n)^m, m = max(0, -Re alpha).
      double m = std::max(0.0, -re_a);
      double ratio = rho * std::pow((static_cast<double>(n) + 1.0) / n, m);
      if (ratio < 1.0) {
        tail = std::abs(term) * ratio / (1.0 - ratio);
        if (tail <= tol) break;
      }
    }
  }
  if (tail > tol) {
    fail(ErrorKind::tolerance, "polylog_series: tolerance unreachable at term cap");
  }
  Complex value = sum.value();
  require_finite(value, "polylog_series");
  return EvalOutcome{value, tail, BoundKind::certified, n, Method::series};
}

// ---------------------------------------------------------------------------
// Negative integer order: rational closed form

Complex polylog_neg_int(int n, const Complex& z) {
  if (n < 0) fail(ErrorKind::domain, "polylog_neg_int: n must be >= 0");
  if (std::abs(Complex(1.0, 0.0) - z) < 1e-12) {
    fail(ErrorKind::singular, "polylog_neg_int: pole at z = 1");
  }
  if (n == 0) return z / (1.0 - z);
  std::vector<double> row = eulerian_row_d(n);
  Complex numerator(0.0, 0.0);
  for (int k = n - 1; k >= 0; --k) {
    numerator = numerator * z + row[static_cast<size_t>(k)];
  }
  numerator *= z;  // sum_k A(n,k) z^{k+1}
  Complex value = numerator / pow_int(1.0 - z, n + 1);
  require_finite(value, "polylog_neg_int");
  return value;
}

RationalComplex polylog_neg_int(int n, const RationalComplex& z) {
  if (n < 0) fail(ErrorKind::domain, "polylog_neg_int: n must be >= 0");
  const RationalComplex one = RationalComplex::from_int(1);
  if (z == one) fail(ErrorKind::singular, "polylog_neg_int: pole at z = 1");
  if (n == 0) return z / (one - z);
  std::vector<BigInt> row = EulerianCache::instance().row(n);
  RationalComplex numerator;
  for (int k = n - 1; k >= 0; --k) {
    numerator = numerator * z + RationalComplex(Rational(row[static_cast<size_t>(k)]));
  }
  numerator = numerator * z;
  return numerator / (one - z).pow(static_cast<unsigned>(n + 1));
}

// ---------------------------------------------------------------------------
// Jonquiere route

EvalOutcome polylog_jonquiere(const PolylogQuery& query) {
  const Complex alpha = query.alpha;
  const Complex z = query.z;
  if (on_nonneg_axis(z)) {
    fail(ErrorKind::domain, "polylog_jonquiere: z must lie off [0, inf)");
  }
  double nearest = std::round(alpha.real());
  if (nearest >= 0.0 && std::abs(alpha - Complex(nearest, 0.0)) < 1e-8) {
    fail(ErrorKind::order,
         "polylog_jonquiere: alpha too close to a nonnegative integer");
  }

  const Complex log_mz = std::log(-z);  // principal
  const Complex lambda = log_mz * Complex(0.0, -1.0) / (2.0 * kPi);  // log(-z)/(2 pi i)
  const Complex q_plus = 0.5 + lambda;
  const Complex q_minus = 0.5 - lambda;
  if (q_plus.real() <= 0.0 || q_minus.real() <= 0.0) {
    fail(ErrorKind::domain, "polylog_jonquiere: Hurwitz shift left the right half-plane");
  }

  const Complex s = 1.0 - alpha;
  EvalOutcome zp = hurwitz_zeta(HurwitzQuery{s, q_plus});
  EvalOutcome zm = hurwitz_zeta(HurwitzQuery{s, q_minus});

  const Complex w_plus = i_to_power(1.0 - alpha);
  const Complex w_minus = i_to_power(alpha - 1.0);
  const Complex prefactor =
      complex_gamma(1.0 - alpha) / std::pow(Complex(2.0 * kPi, 0.0), 1.0 - alpha);

  Complex value = prefactor * (w_plus * zp.value + w_minus * zm.value);
  require_finite(value, "polylog_jonquiere");
  double bound = std::abs(prefactor) *
                     (std::abs(w_plus) * zp.error_bound + std::abs(w_minus) * zm.error_bound) +
                 8.0 * kEps * std::abs(value);
  return EvalOutcome{value, bound, BoundKind::heuristic, zp.terms_used + zm.terms_used,
                     Method::jonquiere};
}

// ---------------------------------------------------------------------------
// Lindelof route

double lindelof_half_width(const Complex& z, double tol) {
  if (on_nonneg_axis(z)) {
    fail(ErrorKind::domain, "lindelof_half_width: z must lie off [0, inf)");
  }
  double decay = kPi - std::fabs(std::arg(-z));
  if (decay < 1e-6) {
    fail(ErrorKind::domain, "lindelof_half_width: z too close to the positive axis");
  }
  return std::log(1.0 / std::min(tol, 0.1)) / decay + 5.0;
}

EvalOutcome polylog_lindelof(const PolylogQuery& query, double half_width) {
  const Complex alpha = query.alpha;
  const Complex z = query.z;
  if (on_nonneg_axis(z)) {
    fail(ErrorKind::domain, "polylog_lindelof: z must lie off [0, inf)");
  }
  if (alpha.real() < 0.0) {
    fail(ErrorKind::domain, "polylog_lindelof: quadrature route requires Re(alpha) >= 0");
  }
  if (!(half_width > 0.0)) {
    fail(ErrorKind::domain, "polylog_lindelof: half width must be > 0");
  }

  const Complex log_mz = std::log(-z);
  const double theta = std::fabs(std::arg(-z));
  const double decay = kPi - theta;
  const double T = half_width;

  // Integrand of -(1/2pi) int (-z)^{1/2+it} / (1/2+it)^alpha * pi/sin(pi(1/2+it)) dt;
  // sin(pi(1/2+it)) = cosh(pi t). Assembled in the exponent to avoid overflow.
  auto integrand = [&](double t) -> Complex {
    Complex u(0.5, t);
    double pt = kPi * std::fabs(t);
    // log cosh(pi t) = |pi t| + log1p(e^{-2|pi t|}) - log 2
    double log_cosh = pt + std::log1p(std::exp(-2.0 * pt)) - std::numbers::ln2;
    Complex log_f = u * log_mz - alpha * std::log(u) - log_cosh;
    return kPi * std::exp(log_f);
  };

  double trunc = 2.0 * std::sqrt(std::abs(z)) * std::exp(std::fabs(alpha.imag()) * kPi / 2.0) *
                 std::min(1.0, std::pow(T, -alpha.real())) * std::exp(-decay * T) / decay;

  QuadratureResult quad =
      integrate_gk15(integrand, -T, T, std::max(trunc / 4.0, 1e-305), 1e-12);

  Complex value = -quad.value / (2.0 * kPi);
  require_finite(value, "polylog_lindelof");
  return EvalOutcome{value, trunc + quad.error / (2.0 * kPi), BoundKind::heuristic,
                     quad.evaluations, Method::lindelof};
}

// ---------------------------------------------------------------------------
// Unit-circle multisection

namespace {

// e^{i j pi / q} with exact components at the cardinal angles.
Complex unit_root(long j, int q) {
  long two_q = 2L * q;
  long w = ((j % two_q) + two_q) % two_q;
  if ((2 * w) % q == 0) {
    switch ((2 * w / q) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, static_cast<double>(w) * kPi / q);
}

}  // namespace

RationalComplex polylog_unit_circle_exact(int n, const RationalAngle& angle) {
  if (n < 0) fail(ErrorKind::domain, "polylog_unit_circle_exact: n must be >= 0");
  if (angle.q > 2) {
    fail(ErrorKind::domain,
         "polylog_unit_circle_exact: roots of unity are Gaussian rationals only for q <= 2");
  }
  const int q = angle.q;
  const int two_q = 2 * q;
  // Gaussian-rational table of e^{i w pi / 2} for w = 0..3 scaled to q.
  auto root = [&](int m) -> RationalComplex {
    int w = (m * angle.p) % two_q;       // e^{i w pi / q}
    int idx = (w * 2 / q) % 4;           // exact multiples of pi/2 only (q <= 2)
    switch (idx) {
      case 0: return RationalComplex::from_int(1);
      case 1: return RationalComplex::from_int(0, 1);
      case 2: return RationalComplex::from_int(-1);
      default: return RationalComplex::from_int(0, -1);
    }
  };
  RationalComplex bracket(riemann_zeta_neg_int(n), Rational(0));
  for (int m = 1; m < two_q; ++m) {
    Rational zeta_m = hurwitz_zeta_neg_int(n, Rational(m, two_q));
    bracket = bracket + zeta_m * root(m);
  }
  // (2q)^{-alpha} = (2q)^{n}
  BigInt scale = 1;
  for (int j = 0; j < n; ++j) scale *= two_q;
  return Rational(scale) * bracket;
}

EvalOutcome polylog_unit_circle(const Complex& alpha, const RationalAngle& angle) {
  if (std::abs(alpha - Complex(1.0, 0.0)) < 1e-10) {
    fail(ErrorKind::order, "polylog_unit_circle: alpha must differ from 1");
  }
  const int q = angle.q;
  const int two_q = 2 * q;

  if (auto n = as_nonpos_int(alpha)) {
    if (q <= 2) {
      RationalComplex exact = polylog_unit_circle_exact(*n, angle);
      Complex value = exact.to_complex();
      return EvalOutcome{value, 2.0 * kEps * std::abs(value), BoundKind::certified,
                         two_q, Method::exact_rational};
    }
    // Exact zeta values, floating-point roots of unity.
    ComplexCompensatedSum bracket;
    bracket.add(Complex(to_double(riemann_zeta_neg_int(*n)), 0.0));
    for (int m = 1; m < two_q; ++m) {
      double zeta_m = to_double(hurwitz_zeta_neg_int(*n, Rational(m, two_q)));
      bracket.add(zeta_m * unit_root(static_cast<long>(m) * angle.p, q));
    }
    double scale = std::pow(static_cast<double>(two_q), static_cast<double>(*n));
    Complex value = scale * bracket.value();
    require_finite(value, "polylog_unit_circle");
    return EvalOutcome{value, (2.0 * two_q + 4.0) * kEps * std::abs(value),
                       BoundKind::certified, two_q, Method::multisection};
  }

  ComplexCompensatedSum bracket;
  double bound = 0.0;
  long terms = 0;
  EvalOutcome zeta0 = riemann_zeta(alpha);
  bracket.add(zeta0.value);
  bound += zeta0.error_bound;
  terms += zeta0.terms_used;
  for (int m = 1; m < two_q; ++m) {
    EvalOutcome zm = hurwitz_zeta(
        HurwitzQuery{alpha, Complex(static_cast<double>(m) / two_q, 0.0)});
    bracket.add(zm.value * unit_root(static_cast<long>(m) * angle.p, q));
    bound += zm.error_bound;
    terms += zm.terms_used;
  }
  Complex scale = std::pow(Complex(static_cast<double>(two_q), 0.0), -alpha);
  Complex value = scale * bracket.value();
  require_finite(value, "polylog_unit_circle");
  return EvalOutcome{value, std::abs(scale) * bound + 8.0 * kEps * std::abs(value),
                     BoundKind::heuristic, terms, Method::multisection};
}

// ---------------------------------------------------------------------------
// Dispatcher

EvalOutcome polylog(const PolylogQuery& query, double tol) {
  const Complex alpha = query.alpha;
  const Complex z = query.z;
  check_off_cut(z);

  if (auto n = as_nonpos_int(alpha)) {
    Complex value = polylog_neg_int(*n, z);
    return EvalOutcome{value, (*n + 2.0) * kEps * std::abs(value), BoundKind::certified,
                       *n, Method::neg_int_closed_form};
  }

  const double rho = std::abs(z);
  if (rho <= 0.95) {
    return polylog_series(query, tol);
  }

  const bool alpha_nonneg_int =
      std::fabs(alpha.imag()) < 1e-8 && alpha.real() > -0.5 &&
      near_int(alpha.real(), 1e-8);
  const bool jonquiere_ok = !alpha_nonneg_int && !on_nonneg_axis(z);

  if (rho < 1.0 - 1e-12) {
    if (jonquiere_ok) return polylog_jonquiere(query);
    return polylog_series(query, tol);  // certified fallback inside the disk
  }

  if (rho <= 1.0 + 1e-12) {
    if (jonquiere_ok) return polylog_jonquiere(query);
    // alpha is (near) a nonnegative integer on the unit circle.
    if (near_int(alpha.real(), 1e-8) && alpha.real() >= 1.5) {
      if (auto angle = detect_rational_angle(std::arg(z) < 0.0
                                                 ? std::arg(z) + 2.0 * kPi
                                                 : std::arg(z))) {
        return polylog_unit_circle(alpha, *angle);
      }
    }
    if (alpha.real() > 1.0) {
      return polylog_series(query, tol);
    }
    fail(ErrorKind::no_method,
         "polylog: no route for integer alpha <= 1 on the unit circle");
  }

  if (jonquiere_ok) return polylog_jonquiere(query);
  fail(ErrorKind::no_method, "polylog: no route for |z| > 1 with this alpha");
}

}  // namespace mathieu
