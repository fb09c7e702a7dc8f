#include "mathieu/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mathieu/special.hpp"
#include "mathieu/summation.hpp"

namespace mathieu {

namespace {

constexpr double kSPoleRadius = 1e-10;

void check_query(const HurwitzQuery& query) {
  if (query.q.real() <= 0.0) {
    fail(ErrorKind::domain, "hurwitz_zeta: Re(q) must be > 0");
  }
  if (std::abs(query.s - Complex(1.0, 0.0)) < kSPoleRadius) {
    fail(ErrorKind::domain, "hurwitz_zeta: s too close to the pole at 1");
  }
}

}  // namespace

EulerMaclaurinConfig auto_em_config(const Complex& s, const Complex& q) {
  // For Re(s) >= -2 a long head raises accuracy. For more negative Re(s) the
  // head terms (n+q)^{-s} grow with n and cancel against the correction
  // terms, so the head is kept short: minimal when the correction series
  // terminates (s at a nonpositive integer), otherwise sized so a+|q| ~ 6,
  // the balance point between the correction-series floor and cancellation.
  const double sigma = s.real();
  const double im = std::ceil(std::fabs(s.imag()));
  int a;
  if (sigma >= -2.0) {
    a = static_cast<int>(std::max(im, 10.0)) +
        static_cast<int>(std::ceil(std::abs(q)));
  } else {
    double nearest = std::round(sigma);
    bool terminating = std::abs(s - Complex(nearest, 0.0)) < 1e-8 && nearest <= 0.0;
    if (terminating) {
      a = static_cast<int>(std::max(im, 1.0));
    } else {
      a = static_cast<int>(
          std::max(1.0, std::max(6.0, im) - std::floor(std::abs(q))));
    }
  }
  int k = static_cast<int>(std::max(std::ceil((-sigma + 2.0) / 2.0), 8.0));
  return EulerMaclaurinConfig{a, k};
}

EvalOutcome hurwitz_zeta(const HurwitzQuery& query,
                         std::optional<EulerMaclaurinConfig> cfg) {
  check_query(query);
  const Complex s = query.s;
  const Complex q = query.q;

  EulerMaclaurinConfig em = cfg ? *cfg : auto_em_config(s, q);
  if (em.offset_a < 1 || em.order_k < 1) {
    fail(ErrorKind::order, "hurwitz_zeta: config requires a >= 1 and k >= 1");
  }
  if (cfg && s.real() <= -2.0 * em.order_k) {
    fail(ErrorKind::order,
         "hurwitz_zeta: identity requires Re(s) > -2k for the given config");
  }
  if (!cfg && s.real() <= -2.0 * em.order_k) {
    // auto_em_config guarantees this; guard against rounding at the edge.
    em.order_k = static_cast<int>(std::ceil((-s.real() + 2.0) / 2.0));
  }

  const int a = em.offset_a;
  const int k = em.order_k;

  ComplexCompensatedSum head;
  double peak = 0.0;  // largest intermediate (cancellation noise scale)
  for (int n = 0; n < a; ++n) {
    Complex t = std::pow(Complex(static_cast<double>(n), 0.0) + q, -s);
    peak = std::max(peak, std::abs(t));
    head.add(t);
  }

  const Complex w = static_cast<double>(a) + q;  // a + q, Re > 0
  const Complex w_pow_ms = std::pow(w, -s);      // (a+q)^{-s}

  Complex total = head.value();
  Complex integral_term = std::pow(w, 1.0 - s) / (s - 1.0);
  total += integral_term;
  total += 0.5 * w_pow_ms;
  peak = std::max({peak, std::abs(integral_term), 0.5 * std::abs(w_pow_ms)});

  // Correction terms B_{2j}/(2j)! (s)_{2j-1} (a+q)^{-s-2j+1}.
  const Complex w_inv2 = 1.0 / (w * w);
  Complex poch = s;                       // (s)_1
  Complex w_pow = w_pow_ms * w * w_inv2;  // (a+q)^{-s-1}
  double last_term = 0.0;
  int used_k = 0;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= k; ++j) {
    Complex term = bernoulli_over_factorial(2 * j) * poch * w_pow;
    double mag = std::abs(term);
    if (mag > prev_mag) break;  // correction series turned divergent; stop at its minimum
    total += term;
    peak = std::max(peak, mag);
    last_term = mag;
    used_k = j;
    prev_mag = mag;
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    w_pow *= w_inv2;
  }

  require_finite(total, "hurwitz_zeta");
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  return EvalOutcome{
      .value = total,
      .error_bound = 2.0 * last_term + 4.0 * kEps * peak,
      .bound_kind = BoundKind::heuristic,
      .terms_used = a + used_k,
      .method = Method::euler_maclaurin,
  };
}

EvalOutcome riemann_zeta(const Complex& s) {
  return hurwitz_zeta(HurwitzQuery{s, Complex(1.0, 0.0)});
}

EvalOutcome dirichlet_eta(const Complex& s) {
  constexpr double kLn2 = std::numbers::ln2;
  const Complex one(1.0, 0.0);
  if (std::abs(s - one) < kSPoleRadius) {
    // Removable singularity: eta(1) = ln 2; first-order Taylor nearby.
    constexpr double kEtaPrime1 = 0.15986890374243097;  // gamma ln2 - ln^2(2)/2
    Complex value = Complex(kLn2, 0.0) + (s - one) * kEtaPrime1;
    return EvalOutcome{
        .value = value,
        .error_bound = std::norm(s - one),
        .bound_kind = BoundKind::heuristic,
        .terms_used = 1,
        .method = Method::limit_value,
    };
  }
  EvalOutcome zeta = riemann_zeta(s);
  Complex factor = 1.0 - std::pow(Complex(2.0, 0.0), 1.0 - s);
  EvalOutcome out = zeta;
  out.value = factor * zeta.value;
  out.error_bound = std::abs(factor) * zeta.error_bound;
  require_finite(out.value, "dirichlet_eta");
  return out;
}

Complex hurwitz_zeta_neg_int(int n, const Complex& q) {
  if (n < 0) fail(ErrorKind::domain, "hurwitz_zeta_neg_int: n must be >= 0");
  return -bernoulli_poly(n + 1, q) / static_cast<double>(n + 1);
}

Rational hurwitz_zeta_neg_int(int n, const Rational& q) {
  if (n < 0) fail(ErrorKind::domain, "hurwitz_zeta_neg_int: n must be >= 0");
  return -bernoulli_poly(n + 1, q) / Rational(n + 1);
}

}  // namespace mathieu
