#include "mathieu/special.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "mathieu/summation.hpp"

namespace mathieu {

namespace {

// ---------------------------------------------------------------------------
// Bernoulli cache (numbers + polynomial rows + binomials), grow-only.

class BernoulliCache {
 public:
  static BernoulliCache& instance() {
    static BernoulliCache cache;
    return cache;
  }

  Rational number(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_numbers(n);
    return numbers_[static_cast<size_t>(n)];
  }

  std::vector<Rational> poly_row(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_numbers(m);
    return make_row(m);
  }

  double number_over_factorial(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_numbers(n);
    Rational f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return to_double(numbers_[static_cast<size_t>(n)] / f);
  }

 private:
  // Standard recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, exact rationals.
  void grow_numbers(int n) {
    if (numbers_.empty()) {
      numbers_.push_back(Rational(1));
      numbers_.push_back(Rational(-1, 2));
    }
    while (static_cast<int>(numbers_.size()) <= n) {
      int m = static_cast<int>(numbers_.size());
      if (m % 2 == 1) {  // B_{2j+1} = 0 for j >= 1
        numbers_.push_back(Rational(0));
        continue;
      }
      Rational acc = 0;
      BigInt binom = 1;  // C(m+1, j), updated in-loop
      for (int j = 0; j < m; ++j) {
        acc += Rational(binom) * numbers_[static_cast<size_t>(j)];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      // C(m+1, m) = m+1
      numbers_.push_back(-acc / Rational(m + 1));
    }
  }

  // Coefficients of B_m(x) = sum_j C(m,j) B_j x^{m-j}, ascending in x.
  std::vector<Rational> make_row(int m) const {
    std::vector<Rational> row(static_cast<size_t>(m) + 1);
    BigInt binom = 1;  // C(m, j)
    for (int j = 0; j <= m; ++j) {
      row[static_cast<size_t>(m - j)] = Rational(binom) * numbers_[static_cast<size_t>(j)];
      if (j < m) binom = binom * (m - j) / (j + 1);
    }
    return row;
  }

  std::mutex mutex_;
  std::vector<Rational> numbers_;
};

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Some branch of log Gamma(w) for Re(w) >= 1/2 (2*pi*i ambiguities are
// irrelevant because callers exponentiate).
Complex log_gamma_right(const Complex& w) {
  Complex acc(kLanczosCoeff[0], 0.0);
  for (int i = 1; i < 15; ++i) {
    acc += kLanczosCoeff[i] / (w - 1.0 + static_cast<double>(i));
  }
  Complex t = w + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * kPi) + (w - 0.5) * std::log(t) - t + std::log(acc);
}

// log sin(pi w) without overflow for large |Im w| (again branch-agnostic).
Complex log_sin_pi(const Complex& w) {
  double y = w.imag();
  if (std::fabs(y) <= 1.0) {
    return std::log(std::sin(kPi * w));
  }
  const Complex i_unit(0.0, 1.0);
  const Complex log_2i = std::log(Complex(0.0, 2.0));
  if (y > 0.0) {
    // sin(pi w) = -e^{-i pi w} (1 - e^{2 i pi w}) / (2i)
    return -i_unit * kPi * w + std::log(1.0 - std::exp(2.0 * i_unit * kPi * w)) -
           log_2i + Complex(0.0, kPi);
  }
  // sin(pi w) = e^{i pi w} (1 - e^{-2 i pi w}) / (2i)
  return i_unit * kPi * w + std::log(1.0 - std::exp(-2.0 * i_unit * kPi * w)) -
         log_2i;
}

}  // namespace

// ---------------------------------------------------------------------------
// BernoulliTable

BernoulliTable BernoulliTable::build(int n_max, int m_max) {
  if (n_max < 0 || m_max < 0) {
    fail(ErrorKind::domain, "bernoulli_table: n_max and m_max must be >= 0");
  }
  BernoulliTable table;
  auto& cache = BernoulliCache::instance();
  table.numbers_.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) table.numbers_.push_back(cache.number(n));
  table.poly_rows_.reserve(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) table.poly_rows_.push_back(cache.poly_row(m));
  return table;
}

const Rational& BernoulliTable::number(int n) const {
  if (n < 0 || n > n_max()) fail(ErrorKind::range, "BernoulliTable::number: index");
  return numbers_[static_cast<size_t>(n)];
}

std::span<const Rational> BernoulliTable::poly_row(int m) const {
  if (m < 0 || m > m_max()) fail(ErrorKind::range, "BernoulliTable::poly_row: index");
  return poly_rows_[static_cast<size_t>(m)];
}

Rational BernoulliTable::poly_at(int m, const Rational& x) const {
  auto row = poly_row(m);
  Rational acc = 0;
  for (int j = m; j >= 0; --j) acc = acc * x + row[static_cast<size_t>(j)];
  return acc;
}

Complex BernoulliTable::poly_at(int m, const Complex& x) const {
  auto row = poly_row(m);
  Complex acc(0.0, 0.0);
  for (int j = m; j >= 0; --j) acc = acc * x + to_double(row[static_cast<size_t>(j)]);
  return acc;
}

// ---------------------------------------------------------------------------
// Cached accessors

Rational bernoulli_number(int n) {
  if (n < 0) fail(ErrorKind::domain, "bernoulli_number: n must be >= 0");
  return BernoulliCache::instance().number(n);
}

double bernoulli_number_d(int n) { return to_double(bernoulli_number(n)); }

Rational bernoulli_poly(int m, const Rational& x) {
  if (m < 0) fail(ErrorKind::domain, "bernoulli_poly: m must be >= 0");
  auto row = BernoulliCache::instance().poly_row(m);
  Rational acc = 0;
  for (int j = m; j >= 0; --j) acc = acc * x + row[static_cast<size_t>(j)];
  return acc;
}

Complex bernoulli_poly(int m, const Complex& x) {
  if (m < 0) fail(ErrorKind::domain, "bernoulli_poly: m must be >= 0");
  auto row = BernoulliCache::instance().poly_row(m);
  Complex acc(0.0, 0.0);
  for (int j = m; j >= 0; --j) acc = acc * x + to_double(row[static_cast<size_t>(j)]);
  return acc;
}

double bernoulli_over_factorial(int two_j) {
  if (two_j < 0) fail(ErrorKind::domain, "bernoulli_over_factorial: index");
  return BernoulliCache::instance().number_over_factorial(two_j);
}

// ---------------------------------------------------------------------------
// Gamma

Complex complex_gamma(const Complex& w) {
  // Pole detection: nonpositive integers within 1e-12.
  double nearest = std::round(w.real());
  if (nearest <= 0.0 && std::abs(w - Complex(nearest, 0.0)) < 1e-12) {
    fail(ErrorKind::pole, "complex_gamma: argument at or near a nonpositive integer");
  }
  Complex log_gamma;
  if (w.real() >= 0.5) {
    log_gamma = log_gamma_right(w);
  } else {
    // Reflection in log space: Gamma(w) = pi / (sin(pi w) Gamma(1-w)).
    log_gamma = std::log(kPi) - log_sin_pi(w) - log_gamma_right(1.0 - w);
  }
  if (log_gamma.real() > 709.0) {
    fail(ErrorKind::domain, "complex_gamma: value overflows double precision");
  }
  Complex value = std::exp(log_gamma);
  require_finite(value, "complex_gamma");
  return value;
}

// ---------------------------------------------------------------------------
// Pochhammer / shifted binomial / zeta at negative integers

Complex pochhammer(const Complex& s, int m) {
  if (m < 0) fail(ErrorKind::domain, "pochhammer: m must be >= 0");
  Complex acc(1.0, 0.0);
  for (int j = 0; j < m; ++j) acc *= s + static_cast<double>(j);
  return acc;
}

double pochhammer(double s, int m) {
  if (m < 0) fail(ErrorKind::domain, "pochhammer: m must be >= 0");
  double acc = 1.0;
  for (int j = 0; j < m; ++j) acc *= s + static_cast<double>(j);
  return acc;
}

double binom_shifted(double mu, int k) {
  if (k < 0) fail(ErrorKind::domain, "binom_shifted: k must be >= 0");
  if (mu <= -1.0) fail(ErrorKind::domain, "binom_shifted: mu must be > -1");
  double acc = 1.0;
  for (int j = 1; j <= k; ++j) {
    acc *= (mu + static_cast<double>(j)) / static_cast<double>(j);
  }
  return acc;
}

Rational riemann_zeta_neg_int(int n) {
  if (n < 0) fail(ErrorKind::domain, "riemann_zeta_neg_int: n must be >= 0");
  // zeta(-n) = -B_{n+1}(1)/(n+1); B_m(1) = B_m + [m == 1].
  Rational b = bernoulli_number(n + 1);
  if (n == 0) b += 1;
  return -b / Rational(n + 1);
}

double factorial_d(int n) {
  if (n < 0) fail(ErrorKind::domain, "factorial_d: n must be >= 0");
  if (n > 170) fail(ErrorKind::domain, "factorial_d: overflows double");
  double acc = 1.0;
  for (int j = 2; j <= n; ++j) acc *= static_cast<double>(j);
  return acc;
}

Complex pow_int(Complex z, long n) {
  if (n < 0) return 1.0 / pow_int(z, -n);
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1L) acc *= z;
    z *= z;
    n >>= 1L;
  }
  return acc;
}

}  // namespace mathieu
