#pragma once

#include <span>
#include <vector>

#include "mathieu/rational.hpp"
#include "mathieu/types.hpp"

namespace mathieu {

/// Exact Bernoulli numbers B_0..B_n_max (convention B_1 = -1/2) together
/// with the coefficient rows of the Bernoulli polynomials B_m(x) up to
/// degree m_max. Immutable after construction; safe to share across threads.
class BernoulliTable {
 public:
  static BernoulliTable build(int n_max, int m_max);

  int n_max() const { return static_cast<int>(numbers_.size()) - 1; }
  int m_max() const { return static_cast<int>(poly_rows_.size()) - 1; }

  const Rational& number(int n) const;

  /// Coefficients of B_m(x) in ascending powers of x; row m has m+1 entries.
  std::span<const Rational> poly_row(int m) const;

  Rational poly_at(int m, const Rational& x) const;
  Complex poly_at(int m, const Complex& x) const;

 private:
  std::vector<Rational> numbers_;
  std::vector<std::vector<Rational>> poly_rows_;
};

/// Convenience entry point named after what it builds.
inline BernoulliTable bernoulli_table(int n_max, int m_max) {
  return BernoulliTable::build(n_max, m_max);
}

/// Cached accessors used throughout the library. Backed by a grow-only
/// mutex-guarded table; values are returned by copy.
Rational bernoulli_number(int n);
double bernoulli_number_d(int n);
Rational bernoulli_poly(int m, const Rational& x);
Complex bernoulli_poly(int m, const Complex& x);

/// B_{2j}/(2j)! as double (the Euler-Maclaurin correction weights).
double bernoulli_over_factorial(int two_j);

/// Gamma(w) for complex w. Lanczos approximation on Re(w) >= 1/2, reflection
/// (computed in log space) otherwise. Relative error ~1e-14 away from poles.
/// Throws PoleError near nonpositive integers, DomainError if the value is
/// not representable in double precision.
Complex complex_gamma(const Complex& w);

/// Pochhammer symbol (s)_m = s (s+1) ... (s+m-1), direct product; (s)_0 = 1.
Complex pochhammer(const Complex& s, int m);
double pochhammer(double s, int m);

/// binom(k+mu, k) evaluated as the running product prod_{j=1..k} (mu+j)/j.
double binom_shifted(double mu, int k);

/// Exact zeta(-n) = -B_{n+1}(1)/(n+1) for n >= 0 (so zeta(0) = -1/2 and the
/// trivial zeros at negative even integers come out as exact zeros).
Rational riemann_zeta_neg_int(int n);

/// n! as double, cached. Throws DomainError once the value overflows.
double factorial_d(int n);

}  // namespace mathieu
