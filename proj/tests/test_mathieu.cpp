#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mathieu/mathieu.hpp"
#include "mathieu/polylog.hpp"
#include "oracles.hpp"

using mathieu::Complex;
using mathieu::MathieuParams;
using mathieu::MellinQuery;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("mathieu_direct: pinned and bracketed values") {
  // Empty series at z = 0.
  auto zero = mathieu::mathieu_direct({1.0, 1.0, Complex(0, 0)}, 1e-12);
  CHECK(zero.value == Complex(0, 0));
  CHECK(zero.error_bound == 0.0);

  // Classical z = 1 series at mu = 1, r = 1 lies in (2/3, 6/7)
  // (the bracket 1/(r^2+1/2) < S < 1/(r^2+1/6)).
  auto classical = mathieu::mathieu_direct({1.0, 1.0, Complex(1, 0)}, 1e-12);
  CHECK(classical.value.real() > 2.0 / 3.0);
  CHECK(classical.value.real() < 6.0 / 7.0);
  CHECK(std::fabs(classical.value.imag()) == 0.0);

  // Alternating series at r = 10: leading term c_0 r^{-4} with c_0 = -1/2.
  auto alt = mathieu::mathieu_direct({1.0, 10.0, Complex(-1, 0)}, 1e-14);
  CHECK(alt.value.real() == doctest::Approx(-0.5e-4).epsilon(2e-2));
  CHECK(alt.bound_kind == mathieu::BoundKind::certified);

  // Brute-force oracle agreement at a generic interior point.
  Complex z(0.3, 0.4);
  auto got = mathieu::mathieu_direct({0.7, 2.0, z}, 1e-13);
  Complex want = oracles::mathieu_series_direct(0.7, 2.0, z, 400000);
  CHECK(oracles::rel_err(got.value, want) < 1e-11);
}

TEST_CASE("mathieu_direct: certified tail honesty") {
  const std::vector<MathieuParams> sets = {
      {1.0, 1.0, Complex(1, 0)},    {1.0, 10.0, Complex(-1, 0)},
      {0.5, 5.0, Complex(0, 1)},    {2.0, 3.0, Complex(0.3, 0.4)},
      {1.5, 20.0, Complex(-0.8, 0.1)},
  };
  for (const auto& params : sets) {
    auto coarse = mathieu::mathieu_direct(params, 1e-8);
    auto fine = mathieu::mathieu_direct(params, 1e-14);  // far past doubling N
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error_bound);
  }
}

TEST_CASE("mathieu_direct: conjugation symmetry") {
  for (const Complex z : {Complex(0.3, 0.4), Complex(0, 1), Complex(-0.5, 0.7)}) {
    auto a = mathieu::mathieu_direct({1.2, 4.0, z}, 1e-13);
    auto b = mathieu::mathieu_direct({1.2, 4.0, std::conj(z)}, 1e-13);
    CHECK(std::abs(b.value - std::conj(a.value)) <= 1e-13 * std::abs(a.value) + 1e-300);
  }
}

TEST_CASE("mathieu_direct: errors") {
  CHECK_THROWS_AS(mathieu::mathieu_direct({0.0, 1.0, Complex(0.5, 0)}, 1e-10),
                  mathieu::Error);
  CHECK_THROWS_AS(mathieu::mathieu_direct({1.0, -1.0, Complex(0.5, 0)}, 1e-10),
                  mathieu::Error);
  CHECK_THROWS_AS(mathieu::mathieu_direct({1.0, 1.0, Complex(1.5, 0)}, 1e-10),
                  mathieu::Error);
  // z = 1 with mu = 0.25 and tol beyond the 1e9-term cap.
  try {
    mathieu::mathieu_direct({0.25, 1.0, Complex(1, 0)}, 1e-14);
    CHECK(false);
  } catch (const mathieu::Error& e) {
    CHECK(e.kind() == mathieu::ErrorKind::tolerance);
  }
}

TEST_CASE("asym_coeffs: exact coefficient values") {
  // c_0 = 2 Li_{-1}(-1) = -1/2 for any mu.
  for (double mu : {0.4, 1.0, 3.3}) {
    auto exp0 = mathieu::asym_coeffs(mu, Complex(-1, 0), 0);
    CHECK(exp0.coeffs[0].real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(exp0.coeffs[0].imag() == 0.0);
  }
  // c_1 at mu = 1: 2 (-1) binom(2,1) Li_{-3}(-1) = -4/8 = -1/2.
  auto exp1 = mathieu::asym_coeffs(1.0, Complex(-1, 0), 1);
  CHECK(exp1.coeffs[1].real() == doctest::Approx(-0.5).epsilon(1e-14));
  // c_0 at z = i: 2 Li_{-1}(i) = -1.
  auto expi = mathieu::asym_coeffs(0.7, Complex(0, 1), 0);
  CHECK(expi.coeffs[0].real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::fabs(expi.coeffs[0].imag()) < 1e-15);
  // Coefficients depend on (mu, z) only; two builds are bit-identical.
  auto a = mathieu::asym_coeffs(1.3, Complex(0.2, 0.5), 6);
  auto b = mathieu::asym_coeffs(1.3, Complex(0.2, 0.5), 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(a.coeffs[static_cast<size_t>(k)] == b.coeffs[static_cast<size_t>(k)]);
  }
  CHECK(a.coeffs.size() == 7);
  CHECK_THROWS_AS(mathieu::asym_coeffs(1.0, Complex(1, 0), 3), mathieu::Error);
}

TEST_CASE("asym_eval: agreement with the direct oracle") {
  // The acceptance workhorse: mu = 1, r = 20, z = -1.
  {
    MathieuParams params{1.0, 20.0, Complex(-1, 0)};
    auto direct = mathieu::mathieu_direct(params, 1e-15);
    auto asym = mathieu::asym_eval(params, {});
    CHECK(oracles::rel_err(asym.value, direct.value) < 1e-10);
    CHECK(std::abs(asym.value - direct.value) <=
          2.0 * asym.error_bound + direct.error_bound);
  }
  // Leading-order truncation at K = 0: relative error ~ |c_1|/(|c_0| r^2).
  {
    MathieuParams params{1.0, 10.0, Complex(0, 1)};
    auto direct = mathieu::mathieu_direct(params, 1e-15);
    auto asym = mathieu::asym_eval(params, 0);
    CHECK(asym.value.real() == doctest::Approx(-1e-4).epsilon(5e-2));
    double rel = oracles::rel_err(asym.value, direct.value);
    CHECK(rel < 5e-2);
    CHECK(std::abs(asym.value - direct.value) <=
          2.0 * asym.error_bound + direct.error_bound);
  }
  // Fixed K = 3 at moderate r.
  {
    MathieuParams params{0.5, 5.0, Complex(-1, 0)};
    auto direct = mathieu::mathieu_direct(params, 1e-15);
    auto asym = mathieu::asym_eval(params, 3);
    CHECK(std::abs(asym.value - direct.value) <=
          2.0 * asym.error_bound + direct.error_bound);
  }
}

TEST_CASE("asym_eval: oracle agreement across the parameter sweep") {
  const std::vector<std::pair<double, Complex>> family = {
      {1.0, Complex(-1, 0)},
      {1.0, Complex(0, 1)},
      {0.5, mathieu::unit_circle_point(1.0)},
      {2.2, Complex(0.3, 0.4)},
  };
  for (const auto& [mu, z] : family) {
    double r = 10.0 * (1.0 + mu);
    MathieuParams params{mu, r, z};
    auto direct = mathieu::mathieu_direct(params, 1e-15);
    auto asym = mathieu::asym_eval(params, {});
    CHECK(std::abs(asym.value - direct.value) <=
          2.0 * asym.error_bound + direct.error_bound);
  }
}

TEST_CASE("asym_eval: degenerate at small r, singular at z = 1") {
  try {
    mathieu::asym_eval({1.0, 0.5, Complex(-1, 0)}, {});
    CHECK(false);
  } catch (const mathieu::Error& e) {
    CHECK(e.kind() == mathieu::ErrorKind::degenerate);
  }
  CHECK_THROWS_AS(mathieu::asym_eval({1.0, 20.0, Complex(1, 0)}, {}), mathieu::Error);
}

TEST_CASE("asym_eval: conjugation symmetry") {
  Complex z(0.3, 0.4);
  auto a = mathieu::asym_eval({1.0, 15.0, z}, {});
  auto b = mathieu::asym_eval({1.0, 15.0, std::conj(z)}, {});
  CHECK(std::abs(b.value - std::conj(a.value)) <= 1e-13 * std::abs(a.value));
}

TEST_CASE("mellin_closed: pinned values and poles") {
  // (u=2, mu=1, z=1/2): Gamma(1)Gamma(1)/Gamma(2) Li_1(1/2) = ln 2. The
  // quadrature oracle fixes the prefactor as 1/Gamma(mu+1): the 2n in the
  // summand absorbs the 1/2 of the Beta integral.
  Complex m1 = mathieu::mellin_closed({Complex(2, 0)}, 1.0, Complex(0.5, 0));
  CHECK(m1.real() == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  // (u=1, mu=1, z=1/2): Gamma(3/2)Gamma(1/2)/Gamma(2) Li_2(1/2) = (pi/2) Li_2(1/2).
  Complex m2 = mathieu::mellin_closed({Complex(1, 0)}, 1.0, Complex(0.5, 0));
  CHECK(m2.real() ==
        doctest::Approx(kPi / 2.0 * 0.58224052646501251).epsilon(1e-12));
  // Pole of Gamma(mu+1-u/2) at u = 2 mu + 2.
  try {
    mathieu::mellin_closed({Complex(4.0, 0)}, 1.0, Complex(0.5, 0));
    CHECK(false);
  } catch (const mathieu::Error& e) {
    CHECK(e.kind() == mathieu::ErrorKind::pole);
  }
}

TEST_CASE("mellin consistency: closed form vs quadrature oracle") {
  struct Case {
    Complex u;
    double mu;
    Complex z;
  };
  const std::vector<Case> grid = {
      {{2.0, 0.0}, 1.0, {0.5, 0.0}},  {{1.0, 0.0}, 1.0, {-1.0, 0.0}},
      {{0.5, 0.0}, 0.5, {0.0, 1.0}},  {{1.5, 0.0}, 1.0, {0.3, 0.4}},
      {{2.5, 0.0}, 1.5, {-0.7, 0.0}}, {{1.0, 0.5}, 1.0, {-0.5, 0.5}},
      {{0.8, 0.0}, 0.7, {-0.9, 0.0}}, {{3.0, 0.0}, 1.2, {0.1, -0.6}},
      {{1.2, -0.3}, 0.9, {0.5, 0.5}},
  };
  for (const auto& c : grid) {
    Complex closed = mathieu::mellin_closed({c.u}, c.mu, c.z);
    auto numeric = mathieu::mellin_numeric({c.u}, c.mu, c.z, 1e-6);
    CHECK(std::abs(closed - numeric.value) <= 10.0 * 1e-6 * std::abs(closed));
  }
  // (u=1, mu=1, z=-1) has the closed form -(pi/2) eta(2) = -pi^3/24.
  Complex alt = mathieu::mellin_closed({Complex(1, 0)}, 1.0, Complex(-1, 0));
  CHECK(alt.real() == doctest::Approx(-std::pow(kPi, 3) / 24.0).epsilon(1e-11));
}

TEST_CASE("mellin_numeric: strip validation") {
  CHECK_THROWS_AS(mathieu::mellin_numeric({Complex(4.5, 0)}, 1.0, Complex(0.5, 0), 1e-6),
                  mathieu::Error);
  CHECK_THROWS_AS(mathieu::mellin_numeric({Complex(-0.5, 0)}, 1.0, Complex(0.5, 0), 1e-6),
                  mathieu::Error);
  CHECK_THROWS_AS(mathieu::mellin_numeric({Complex(1.0, 0)}, 1.0, Complex(1.0, 0), 1e-6),
                  mathieu::Error);
}

TEST_CASE("growth_order_probe: decay orders match the asymptotic scale") {
  const std::vector<double> grid = {20.0, 30.0, 40.0};
  // z != 1: r^{-2mu-2}.
  CHECK(mathieu::growth_order_probe(1.0, Complex(-1, 0), grid) ==
        doctest::Approx(-4.0).epsilon(0.0125));
  CHECK(mathieu::growth_order_probe(0.5, Complex(0, 1), grid) ==
        doctest::Approx(-3.0).epsilon(2e-2));
  // z = 1: r^{-2mu}.
  CHECK(mathieu::growth_order_probe(1.0, Complex(1, 0), grid, 1e-12) ==
        doctest::Approx(-2.0).epsilon(0.025));
  const std::vector<double> short_grid = {10.0, 20.0};
  CHECK_THROWS_AS(mathieu::growth_order_probe(1.0, Complex(-1, 0), short_grid),
                  mathieu::Error);
}
