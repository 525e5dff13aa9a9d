#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "subres/errors.hpp"
#include "subres/modal.hpp"
#include "subres/special.hpp"

using namespace subres;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("zeta closed forms") {
  CHECK(std::abs(zeta(2.0) - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(zeta(4.0) - std::pow(kPi, 4) / 90.0) < 1e-12);
  CHECK(std::abs(zeta(8.0) - std::pow(kPi, 8) / 9450.0) < 1e-12);
  CHECK_THROWS_AS(zeta(1.0), DomainError);
  CHECK_THROWS_AS(zeta(0.5), DomainError);
  CHECK_THROWS_AS(zeta(NAN), DomainError);
}

TEST_CASE("zeta agrees with the standard library implementation") {
  for (double s = 1.05; s < 60.0; s *= 1.13) {
    CHECK(std::abs(zeta(s) - std::riemann_zeta(s)) < 1e-12 * std::riemann_zeta(s));
  }
}

TEST_CASE("zeta is strictly decreasing towards 1") {
  double previous = INFINITY;
  // Past s ~ 45 neighbouring values differ by less than one ulp of 1.
  for (double s = 1.01; s <= 40.0; s += 0.07) {
    const double z = zeta(s);
    CHECK(z < previous);
    CHECK(z > 1.0);
    previous = z;
  }
  CHECK(zeta(200.0) == 1.0);
  CHECK(zeta(INFINITY) == 1.0);
}

TEST_CASE("sigma_s Maclaurin-zeta series") {
  const ForcingParams params(2, 3);
  const ToleranceConfig tol;
  CHECK(sigma_s_maclaurin(params, 0.0, tol) == 0.0);

  // Leading behaviour sigma_s / t -> zeta(k): the j = 1 term carries
  // sum n^(p-k) n^-p = zeta(k).
  const double t = 1e-4;
  const double direct = sigma_sums_converged(params, t).sigma_s;
  CHECK(sigma_s_maclaurin(params, t, tol) / t == doctest::Approx(zeta(2.0)).epsilon(1e-8));
  CHECK(direct / t == doctest::Approx(zeta(2.0)).epsilon(1e-8));

  // mpmath nsum of the direct series at t = 1
  CHECK(std::abs(sigma_s_maclaurin(params, 1.0, tol) - 1.4857260025016872533) < 1e-10);

  for (double tt : {0.1, 1.0, 5.0}) {
    CHECK(std::abs(sigma_s_maclaurin(params, tt, tol) - sigma_sums_converged(params, tt).sigma_s) <
          1e-9);
  }
}

TEST_CASE("sigma_c Maclaurin-zeta series") {
  const ForcingParams params(2, 3);
  CHECK(sigma_c_maclaurin(params, 0.0, {}) == 0.0);
  CHECK(std::abs(sigma_c_maclaurin(params, 2.0, {}) - 0.74483678293502748982) < 1e-10);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tdist(0.0, 6.0), kdist(1.2, 3.0), pdist(0.5, 4.0);
  for (int i = 0; i < 20; ++i) {
    const ForcingParams q(kdist(rng), pdist(rng));
    const double tt = tdist(rng);
    const auto direct = sigma_sums_converged(q, tt);
    CHECK(std::abs(sigma_s_maclaurin(q, tt, {}) - direct.sigma_s) < 1e-9);
    CHECK(std::abs(sigma_c_maclaurin(q, tt, {}) - direct.sigma_c) < 1e-9);
  }
}

TEST_CASE("Maclaurin series reports non-convergence") {
  ToleranceConfig tol;
  tol.max_series_terms = 20;
  CHECK_THROWS_AS(sigma_s_maclaurin(ForcingParams(2, 3), 100.0, tol), ConvergenceError);
}

TEST_CASE("majorant zeta(k) sinh(t)") {
  for (auto [k, p] : {std::pair{2.0, 3.0}, std::pair{1.3, 0.8}, std::pair{4.0, 2.0}}) {
    const ForcingParams params(k, p);
    for (double t = 0.0; t <= 8.0; t += 0.2) {
      CHECK(std::abs(sigma_s_maclaurin(params, t, {})) <= zeta(k) * std::sinh(t));
    }
  }
}

TEST_CASE("singular sine integral") {
  const ToleranceConfig tol;
  SUBCASE("alpha = 1 reduces to Si(pi/2)") {
    const auto r = singular_integral_sine(1.0, tol);
    CHECK(r.outside_growth_regime);
    CHECK(std::abs(r.value - 1.3707621681544884801) < 1e-8);  // mpmath si(pi/2)
    CHECK(std::abs(sine_integral(kPi / 2) - 1.3707621681544884801) < 1e-15);
  }
  SUBCASE("alpha = 1/3 against the global termwise series and mpmath") {
    const auto r = singular_integral_sine(1.0 / 3.0, tol);
    CHECK_FALSE(r.outside_growth_regime);
    CHECK(std::abs(r.value - termwise_integral_sine(1.0 / 3.0)) < 1e-10);
    CHECK(std::abs(r.value - 3.2955455892108424556) < 1e-12);
  }
  SUBCASE("split point independence") {
    ToleranceConfig half = tol;
    half.split_point = tol.split_point / 2;
    CHECK(std::abs(singular_integral_sine(0.9, tol).value -
                   singular_integral_sine(0.9, half).value) < 1e-11);
    ToleranceConfig all_series = tol;
    all_series.split_point = kPi / 2;
    CHECK(std::abs(singular_integral_sine(0.9, tol).value -
                   singular_integral_sine(0.9, all_series).value) < 1e-11);
  }
  SUBCASE("divergent alpha is rejected") {
    CHECK_THROWS_AS(singular_integral_sine(0.0, tol), DomainError);
    CHECK_THROWS_AS(singular_integral_sine(-0.5, tol), DomainError);
  }
}

TEST_CASE("singular sine-squared integral") {
  const ToleranceConfig tol;
  CHECK(std::abs(singular_integral_sine_squared(1.0 / 3.0, tol).value -
                 termwise_integral_sine_squared(1.0 / 3.0)) < 1e-10);
  CHECK(std::abs(singular_integral_sine_squared(1.0 / 3.0, tol).value - 0.63037867624341148542) <
        1e-12);
  CHECK(std::abs(singular_integral_sine_squared(0.5, tol).value - 0.66128377187277734371) < 1e-12);

  // Additivity over [0, pi/2] and [pi/2, pi].
  const double whole = singular_integral_sine_squared(0.5, tol).value;
  const double left = singular_integral_sine_squared(0.5, tol, kPi / 2).value;
  const double right = termwise_integral_sine_squared(0.5, kPi) - termwise_integral_sine_squared(0.5, kPi / 2);
  CHECK(std::abs(whole - (left + right)) < 1e-11);

  for (double alpha = 0.05; alpha < 1.0; alpha += 0.05) {
    CHECK(singular_integral_sine_squared(alpha, tol).value > 0.0);
    CHECK(singular_integral_sine(alpha, tol).value > 0.0);
  }
  CHECK_THROWS_AS(singular_integral_sine_squared(0.0, tol), DomainError);
}

TEST_CASE("dual-path equality over the growth regime") {
  const ToleranceConfig tol;
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    CHECK(std::abs(singular_integral_sine(alpha, tol).value - termwise_integral_sine(alpha)) < 1e-10);
    CHECK(std::abs(singular_integral_sine_squared(alpha, tol).value -
                   termwise_integral_sine_squared(alpha)) < 1e-10);
  }
}

TEST_CASE("tolerance config validation") {
  ToleranceConfig bad;
  bad.split_point = 2.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = {};
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(singular_integral_sine(0.5, bad), DomainError);
}
