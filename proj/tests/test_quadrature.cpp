#include <doctest.h>

#include <cmath>
#include <numbers>

#include "subres/quadrature.hpp"

using namespace subres;

TEST_CASE("Gauss-Kronrod is exact on low-degree polynomials") {
  const auto r = quadrature::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0,
                                       1e-14, 1e-14);
  CHECK(r.value == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(r.intervals == 1);
  CHECK(r.converged);
}

TEST_CASE("adaptive refinement on smooth and endpoint-singular integrands") {
  const auto sine = quadrature::integrate([](double x) { return std::sin(x); }, 0.0,
                                          std::numbers::pi, 1e-14, 1e-14);
  CHECK(std::abs(sine.value - 2.0) < 1e-14);

  const auto root = quadrature::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12,
                                          1e-12);
  CHECK(root.converged);
  CHECK(std::abs(root.value - 2.0 / 3.0) < 1e-12);
  CHECK(root.intervals > 1);
}

TEST_CASE("interval cap reports non-convergence") {
  const auto r = quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                       1e-15, 1e-15, 10);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 10);
}
