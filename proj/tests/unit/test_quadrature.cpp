#include <doctest.h>

#include <cmath>
#include <vector>

#include "vdw/quadrature.hpp"

using namespace vdw;

TEST_CASE("single Kronrod panel is exact for polynomials up to degree 22") {
  double err = 0.0;
  const double v = gauss_kronrod_15([](double x) { return std::pow(x, 20); }, 0.0, 1.0, err);
  CHECK(v == doctest::Approx(1.0 / 21.0).epsilon(1e-13));
}

TEST_CASE("adaptive integration of smooth and singular integrands") {
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 40.0).value ==
        doctest::Approx(1.0 - std::exp(-40.0)).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI).value == doctest::Approx(2.0).epsilon(1e-10));
  // Integrable endpoint singularity.
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("breakpoints at a kink") {
  const std::vector<double> pts{-1.0, 0.3, 2.0};
  const auto r = integrate([](double x) { return std::abs(x - 0.3); }, pts);
  CHECK(r.value == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7).epsilon(1e-13));
  CHECK(r.intervals <= 4);
}

TEST_CASE("non-convergence is reported") {
  QuadratureOptions opt;
  opt.max_intervals = 3;
  opt.rel_tol = 1e-14;
  const auto wild = [](double x) { return std::sin(1.0 / (x + 1e-3)); };
  CHECK_THROWS_AS(integrate(wild, 0.0, 1.0, opt), NumericError);
  opt.throw_on_failure = false;
  const auto r = integrate(wild, 0.0, 1.0, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.worst_hi > r.worst_lo);
}
