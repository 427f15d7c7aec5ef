#include <cmath>
#include <numbers>

#include "doctest.h"
#include "vdf/quadrature.hpp"

using namespace vdf;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("adaptive integration of smooth functions") {
  const auto r = integrate<double>([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0.0, 10.0, 1e-14);
  const double exact = (1.0 - std::exp(-10.0) * (std::cos(30.0) - 3 * std::sin(30.0))) / 10.0;
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
  CHECK(r.error >= 0.0);
}

TEST_CASE("adaptive integration of an endpoint singularity") {
  const auto r = integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12, 1e-10, 40);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("complex and vector integrands") {
  const auto c = integrate<cplx>([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, pi, 1e-14);
  CHECK(std::abs(c.value - cplx(0.0, 2.0)) < 1e-13);
  const auto v = integrate<Vec3d>([](double x) { return Vec3d{1.0, x, x * x}; }, 0.0, 2.0, 1e-14);
  CHECK(v.value[0] == doctest::Approx(2.0));
  CHECK(v.value[1] == doctest::Approx(2.0));
  CHECK(v.value[2] == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("Wynn epsilon accelerates an alternating series") {
  std::vector<double> s;
  double acc = 0.0;
  for (int n = 0; n < 16; ++n) {
    acc += (n % 2 ? -1.0 : 1.0) / (n + 1.0);
    s.push_back(acc);
  }
  const EpsilonEstimate e = wynn_epsilon(s);
  CHECK(std::abs(s.back() - std::log(2.0)) > 1e-2);
  CHECK(e.value == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(e.error < 1e-8);
}

TEST_CASE("Wynn epsilon edge cases") {
  CHECK(wynn_epsilon({}).value == 0.0);
  CHECK(wynn_epsilon({1.5}).value == 1.5);
  CHECK(std::isinf(wynn_epsilon({1.5}).error));
  const EpsilonEstimate c = wynn_epsilon({2.0, 2.0, 2.0, 2.0});
  CHECK(c.value == 2.0);
  CHECK(c.error == 0.0);
}

TEST_CASE("partition extrapolation of an oscillatory tail") {
  // integral_0^inf sin(x)/x dx = pi/2, panels between zeros
  auto panel = [](int i) {
    const auto r = integrate<double>([](double x) { return std::sin(x) / x; }, i * pi, (i + 1) * pi, 1e-15, 1e-13);
    return Vec3d{r.value, 0.0, -r.value};
  };
  const ExtrapolatedSum s = partition_extrapolate(panel, 1e-10, 0.0, 8, 400);
  CHECK(s.converged);
  CHECK(s.value[0] == doctest::Approx(pi / 2).epsilon(1e-9));
  CHECK(s.value[2] == doctest::Approx(-pi / 2).epsilon(1e-9));
  CHECK(s.panels < 100);
}

TEST_CASE("partition extrapolation reports non-convergence") {
  auto panel = [](int i) { return Vec3d{1.0 / std::sqrt(i + 1.0), 0.0, 0.0}; };
  const ExtrapolatedSum s = partition_extrapolate(panel, 1e-12, 0.0, 8, 50);
  CHECK_FALSE(s.converged);
  CHECK(s.panels == 50);
}
