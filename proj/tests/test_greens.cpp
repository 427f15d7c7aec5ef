#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "vdf/errors.hpp"
#include "vdf/greens.hpp"

using namespace vdf;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

double max_diff(const Dyadic3C &a, const Dyadic3C &b) { return max_abs(a - b); }

Vec3d random_unit(std::mt19937_64 &rng) {
  std::normal_distribution<double> n;
  Vec3d v{n(rng), n(rng), n(rng)};
  return v / norm(v);
}

}  // namespace

TEST_CASE("projectors along z") {
  const auto [a, b] = projectors({0, 0, 1});
  const double ad[3] = {1, 1, 0}, bd[3] = {1, 1, -2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(a(i, j) == cplx(i == j ? ad[i] : 0.0));
      CHECK(b(i, j) == cplx(i == j ? bd[i] : 0.0));
    }
}

TEST_CASE("projector traces and eigenstructure") {
  const Vec3d r = Vec3d{1, 1, 1} / std::sqrt(3.0);
  const auto [a, b] = projectors(r);
  CHECK(std::abs(trace(a) - 2.0) < 1e-14);
  CHECK(std::abs(trace(b)) < 1e-14);
  const Vec3c rc{r[0], r[1], r[2]};
  const Vec3c ar = a * rc, br = b * rc;
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(ar[i]) < 1e-15);
    CHECK(std::abs(br[i] + 2.0 * r[i]) < 1e-15);
  }
}

TEST_CASE("projector algebra alpha = I - rr, beta = alpha - 2rr") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    const Vec3d r = random_unit(rng);
    const auto [a, b] = projectors(r);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double rr = r[i] * r[j];
        CHECK(a(i, j).real() == doctest::Approx((i == j ? 1.0 : 0.0) - rr).epsilon(1e-15));
        CHECK(std::abs(b(i, j) - (a(i, j) - 2.0 * rr)) < 1e-15);
      }
  }
}

TEST_CASE("projectors reject non-unit input") {
  CHECK_THROWS_AS(projectors({0, 0, 1.001}), NormalizationError);
}

TEST_CASE("green_electric far-zone truncation") {
  const double k = 1.0;
  const Vec3d R{0.0, 0.6e6, 0.8e6};
  const Dyadic3C G = green_electric(k, R);
  const auto [a, b] = projectors(R / norm(R));
  const Dyadic3C lead = a * (k * std::exp(I * k * norm(R)) / (4.0 * pi * k * norm(R)));
  CHECK(max_diff(G, lead) / max_abs(lead) < 1e-5);
}

TEST_CASE("green_electric zz on the z axis") {
  const Dyadic3C G = green_electric(1.0, {0, 0, 1});
  const cplx expect = std::exp(I) / (4.0 * pi) * cplx(2.0, -2.0);
  CHECK(std::abs(G(2, 2) - expect) < 1e-15);
}

TEST_CASE("green_electric matches term-by-term evaluation") {
  const double k = 2.0;
  const Vec3d R{0.3, 0.4, 0.5};
  const double r = norm(R);
  const double q = k * r;
  const cplx pre = k * std::exp(I * q) / (4.0 * pi);
  const Dyadic3C G = green_electric(k, R);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double d = i == j ? 1.0 : 0.0;
      const double rr = R[i] * R[j] / (r * r);
      const cplx t1 = pre * (d - rr) / q;
      const cplx t2 = pre * I * (d - 3.0 * rr) / (q * q);
      const cplx t3 = -pre * (d - 3.0 * rr) / (q * q * q);
      CHECK(std::abs(G(i, j) - (t1 + t2 + t3)) < 1e-14);
    }
  // reference values from an independent numpy evaluation
  CHECK(std::abs(G(0, 0) - cplx(-0.025803400928261895, 0.07129442585113169)) < 1e-14);
  CHECK(std::abs(G(0, 1) - cplx(0.058700799644117285, 0.004404611414091971)) < 1e-14);
  CHECK(std::abs(G(2, 2) - cplx(0.052464331930561145, 0.07716724106992098)) < 1e-14);
}

TEST_CASE("green_electric is symmetric over kR in [1e-3, 1e3]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logkr(-3.0, 3.0);
  for (int n = 0; n < 200; ++n) {
    const Vec3d R = random_unit(rng) * std::pow(10.0, logkr(rng));
    const Dyadic3C G = green_electric(1.0, R);
    CHECK(max_diff(G, transpose(G)) <= 1e-15 * max_abs(G));
  }
}

TEST_CASE("green_electric scaling: G(k,R) = (k/k') G(k', R k/k')") {
  std::mt19937_64 rng(3);
  for (double kp : {0.5, 3.0, 17.0}) {
    const double k = 1.3;
    const Vec3d R = random_unit(rng) * 2.1;
    const Dyadic3C a = green_electric(k, R);
    const Dyadic3C b = green_electric(kp, R * (k / kp)) * (k / kp);
    CHECK(max_diff(a, b) <= 1e-13 * max_abs(a));
  }
}

TEST_CASE("green_electric errors") {
  CHECK_THROWS_AS(green_electric(1.0, {0, 0, 0}), SingularityError);
  CHECK_THROWS_AS(green_electric(1.0, {0, 0, 1e-9}), DomainError);
  CHECK_THROWS_AS(green_magnetic(1.0, {0, 0, 0}), SingularityError);
}

TEST_CASE("green_magnetic on the z axis") {
  const Dyadic3C Gm = green_magnetic(1.0, {0, 0, 1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const bool xy = (i == 0 && j == 1) || (i == 1 && j == 0);
      if (!xy) CHECK(Gm(i, j) == cplx(0.0));
    }
  CHECK(std::abs(Gm(0, 1)) > 0.0);
  CHECK(Gm(0, 1) == -Gm(1, 0));
}

TEST_CASE("green_magnetic antisymmetry") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const Dyadic3C Gm = green_magnetic(0.7, random_unit(rng) * 3.3);
    const Dyadic3C s = Gm + transpose(Gm);
    for (const auto &e : s.m) CHECK(e == cplx(0.0));
  }
}

TEST_CASE("green_magnetic value at R = 2z") {
  // With G^{mj} ∝ eps^{msj} R_s the xy entry carries eps^{xzy} = -1.
  const Dyadic3C Gm = green_magnetic(1.0, {0, 0, 2});
  const cplx expect = -std::exp(2.0 * I) / (8.0 * pi) * cplx(1.0, 0.5);
  CHECK(std::abs(Gm(0, 1) - expect) < 1e-15);
  CHECK(std::abs(Gm(0, 1) - cplx(0.034647854049639215, -0.027900816793945467)) < 1e-15);
}

TEST_CASE("green_shifted_exact identities") {
  const Vec3d R{0.2, -0.4, 1.1};
  const Dyadic3C G = green_electric(1.0, R);
  CHECK(max_diff(green_shifted_exact(1.0, R, {0, 0, 0}, 3.0), G) == 0.0);
  CHECK(max_diff(green_shifted_exact(1.0, R, {0.01, 0.02, 0}, 0.0), G) == 0.0);
  const Dyadic3C c = green_shifted_exact(1.0, {0, 0, 5}, {0, 0, 0.01}, 1.0);
  CHECK(max_diff(c, green_electric(1.0, {0, 0, 4.99})) < 1e-16);
  CHECK_THROWS_AS(green_shifted_exact(1.0, {0, 0, 1}, {0, 0, 0.5}, 2.0), SingularityError);
}

TEST_CASE("green_shifted_linear base point and convergence order") {
  const Vec3d R{0.5, 0.3, 2.0};
  CHECK(max_diff(green_shifted_linear(1.0, R, {0, 0, 0}, 4.0), green_electric(1.0, R)) == 0.0);
  const Vec3d v{0.004, -0.002, 0.003};
  const double tau = 5.0;
  auto diff = [&](double s) {
    return frobenius(green_shifted_exact(1.0, R, v * s, tau) - green_shifted_linear(1.0, R, v * s, tau));
  };
  const double r1 = diff(1.0) / diff(0.5);
  const double r2 = diff(0.5) / diff(0.25);
  CHECK(r1 == doctest::Approx(4.0).epsilon(0.125));
  CHECK(r2 == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("lag corrections") {
  const Vec3d R{0, 0, 3};
  const LagCorrections zero = lag_corrections(1.0, R, {0, 0, 0}, 2.0);
  CHECK(max_abs(zero.dG_lag_R) == 0.0);
  CHECK(max_abs(zero.dGm_lag_R) == 0.0);
  CHECK(max_abs(zero.dG_lag_perp) == 0.0);
  CHECK(max_abs(zero.dGm_lag_perp) == 0.0);

  const Vec3d v{0.01, 0, 0.01};
  const LagCorrections a = lag_corrections(1.0, R, v, 2.0);
  const LagCorrections b = lag_corrections(1.0, R, v, 4.0);
  CHECK(max_diff(b.dG_lag_R, a.dG_lag_R * 2.0) < 1e-18);
  CHECK(max_diff(b.dGm_lag_R, a.dGm_lag_R * 2.0) < 1e-18);
  CHECK(max_diff(b.dG_lag_perp, a.dG_lag_perp * 2.0) < 1e-18);
  CHECK(max_diff(b.dGm_lag_perp, a.dGm_lag_perp * 2.0) < 1e-18);
  CHECK(a.lag_time == 2.0);

  // -tau (k e^{ikR}/4 pi R)(1/kR + i/(kR)^2) eps_{psq} v_perp^s with v_perp = 0.01 x
  const cplx pre = -2.0 * std::exp(3.0 * I) / (4.0 * pi * 3.0) * (1.0 / 3.0 + I / 9.0);
  CHECK(std::abs(a.dGm_lag_perp(1, 2) - pre * (-0.01)) < 1e-18);
  CHECK(std::abs(a.dGm_lag_perp(2, 1) - pre * 0.01) < 1e-18);
  CHECK(std::abs(a.dGm_lag_perp(1, 2) - cplx(-0.00018338760934275472, -3.340087366746643e-05)) < 1e-17);
  CHECK(std::abs(a.dG_lag_R(0, 0) - cplx(-0.00013334973800721724, -0.00010007574267107504)) < 1e-17);
  CHECK(std::abs(a.dG_lag_R(2, 2) - cplx(-8.343874500300395e-05, 0.00025006247834636334)) < 1e-17);
}

TEST_CASE("radial and perpendicular lag terms follow their velocity components") {
  const Vec3d R{0, 0, 2};
  const LagCorrections radial = lag_corrections(1.0, R, {0, 0, 0.02}, 1.5);
  CHECK(max_abs(radial.dG_lag_perp) == 0.0);
  CHECK(max_abs(radial.dGm_lag_perp) == 0.0);
  const LagCorrections perp = lag_corrections(1.0, R, {0.02, 0, 0}, 1.5);
  CHECK(max_abs(perp.dG_lag_R) == 0.0);
  CHECK(max_abs(perp.dGm_lag_R) == 0.0);
  const LagCorrections twice = lag_corrections(1.0, R, {0, 0, 0.04}, 1.5);
  CHECK(max_diff(twice.dG_lag_R, radial.dG_lag_R * 2.0) < 1e-18);
  CHECK(max_diff(twice.dGm_lag_R, radial.dGm_lag_R * 2.0) < 1e-18);
}
