// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/measures.hpp"

#include <cmath>

#include "diffent/errors.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace diffent;

namespace {

constexpr double kPi = 3.14159265358979323846;

LogDensity standard_normal() {
  return LogDensity{[](double x) { return -0.5 * std::log(2.0 * kPi) - 0.5 * x * x; },
                    Interval::real_line()};
}

LogDensity cauchy() {
  return LogDensity{[](double x) { return -std::log(kPi) - std::log1p(x * x); },
                    Interval::real_line()};
}

LogDensity laplace() {
  return LogDensity{[](double x) { return -std::log(2.0) - std::fabs(x); },
                    Interval::real_line()};
}

LogDensity uniform01() {
  return LogDensity{[](double) { return 0.0; }, Interval::unit()};
}

LogDensity shifted_normal(double mu) {
  return LogDensity{[mu](double x) {
                      const double d = x - mu;
                      return -0.5 * std::log(2.0 * kPi) - 0.5 * d * d;
                    },
                    Interval::real_line()};
}

}  // namespace

TEST_CASE("renyi_numeric on the reference densities") {
  for (double a : {0.5, 2.0, 4.0}) {
    CAPTURE(a);
    CHECK(renyi_numeric(uniform01(), a).value == AbsTol(0.0, 1e-10));
  }
  CHECK(renyi_numeric(standard_normal(), 2.0).value ==
        doctest::Approx(0.5 * std::log(4.0 * kPi)).epsilon(1e-10));  // 1.2655121...
  CHECK(renyi_numeric(cauchy(), 2.0).value ==
        doctest::Approx(std::log(2.0 * kPi)).epsilon(1e-10));  // 1.8378771...
}

TEST_CASE("renyi_numeric guards and divergence detection") {
  CHECK_THROWS_AS(renyi_numeric(standard_normal(), -1.0), std::domain_error);
  CHECK_THROWS_AS(renyi_numeric(standard_normal(), 1.0 + 1e-8), std::domain_error);
  // Cauchy^alpha is integrable only for alpha > 1/2
  CHECK_THROWS_AS(renyi_numeric(cauchy(), 0.4), divergence_error);
}

TEST_CASE("shannon_numeric on the reference densities") {
  CHECK(shannon_numeric(standard_normal()).value ==
        doctest::Approx(0.5 * (1.0 + std::log(2.0 * kPi))).epsilon(1e-10));  // 1.4189385
  CHECK(shannon_numeric(cauchy()).value ==
        doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-10));  // 2.5310242
  CHECK(shannon_numeric(uniform01()).value == AbsTol(0.0, 1e-10));
  CHECK(shannon_numeric(laplace()).value ==
        doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("song_numeric is the variance of the log-likelihood") {
  // Var(log f) for the normal is Var(X^2/2) = 1/2
  CHECK(song_numeric(standard_normal()).value == doctest::Approx(0.5).epsilon(1e-9));
  // Laplace: Var(|X|) = 1
  CHECK(song_numeric(laplace()).value == doctest::Approx(1.0).epsilon(1e-9));
  // Cauchy: 4 Var(log cos U), U uniform on (-pi/2, pi/2): pi^2/3
  CHECK(song_numeric(cauchy()).value == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-9));
  // uniform log-density is constant
  CHECK(song_numeric(uniform01()).value == AbsTol(0.0, 1e-10));
}

TEST_CASE("gradient identity: -2 d/dalpha R_alpha at 1 equals the shape index") {
  const double h = 1e-3;
  for (const LogDensity& f : {standard_normal(), laplace(), cauchy()}) {
    const double up = renyi_numeric(f, 1.0 + h).value;
    const double dn = renyi_numeric(f, 1.0 - h).value;
    const double from_gradient = -2.0 * (up - dn) / (2.0 * h);
    CHECK(from_gradient == AbsTol(song_numeric(f).value, 1e-4));
  }
}

TEST_CASE("renyi to shannon continuity at alpha = 1 +- 1e-3") {
  for (const LogDensity& f : {standard_normal(), laplace(), cauchy(), uniform01()}) {
    const double r1 = shannon_numeric(f).value;
    CHECK(std::fabs(renyi_numeric(f, 1.001).value - r1) < 5e-3);
    CHECK(std::fabs(renyi_numeric(f, 0.999).value - r1) < 5e-3);
  }
}

TEST_CASE("the shape index is location-scale free") {
  for (const LogDensity& base : {standard_normal(), laplace(), cauchy()}) {
    const double s0 = song_numeric(base).value;
    for (auto [mu, sigma] : {std::pair{3.0, 2.0}, std::pair{-1.0, 0.5}}) {
      CAPTURE(mu);
      CAPTURE(sigma);
      CHECK(song_numeric(base.affine(mu, sigma)).value ==
            AbsTol(s0, 1e-6));
    }
  }
}

TEST_CASE("renyi_divergence: identical densities and the Gaussian shift") {
  auto f = standard_normal();
  for (double a : {0.5, 2.0}) {
    CAPTURE(a);
    CHECK(renyi_divergence(f, f, a).value == AbsTol(0.0, 1e-10));
  }
  // same-variance Gaussians: D_alpha = (mu1 - mu2)^2 / 2 for every order
  auto g = shifted_normal(1.0);
  CHECK(renyi_divergence(f, g, 0.5).value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(renyi_divergence(f, g, 2.0).value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(renyi_divergence(f, g, 0.5).value >= 0.0);
}

TEST_CASE("renyi_divergence support checks and tail divergence") {
  CHECK_THROWS_AS(renyi_divergence(standard_normal(), uniform01(), 2.0), support_error);
  // (cauchy/normal)^2 normal grows like e^{x^2/2}: divergent
  CHECK_THROWS_AS(renyi_divergence(cauchy(), standard_normal(), 2.0), divergence_error);
  // the reverse direction is dominated by the normal tails
  const double d = renyi_divergence(standard_normal(), cauchy(), 2.0).value;
  CHECK(std::isfinite(d));
  CHECK(d > 0.0);
}

TEST_CASE("power_divergence: zero at equality, first-order equal to D") {
  auto f = standard_normal();
  CHECK(power_divergence(f, f, 0.5).value == AbsTol(0.0, 1e-10));

  auto g = shifted_normal(1e-3);  // D of order 5e-7
  for (double a : {0.5, 2.0}) {
    CAPTURE(a);
    const double d = renyi_divergence(f, g, a).value;
    const double psi = power_divergence(f, g, a).value;
    CHECK(d <= 1e-6);
    CHECK(std::fabs(psi - d) <= 1e-12);
  }

  auto far = shifted_normal(1.0);
  const double d = renyi_divergence(f, far, 0.5).value;
  const double psi = power_divergence(f, far, 0.5).value;
  CHECK(psi == doctest::Approx(std::expm1(0.25 * d) / 0.25).epsilon(1e-10));
}
