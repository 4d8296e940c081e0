// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/special_functions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "diffent/quadrature.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace diffent;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286061;

// Independent route to K_nu(x): the integral representation
// K_nu(x) = 1/2 int_0^inf exp{-x(u + 1/u)/2} u^{-nu-1} du.
double bessel_k_oracle(double nu, double x) {
  auto integrand = [nu, x](double u) {
    return exp_guarded(-0.5 * x * (u + 1.0 / u) - (nu + 1.0) * std::log(u));
  };
  return 0.5 * integrate(integrand, Interval::positive_half_line(), {1e-14, 1e-12}).value;
}

// d/dnu of the same representation, differentiated under the integral sign.
double bessel_k_dnu_oracle(double nu, double x) {
  auto integrand = [nu, x](double u) {
    const double lu = std::log(u);
    const double e = -0.5 * x * (u + 1.0 / u) - (nu + 1.0) * lu;
    return e < -745.0 ? 0.0 : -std::exp(e) * lu;
  };
  return 0.5 * integrate(integrand, Interval::positive_half_line(), {1e-14, 1e-12}).value;
}

}  // namespace

TEST_CASE("log_gamma at classical points") {
  CHECK(sf::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(sf::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::log_gamma(-1.5), std::domain_error);
}

TEST_CASE("digamma at classical points") {
  CHECK(sf::digamma(1.0) == doctest::Approx(-kEuler).epsilon(1e-13));
  CHECK(sf::digamma(2.0) == doctest::Approx(1.0 - kEuler).epsilon(1e-13));
  CHECK(sf::digamma(0.5) == doctest::Approx(-kEuler - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(sf::digamma(-2.0), std::domain_error);
}

TEST_CASE("trigamma at classical points") {
  CHECK(sf::trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(sf::trigamma(0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
  CHECK(sf::trigamma(3.0) == doctest::Approx(kPi * kPi / 6.0 - 1.25).epsilon(1e-13));
  CHECK_THROWS_AS(sf::trigamma(0.0), std::domain_error);
}

TEST_CASE("log_beta at classical points") {
  CHECK(sf::log_beta(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::log_beta(0.5, 0.5) == doctest::Approx(std::log(kPi)).epsilon(1e-14));
  CHECK(sf::log_beta(1.5, 1.5) == doctest::Approx(std::log(kPi / 8.0)).epsilon(1e-13));
  CHECK_THROWS_AS(sf::log_beta(0.0, 1.0), std::domain_error);
}

TEST_CASE("digamma and trigamma recurrences") {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> dist(0.1, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    CAPTURE(x);
    CHECK(sf::digamma(x + 1.0) - sf::digamma(x) - 1.0 / x ==
          AbsTol(0.0, 1e-12));
    CHECK(sf::trigamma(x + 1.0) - sf::trigamma(x) + 1.0 / (x * x) ==
          AbsTol(0.0, 1e-12));
  }
}

TEST_CASE("bessel_k half-integer closed form and oracle") {
  CHECK(sf::bessel_k(0.5, 2.0) ==
        doctest::Approx(std::sqrt(kPi / 4.0) * std::exp(-2.0)).epsilon(1e-13));
  // value of the integral representation, frozen from the oracle below
  const double k11 = bessel_k_oracle(1.0, 1.0);
  CHECK(k11 == doctest::Approx(0.6019072302).epsilon(1e-9));
  CHECK(sf::bessel_k(1.0, 1.0) == doctest::Approx(k11).epsilon(1e-11));
  CHECK(sf::bessel_k(-1.0, 1.0) == doctest::Approx(sf::bessel_k(1.0, 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(sf::bessel_k(1.0, -3.0), std::domain_error);
}

TEST_CASE("bessel_k matches the integral representation across orders") {
  for (double nu : {0.0, 0.3, 1.0, 2.7, 7.5}) {
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(sf::bessel_k(nu, x) == doctest::Approx(bessel_k_oracle(nu, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("bessel_k symmetry in the order") {
  for (double nu : {0.0, 0.3, 1.0, 2.7}) {
    for (double x : {0.5, 1.0, 5.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(sf::bessel_k(nu, x) == doctest::Approx(sf::bessel_k(-nu, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("bessel_k overflow is signalled near the origin") {
  CHECK_THROWS_AS(sf::bessel_k(150.0, 1e-4), std::overflow_error);
}

TEST_CASE("argument-derivative recurrence dK/dx = -K_{nu-1} - (nu/x) K_nu") {
  for (double nu : {0.3, 1.0, 2.5}) {
    for (double x : {0.7, 2.0, 10.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      const double h = 1e-5 * x;
      const double fd =
          (sf::bessel_k(nu, x + h) - sf::bessel_k(nu, x - h)) / (2.0 * h);
      const double rec = -sf::bessel_k(nu - 1.0, x) - (nu / x) * sf::bessel_k(nu, x);
      CHECK(fd == doctest::Approx(rec).epsilon(1e-7));
    }
  }
}

TEST_CASE("bessel_k_dnu vanishes at nu = 0 and is antisymmetric") {
  for (double x : {0.5, 2.0, 10.0}) {
    CAPTURE(x);
    CHECK(sf::bessel_k_dnu(0.0, x) == 0.0);
  }
  for (double nu : {0.4, 1.0, 3.2}) {
    for (double x : {0.5, 2.0, 10.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(sf::bessel_k_dnu(nu, x) + sf::bessel_k_dnu(-nu, x) ==
            AbsTol(0.0, 1e-8));
    }
  }
}

TEST_CASE("bessel_k_dnu against the differentiated integral representation") {
  CHECK(sf::bessel_k_dnu(0.5, 2.0) ==
        AbsTol(bessel_k_dnu_oracle(0.5, 2.0), 1e-7));
  CHECK(sf::bessel_k_dnu(1.0, 1.0) ==
        AbsTol(bessel_k_dnu_oracle(1.0, 1.0), 1e-7));
  CHECK(sf::bessel_k_dnu(2.3, 4.0) ==
        AbsTol(bessel_k_dnu_oracle(2.3, 4.0), 1e-7));
  const auto checked = sf::bessel_k_dnu_checked(1.0, 1.0);
  CHECK(checked.abs_err_est < 1e-7);
}

TEST_CASE("log_bessel_k agrees with the direct value and survives large x") {
  for (double nu : {0.0, 1.0, 5.0}) {
    for (double x : {0.5, 10.0, 300.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(sf::log_bessel_k(nu, x) ==
            doctest::Approx(std::log(sf::bessel_k(nu, x))).epsilon(1e-12));
    }
  }
  // beyond the underflow point of K itself
  const double lk = sf::log_bessel_k(1.0, 800.0);
  CHECK(std::isfinite(lk));
  // leading asymptotic term: -x + 0.5 log(pi/(2x))
  CHECK(lk == doctest::Approx(-800.0 + 0.5 * std::log(kPi / 1600.0)).epsilon(1e-3));
  CHECK(sf::bessel_k_scaled(1.0, 800.0) ==
        doctest::Approx(std::exp(lk + 800.0)).epsilon(1e-12));
}

TEST_CASE("log_bessel_k continuity across the asymptotic switch") {
  for (double nu : {0.0, 2.0, 12.0}) {
    CAPTURE(nu);
    const double below = sf::log_bessel_k(nu, 679.9);
    const double above = sf::log_bessel_k(nu, 680.1);
    CHECK(below - above == doctest::Approx(0.2).epsilon(1e-6));
  }
}
