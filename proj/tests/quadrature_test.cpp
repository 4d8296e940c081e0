// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/quadrature.hpp"

#include <cmath>

#include "diffent/errors.hpp"
#include "diffent/special_functions.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace diffent;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("elementary integrals over every interval shape") {
  CHECK(integrate([](double x) { return std::exp(-x); }, Interval::positive_half_line()).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, Interval::real_line()).value ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::cos(x) * std::cos(x); },
                  Interval{-kPi / 2, kPi / 2})
            .value == doctest::Approx(kPi / 2).epsilon(1e-12));
  // reflected semi-infinite interval
  CHECK(integrate([](double x) { return std::exp(x); },
                  Interval{-std::numeric_limits<double>::infinity(), 0.0})
            .value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("converged results satisfy their own error estimate") {
  auto r = integrate([](double x) { return std::exp(-x * x); }, Interval::real_line());
  CHECK(r.converged);
  CHECK(std::fabs(r.value - std::sqrt(kPi)) <= std::max(1e-12, 1e-10 * r.value));
  CHECK(r.abs_err_est <= std::max(1e-12, 1e-10 * std::fabs(r.value)));
  CHECK(r.evaluations > 0);
}

TEST_CASE("substitution correctness against log_gamma") {
  for (double s : {0.5, 1.0, 2.5, 7.0}) {
    CAPTURE(s);
    auto r = integrate(
        [s](double x) { return exp_guarded((s - 1.0) * std::log(x) - x); },
        Interval::positive_half_line(), {1e-13, 1e-11});
    CHECK(r.value == doctest::Approx(std::exp(sf::log_gamma(s))).epsilon(1e-9));
  }
}

TEST_CASE("linearity spot check") {
  auto f = [](double x) { return std::exp(-x); };
  auto g = [](double x) { return x * std::exp(-x); };
  const double a = 2.5, b = -0.75;
  auto combined = integrate([&](double x) { return a * f(x) + b * g(x); },
                            Interval::positive_half_line());
  auto fa = integrate(f, Interval::positive_half_line());
  auto gb = integrate(g, Interval::positive_half_line());
  CHECK(combined.value == doctest::Approx(a * fa.value + b * gb.value)
                              .epsilon(0.0)
                              .scale(combined.abs_err_est + std::fabs(a) * fa.abs_err_est +
                                     std::fabs(b) * gb.abs_err_est + 1e-13));
}

TEST_CASE("determinism: identical inputs give identical bits") {
  auto f = [](double x) { return std::exp(-0.5 * x * x) * std::cos(3.0 * x); };
  auto r1 = integrate(f, Interval::real_line());
  auto r2 = integrate(f, Interval::real_line());
  CHECK(r1.value == r2.value);
  CHECK(r1.abs_err_est == r2.abs_err_est);
  CHECK(r1.evaluations == r2.evaluations);
}

TEST_CASE("endpoint singularities are handled") {
  // Beta(1/2, 3/4) kernel has integrable singularities at both ends
  auto r = integrate(
      [](double x) { return std::pow(x, -0.5) * std::pow(1.0 - x, -0.25); }, Interval::unit());
  CHECK(r.value ==
        doctest::Approx(std::exp(sf::log_beta(0.5, 0.75))).epsilon(1e-10));
}

TEST_CASE("NaN from the integrand fails immediately") {
  CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(x - 0.5); }, Interval::unit()),
                  integration_error);
}

TEST_CASE("divergent integrals fail with the best estimate attached") {
  bool threw = false;
  try {
    integrate([](double x) { return 1.0 / (1.0 + x); }, Interval::positive_half_line());
  } catch (const integration_error& ex) {
    threw = true;
    CHECK(ex.error_estimate() > 1e-6);
  }
  CHECK(threw);
}

TEST_CASE("log_integrate shifts overflowing peaks") {
  // int exp(900 - x^2) dx = e^900 sqrt(pi): value representable only in logs
  auto r = log_integrate([](double x) { return 900.0 - x * x; }, Interval::real_line());
  CHECK(r.value == doctest::Approx(900.0 + 0.5 * std::log(kPi)).epsilon(1e-12));
}

TEST_CASE("expectation: normalization, mean, and log-uniform") {
  LogDensity normal{[](double x) { return -0.5 * std::log(2.0 * kPi) - 0.5 * x * x; },
                    Interval::real_line()};
  auto one = expectation([](double) { return 1.0; }, normal);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(one.normalization_ok);

  auto mean = expectation([](double x) { return x; }, normal);
  CHECK(mean.value == AbsTol(0.0, 1e-10));

  LogDensity uniform{[](double) { return 0.0; }, Interval::unit()};
  auto loglik = expectation([&uniform](double x) { return uniform.log_pdf(x); }, uniform);
  CHECK(loglik.value == AbsTol(0.0, 1e-12));

  LogDensity half{[](double) { return std::log(0.5); }, Interval::unit()};
  auto bad = expectation([](double) { return 1.0; }, half);
  CHECK_FALSE(bad.normalization_ok);
  CHECK(bad.normalization == doctest::Approx(0.5).epsilon(1e-12));
}
