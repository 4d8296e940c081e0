// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace diffent::sf {

/// Value with an a-posteriori absolute error estimate, for the operations
/// whose accuracy is limited by numerical differentiation.
struct SpecFunResult {
  double value = 0.0;
  double abs_err_est = 0.0;
};

/// log Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// psi'(x) for x > 0.
double trigamma(double x);

/// log B(a, b) for a, b > 0, evaluated through log Gamma.
double log_beta(double a, double b);

/// Modified Bessel function of the second kind K_nu(x), x > 0, any real nu.
/// Even in nu. Signals std::overflow_error when the value is not
/// representable (x near 0 with large |nu|).
double bessel_k(double nu, double x);

/// log K_nu(x); remains finite for large x where K_nu itself underflows.
double log_bessel_k(double nu, double x);

/// e^x K_nu(x).
double bessel_k_scaled(double nu, double x);

/// d/dnu K_nu(x) by Richardson-extrapolated central differences with step
/// h = max(1e-4, 1e-4*|nu|). Error budget about 1e-7 (typically far better);
/// antisymmetric in nu.
double bessel_k_dnu(double nu, double x);

/// As bessel_k_dnu, with the extrapolation residual as error estimate.
SpecFunResult bessel_k_dnu_checked(double nu, double x);

/// d/dnu log K_nu(x), same scheme; stable for large x.
double log_bessel_k_dnu(double nu, double x);

}  // namespace diffent::sf
