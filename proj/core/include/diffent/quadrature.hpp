// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "diffent/errors.hpp"
#include "diffent/interval.hpp"

namespace diffent {

/// Accuracy targets for a single integral. A result is reported as
/// converged when the error estimate is below max(abs_tol, rel_tol*|value|).
struct Tolerances {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};

struct IntegralResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct ExpectationResult : IntegralResult {
  double normalization = 0.0;
  bool normalization_ok = false;
};

/// Integrates f over the open interval `domain`. Finite intervals use a
/// double-exponential (tanh-sinh) rule so endpoint singularities are
/// tolerated; semi-infinite and doubly infinite intervals use the exp-sinh
/// and sinh-sinh maps. Deterministic: identical inputs give identical bits.
///
/// Throws integration_error when the integrand yields NaN or the requested
/// accuracy is not reached within the refinement budget; the exception
/// carries the best estimate.
IntegralResult integrate(const std::function<double(double)>& f, const Interval& domain,
                         const Tolerances& tols = {});

/// log of \int exp(log_integrand(x)) dx, computed with an additive shift so
/// integrands whose peak over- or underflows remain representable.
/// The returned abs_err_est bounds the error of the *logarithm*.
IntegralResult log_integrate(const std::function<double(double)>& log_integrand,
                             const Interval& domain, const Tolerances& tols = {});

/// \int f(x) density(x) dx. Also integrates the density itself and flags the
/// result when it is not normalized to 1 within 1e-8.
ExpectationResult expectation(const std::function<double(double)>& f,
                              const LogDensity& density, const Tolerances& tols = {});

/// exp with underflow cutoff: arguments below -745 map to exactly 0.
inline double exp_guarded(double t) { return t < -745.0 ? 0.0 : std::exp(t); }

}  // namespace diffent
