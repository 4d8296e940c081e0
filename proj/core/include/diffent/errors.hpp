// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace diffent {

/// An integral did not converge within the evaluation budget, or the
/// integrand produced a NaN. Carries the best estimate reached.
class integration_error : public std::runtime_error {
 public:
  integration_error(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// The integrand produced NaN inside the domain; no rule can recover.
class invalid_integrand_error : public integration_error {
 public:
  using integration_error::integration_error;
};

/// A requested information measure does not exist for the given inputs
/// (the defining integral diverges or a validity condition fails).
class divergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two densities have incompatible supports for a divergence computation.
class support_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The speed measure of a diffusion is not integrable, so no invariant
/// probability density exists.
class not_ergodic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffent
