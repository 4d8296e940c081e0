// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "diffent/interval.hpp"
#include "diffent/quadrature.hpp"

namespace diffent {

enum class Method { closed_form, quadrature };

struct MeasureReport {
  std::optional<double> alpha;  // absent for Shannon and the shape index
  double value = 0.0;
  Method method = Method::quadrature;
  double abs_err_est = 0.0;
};

/// R_alpha(f) = log(int f^alpha) / (1 - alpha), alpha > 0, alpha != 1.
/// Orders within 1e-6 of 1 are rejected (use shannon_numeric). A divergent
/// or non-convergent integral raises divergence_error.
MeasureReport renyi_numeric(const LogDensity& f, double alpha, const Tolerances& tols = {});

/// R_1(f) = -int f log f.
MeasureReport shannon_numeric(const LogDensity& f, const Tolerances& tols = {});

/// S(f) = Var(log f(X)), computed as E[(log f)^2] - (E[log f])^2.
MeasureReport song_numeric(const LogDensity& f, const Tolerances& tols = {});

/// Renyi divergence D_alpha(f, g) = log(int (f/g)^alpha g) / (alpha (alpha - 1)),
/// normalized to be nonnegative; Kullback-Leibler as alpha -> 1.
/// Requires supp(f) within supp(g).
MeasureReport renyi_divergence(const LogDensity& f, const LogDensity& g, double alpha,
                               const Tolerances& tols = {});

/// Box-Cox power divergence Psi_alpha = (e^{alpha(1-alpha) D_alpha} - 1)/(alpha(1-alpha)).
MeasureReport power_divergence(const LogDensity& f, const LogDensity& g, double alpha,
                               const Tolerances& tols = {});

}  // namespace diffent
