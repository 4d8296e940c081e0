// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffent/measures.hpp"
#include "diffent/models.hpp"

namespace diffent {

struct SpectrumRow {
  double alpha = 0.0;
  std::optional<double> renyi;  // absent when the order diverges
  Method method = Method::quadrature;
  double err = 0.0;
  bool divergent() const { return !renyi.has_value(); }
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;

  /// True when finite rows are nonincreasing in alpha, allowing each
  /// comparison a slack of slack_factor * (err_i + err_j).
  bool monotone_nonincreasing(double slack_factor = 2.0) const;
};

/// Geometric grid of orders; the default spans [0.25, 16] with 33 points.
std::vector<double> geometric_alpha_grid(double lo = 0.25, double hi = 16.0, int points = 33);

/// One row per requested order (sorted, positive, != 1), plus the alpha = 1
/// Shannon row. Closed forms are used where the family provides them,
/// quadrature otherwise; divergent orders are recorded in-row.
SpectrumTable compute_spectrum(const models::Model& model, std::vector<double> alphas,
                               const Tolerances& tols = {});

/// Quadrature-only spectrum of a bare density.
SpectrumTable compute_spectrum(const LogDensity& density, std::vector<double> alphas,
                               const Tolerances& tols = {});

/// R_alpha through the closed form when available, quadrature otherwise.
double renyi_value(const models::Model& model, double alpha, const Tolerances& tols = {});

/// Central-difference estimate of dR_alpha/dalpha.
double gradient_at(const models::Model& model, double alpha, double h,
                   const Tolerances& tols = {});

/// Shape index from the spectrum: -2 * gradient at alpha = 1. h in (0, 0.1].
MeasureReport song_from_spectrum(const models::Model& model, double h = 1e-3,
                                 const Tolerances& tols = {});

enum class TailOrder { f_precedes_g, g_precedes_f, equal_within_tol };

/// Partial tail ordering by the shape index, with tie tolerance.
TailOrder tail_order(const LogDensity& f, const LogDensity& g, const Tolerances& tols = {},
                     double tie_tol = 1e-6);

}  // namespace diffent
