// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "diffent/diffusion.hpp"
#include "diffent/measures.hpp"
#include "diffent/models.hpp"

namespace diffent::models {

/// dX = sum_i beta_i b_i(X) dt + lambda sigma(X) dW with theta_i = beta_i /
/// lambda^2. The invariant law is the exponential family
///   f(x) = exp{ sum_i theta_i T_i(x) - 2 log sigma(x) - phi(theta) },
/// with sufficient statistics T_i(x) = 2 int_{x0}^x b_i/sigma^2 and
/// log-normalizer phi(theta) = log int m.
struct ExpFamSpec {
  std::vector<std::function<double(double)>> basis;  // b_i
  std::vector<double> weights;                       // theta_i
  std::function<double(double)> sigma;               // sigma(x) > 0 on the interior
  Interval state_space;
  double x0 = 1.0;
  double lambda = 1.0;
};

class ExponentialFamily final : public Model {
 public:
  explicit ExponentialFamily(ExpFamSpec spec, const Tolerances& tols = {});

  std::size_t dimension() const { return spec_.weights.size(); }

  /// T_i(x), cached on a geometric grid per basis function.
  double sufficient_statistic(std::size_t i, double x) const;

  /// phi(theta) = log int sigma^{-2} exp{sum theta_i T_i}.
  double log_normalizer() const { return phi_; }

  /// R_alpha by quadrature of the tilted integral
  /// int sigma^{-2 alpha} exp{alpha sum theta_i T_i} dx.
  MeasureReport renyi(double alpha, const Tolerances& tols = {}) const;

  /// Numerical probe of membership in Theta (integrable speed measure)
  /// intersected with Theta_1 (divergent scale integrals).
  ErgodicityReport domain_membership() const;

  std::string family() const override { return "expfam"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;

 private:
  double log_speed(double x) const;  // log m(x, theta)

  ExpFamSpec spec_;
  Tolerances tols_;
  std::vector<std::shared_ptr<const detail::DriftIntegral>> stat_integrals_;
  double phi_ = 0.0;
};

}  // namespace diffent::models
