// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/exponential_family.hpp"

#include <cmath>
#include <stdexcept>

#include "diffent/errors.hpp"

namespace diffent::models {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ExponentialFamily::ExponentialFamily(ExpFamSpec spec, const Tolerances& tols)
    : spec_(std::move(spec)), tols_(tols) {
  if (spec_.basis.empty() || spec_.basis.size() != spec_.weights.size()) {
    throw std::invalid_argument("ExponentialFamily: basis and weights sizes must match");
  }
  if (!spec_.sigma) throw std::invalid_argument("ExponentialFamily: sigma must be set");
  if (!spec_.state_space.contains(spec_.x0)) {
    throw std::invalid_argument("ExponentialFamily: x0 must be interior");
  }
  if (!(spec_.lambda > 0.0)) throw std::invalid_argument("ExponentialFamily: lambda > 0");

  const auto sig = spec_.sigma;
  auto log_s2 = [sig](double x) { return 2.0 * std::log(sig(x)); };
  for (const auto& b : spec_.basis) {
    auto ratio = [b, sig](double y) {
      const double s = sig(y);
      return b(y) / (s * s);
    };
    stat_integrals_.push_back(std::make_shared<const detail::DriftIntegral>(
        ratio, spec_.state_space, spec_.x0, log_s2));
  }

  try {
    IntegralResult g = log_integrate([this](double x) { return log_speed(x); },
                                     spec_.state_space, tols_);
    phi_ = g.value;
  } catch (const integration_error&) {
    throw not_ergodic_error(
        "ExponentialFamily: speed measure integral diverges (theta outside Theta)");
  }
}

double ExponentialFamily::sufficient_statistic(std::size_t i, double x) const {
  if (i >= stat_integrals_.size()) {
    throw std::out_of_range("ExponentialFamily::sufficient_statistic: index out of range");
  }
  return 2.0 * (*stat_integrals_[i])(x);
}

double ExponentialFamily::log_speed(double x) const {
  if (!spec_.state_space.contains(x)) return -kInf;
  double t = 0.0;
  for (std::size_t i = 0; i < stat_integrals_.size(); ++i) {
    t += spec_.weights[i] * 2.0 * (*stat_integrals_[i])(x);
  }
  return t - 2.0 * std::log(spec_.sigma(x));
}

MeasureReport ExponentialFamily::renyi(double alpha, const Tolerances& tols) const {
  if (!(alpha > 0.0)) throw std::domain_error("ExponentialFamily::renyi: alpha > 0 required");
  if (std::fabs(alpha - 1.0) < 1e-6) {
    throw std::domain_error("ExponentialFamily::renyi: alpha too close to 1");
  }
  IntegralResult tilted;
  try {
    tilted = log_integrate([this, alpha](double x) { return alpha * log_speed(x); },
                           spec_.state_space, tols);
  } catch (const integration_error& ex) {
    throw divergence_error(std::string("ExponentialFamily::renyi: tilted integral "
                                       "does not converge: ") +
                           ex.what());
  }
  MeasureReport r;
  r.alpha = alpha;
  r.method = Method::quadrature;
  r.value = (-alpha * phi_ + tilted.value) / (1.0 - alpha);
  r.abs_err_est = tilted.abs_err_est / std::fabs(1.0 - alpha);
  return r;
}

ErgodicityReport ExponentialFamily::domain_membership() const { return ergodicity_check(sde()); }

LogDensity ExponentialFamily::density() const {
  // shared_ptr copies keep the cached statistics alive inside the closure
  auto stats = stat_integrals_;
  auto weights = spec_.weights;
  auto sig = spec_.sigma;
  const double phi = phi_;
  const Interval dom = spec_.state_space;
  return LogDensity{[stats, weights, sig, phi, dom](double x) {
                      if (!dom.contains(x)) return -kInf;
                      double t = 0.0;
                      for (std::size_t i = 0; i < stats.size(); ++i) {
                        t += weights[i] * 2.0 * (*stats[i])(x);
                      }
                      return t - 2.0 * std::log(sig(x)) - phi;
                    },
                    dom};
}

DiffusionSpec ExponentialFamily::sde() const {
  auto basis = spec_.basis;
  auto weights = spec_.weights;
  auto sig = spec_.sigma;
  const double l2 = spec_.lambda * spec_.lambda;
  return DiffusionSpec{[basis, weights, l2](double x) {
                         double d = 0.0;
                         for (std::size_t i = 0; i < basis.size(); ++i) {
                           d += weights[i] * basis[i](x);
                         }
                         return l2 * d;
                       },
                       [sig, l2](double x) {
                         const double s = sig(x);
                         return l2 * s * s;
                       },
                       spec_.state_space, spec_.x0};
}

}  // namespace diffent::models
