// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "diffent/errors.hpp"

namespace diffent {

namespace {

constexpr double kAlphaOneGuard = 1e-6;

[[noreturn]] void rethrow_divergent(const char* what, const integration_error& ex) {
  throw divergence_error(std::string(what) + " (best estimate " +
                         std::to_string(ex.best_estimate()) + ", error estimate " +
                         std::to_string(ex.error_estimate()) + ")");
}

}  // namespace

MeasureReport renyi_numeric(const LogDensity& f, double alpha, const Tolerances& tols) {
  if (!(alpha > 0.0)) throw std::domain_error("renyi_numeric: alpha must be positive");
  if (std::fabs(alpha - 1.0) < kAlphaOneGuard) {
    throw std::domain_error("renyi_numeric: alpha too close to 1, use shannon_numeric");
  }
  const auto& lp = f.log_pdf;
  IntegralResult mass;
  try {
    mass = log_integrate([&lp, alpha](double x) { return alpha * lp(x); }, f.domain, tols);
  } catch (const integration_error& ex) {
    rethrow_divergent("renyi_numeric: int f^alpha does not converge", ex);
  }
  MeasureReport r;
  r.alpha = alpha;
  r.method = Method::quadrature;
  r.value = mass.value / (1.0 - alpha);
  r.abs_err_est = mass.abs_err_est / std::fabs(1.0 - alpha);
  return r;
}

MeasureReport shannon_numeric(const LogDensity& f, const Tolerances& tols) {
  const auto& lp = f.log_pdf;
  IntegralResult v;
  try {
    v = integrate(
        [&lp](double x) {
          const double l = lp(x);
          const double w = exp_guarded(l);
          return w == 0.0 ? 0.0 : w * l;
        },
        f.domain, tols);
  } catch (const integration_error& ex) {
    rethrow_divergent("shannon_numeric: int f log f does not converge", ex);
  }
  MeasureReport r;
  r.method = Method::quadrature;
  r.value = -v.value;
  r.abs_err_est = v.abs_err_est;
  return r;
}

MeasureReport song_numeric(const LogDensity& f, const Tolerances& tols) {
  const auto& lp = f.log_pdf;
  IntegralResult m1, m2;
  try {
    m1 = integrate(
        [&lp](double x) {
          const double l = lp(x);
          const double w = exp_guarded(l);
          return w == 0.0 ? 0.0 : w * l;
        },
        f.domain, tols);
    m2 = integrate(
        [&lp](double x) {
          const double l = lp(x);
          const double w = exp_guarded(l);
          return w == 0.0 ? 0.0 : w * l * l;
        },
        f.domain, tols);
  } catch (const integration_error& ex) {
    rethrow_divergent("song_numeric: moments of log f do not converge", ex);
  }
  MeasureReport r;
  r.method = Method::quadrature;
  r.value = m2.value - m1.value * m1.value;
  r.abs_err_est = m2.abs_err_est + 2.0 * std::fabs(m1.value) * m1.abs_err_est;
  return r;
}

MeasureReport renyi_divergence(const LogDensity& f, const LogDensity& g, double alpha,
                               const Tolerances& tols) {
  if (alpha == 0.0 || alpha == 1.0) {
    throw std::domain_error("renyi_divergence: alpha must differ from 0 and 1");
  }
  if (!g.domain.covers(f.domain)) {
    throw support_error("renyi_divergence: supp(f) must lie within supp(g)");
  }
  const auto& lf = f.log_pdf;
  const auto& lg = g.log_pdf;
  IntegralResult q;
  try {
    q = log_integrate(
        [&lf, &lg, alpha](double x) { return alpha * lf(x) + (1.0 - alpha) * lg(x); },
        f.domain, tols);
  } catch (const integration_error& ex) {
    rethrow_divergent("renyi_divergence: int f^a g^(1-a) does not converge", ex);
  }
  const double denom = alpha * (alpha - 1.0);
  MeasureReport r;
  r.alpha = alpha;
  r.method = Method::quadrature;
  r.value = q.value / denom;
  r.abs_err_est = q.abs_err_est / std::fabs(denom);
  return r;
}

MeasureReport power_divergence(const LogDensity& f, const LogDensity& g, double alpha,
                               const Tolerances& tols) {
  MeasureReport d = renyi_divergence(f, g, alpha, tols);
  const double c = alpha * (1.0 - alpha);
  MeasureReport r;
  r.alpha = alpha;
  r.method = Method::quadrature;
  r.value = std::expm1(c * d.value) / c;
  r.abs_err_est = std::exp(c * d.value) * d.abs_err_est;
  return r;
}

}  // namespace diffent
