// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace diffent {

namespace {

// The engines may copy the functor internally, so the counters live in the
// caller's frame and the probe only points at them.
struct ProbeState {
  std::size_t count = 0;
  bool saw_nan = false;
};

struct CountingProbe {
  const std::function<double(double)>* f;
  ProbeState* state;

  double operator()(double x) const {
    ++state->count;
    const double v = (*f)(x);
    if (std::isnan(v)) state->saw_nan = true;
    return v;
  }
};

double termination_tol(const Tolerances& tols) {
  // The engines terminate on an estimated relative tolerance; the converged
  // verdict below is taken from the returned error estimate, not from this.
  return std::clamp(tols.rel_tol * 0.1, 1e-14, 1e-8);
}

IntegralResult finish(const char* what, double value, double err, std::size_t evals,
                      bool saw_nan, const Tolerances& tols) {
  if (saw_nan || std::isnan(value)) {
    throw invalid_integrand_error(std::string(what) + ": integrand evaluated to NaN", value,
                                  err);
  }
  IntegralResult r;
  r.value = value;
  r.abs_err_est = std::isfinite(err) ? err : std::numeric_limits<double>::infinity();
  r.evaluations = evals;
  r.converged = std::isfinite(value) &&
                r.abs_err_est <= std::max(tols.abs_tol, tols.rel_tol * std::fabs(value));
  if (!r.converged) {
    throw integration_error(std::string(what) + ": did not reach requested accuracy",
                            value, r.abs_err_est);
  }
  return r;
}

}  // namespace

namespace {

// Primary engine: double-exponential rules per interval shape.
IntegralResult integrate_de(const std::function<double(double)>& f, const Interval& domain,
                            const Tolerances& tols) {
  ProbeState state;
  CountingProbe probe{&f, &state};
  const double tol = termination_tol(tols);
  double err = 0.0, l1 = 0.0;

  try {
    if (domain.bounded()) {
      static thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
      double value = rule.integrate(probe, domain.lower, domain.upper, tol, &err, &l1);
      return finish("integrate(tanh_sinh)", value, err, state.count, state.saw_nan, tols);
    }
    if (!domain.bounded_below() && !domain.bounded_above()) {
      static thread_local boost::math::quadrature::sinh_sinh<double> rule(12);
      double value = rule.integrate(probe, tol, &err, &l1);
      return finish("integrate(sinh_sinh)", value, err, state.count, state.saw_nan, tols);
    }
    static thread_local boost::math::quadrature::exp_sinh<double> rule(12);
    if (domain.bounded_below()) {
      const double a = domain.lower;
      auto shifted = [&probe, a](double t) { return probe(a + t); };
      double value = rule.integrate(shifted, tol, &err, &l1);
      return finish("integrate(exp_sinh)", value, err, state.count, state.saw_nan, tols);
    }
    const double b = domain.upper;
    auto reflected = [&probe, b](double t) { return probe(b - t); };
    double value = rule.integrate(reflected, tol, &err, &l1);
    return finish("integrate(exp_sinh)", value, err, state.count, state.saw_nan, tols);
  } catch (const integration_error&) {
    throw;
  } catch (const std::exception& ex) {
    // The engines throw when fed singular or non-decaying integrands.
    throw integration_error(std::string("integrate: ") + ex.what(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::infinity());
  }
}

// Fallback engine: adaptive Gauss-Kronrod panels on an algebraically mapped
// finite interval. Bisection resolves interior kinks (|x|-type integrands)
// that defeat the double-exponential rules. The built-in error estimate is
// too conservative at a kink, so the reported estimate is the difference of
// two refinement depths.
IntegralResult integrate_gk(const std::function<double(double)>& f, const Interval& domain,
                            const Tolerances& tols) {
  ProbeState state;
  CountingProbe probe{&f, &state};
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double tol = std::clamp(tols.rel_tol * 0.1, 1e-14, 1e-8);

  auto run = [&](auto&& g, double a, double b, unsigned depth, double* l1) {
    double unused = 0.0;
    return GK::integrate(g, a, b, depth, tol, &unused, l1);
  };

  try {
    double shallow, deep, l1 = 0.0;
    if (domain.bounded()) {
      shallow = run(probe, domain.lower, domain.upper, 18, &l1);
      deep = run(probe, domain.lower, domain.upper, 26, &l1);
    } else if (!domain.bounded_below() && !domain.bounded_above()) {
      // x = t/(1 - t^2) maps (-1, 1) onto the real line
      auto mapped = [&probe](double t) {
        const double d = 1.0 - t * t;
        const double x = t / d;
        return probe(x) * (1.0 + t * t) / (d * d);
      };
      shallow = run(mapped, -1.0, 1.0, 18, &l1);
      deep = run(mapped, -1.0, 1.0, 26, &l1);
    } else if (domain.bounded_below()) {
      const double a = domain.lower;
      auto mapped = [&probe, a](double t) {
        const double d = 1.0 - t;
        return probe(a + t / d) / (d * d);
      };
      shallow = run(mapped, 0.0, 1.0, 18, &l1);
      deep = run(mapped, 0.0, 1.0, 26, &l1);
    } else {
      const double b = domain.upper;
      auto mapped = [&probe, b](double t) {
        const double d = 1.0 - t;
        return probe(b - t / d) / (d * d);
      };
      shallow = run(mapped, 0.0, 1.0, 18, &l1);
      deep = run(mapped, 0.0, 1.0, 26, &l1);
    }
    const double err =
        std::max(std::fabs(deep - shallow), 1e-15 * (std::fabs(deep) + std::fabs(l1)));
    return finish("integrate(gauss_kronrod)", deep, err, state.count, state.saw_nan, tols);
  } catch (const integration_error&) {
    throw;
  } catch (const std::exception& ex) {
    throw integration_error(std::string("integrate: ") + ex.what(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::infinity());
  }
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, const Interval& domain,
                         const Tolerances& tols) {
  try {
    return integrate_de(f, domain, tols);
  } catch (const invalid_integrand_error&) {
    throw;
  } catch (const integration_error& de_failure) {
    try {
      return integrate_gk(f, domain, tols);
    } catch (const integration_error& gk_failure) {
      const bool de_better =
          std::isfinite(de_failure.error_estimate()) &&
          (!std::isfinite(gk_failure.error_estimate()) ||
           de_failure.error_estimate() <= gk_failure.error_estimate());
      throw de_better ? de_failure : gk_failure;
    }
  }
}

IntegralResult log_integrate(const std::function<double(double)>& log_integrand,
                             const Interval& domain, const Tolerances& tols) {
  // Locate the scale of the peak on a coarse deterministic grid, then
  // integrate exp(l(x) - shift).
  constexpr int kProbePoints = 129;
  double shift = -std::numeric_limits<double>::infinity();
  double best_x = domain.interior_point();
  double lo_probe = best_x, hi_probe = best_x;
  auto consider = [&](double x) {
    const double l = log_integrand(x);
    if (std::isfinite(l) && l > shift) {
      shift = l;
      best_x = x;
    }
    lo_probe = std::min(lo_probe, x);
    hi_probe = std::max(hi_probe, x);
    return l;
  };
  for (int i = 1; i < kProbePoints; ++i) {
    const double t = static_cast<double>(i) / kProbePoints;  // in (0,1)
    double x;
    if (domain.bounded()) {
      x = domain.lower + t * (domain.upper - domain.lower);
    } else if (domain.bounded_below()) {
      x = domain.lower + t / (1.0 - t);
    } else if (domain.bounded_above()) {
      x = domain.upper - t / (1.0 - t);
    } else {
      x = (2.0 * t - 1.0) / (t * (1.0 - t));
    }
    consider(x);
  }

  // Mass drifting toward an infinite boundary: extend the probes until the
  // integrand drops well below its running maximum. Still rising at the
  // probing horizon means the integral is not summable at working scale.
  auto extend = [&](bool upward) {
    if (upward ? domain.bounded_above() : domain.bounded_below()) return;
    double x = upward ? std::max(hi_probe, 1.0) : std::min(lo_probe, -1.0);
    for (int k = 0; k < 64; ++k) {
      x *= 2.0;
      const double l = consider(x);
      const bool frontier_peak = upward ? best_x >= 0.25 * x : best_x <= 0.25 * x;
      if (l < shift - 100.0 && !frontier_peak) return;  // peak passed, well below
      if (std::fabs(x) > 1e15) {
        if (frontier_peak) {
          throw integration_error(
              "log_integrate: integrand still increasing toward an infinite boundary",
              std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity());
        }
        return;
      }
    }
  };
  extend(true);
  extend(false);

  if (std::isfinite(shift)) {
    // sharpen the located peak so the shifted integrand cannot overflow
    double lo = std::max(domain.lower, best_x - std::fabs(best_x) - 1.0);
    double hi = std::min(domain.upper, best_x + std::fabs(best_x) + 1.0);
    for (int i = 0; i < 80; ++i) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const double l1v = log_integrand(m1);
      const double l2v = log_integrand(m2);
      if (std::isfinite(l1v) && l1v > shift) shift = l1v;
      if (std::isfinite(l2v) && l2v > shift) shift = l2v;
      if (l1v < l2v) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
  } else {
    shift = 0.0;
  }

  const double s = shift;
  IntegralResult inner = integrate(
      [&log_integrand, s](double x) { return exp_guarded(log_integrand(x) - s); }, domain,
      tols);
  if (!(inner.value > 0.0)) {
    throw integration_error("log_integrate: integral is not positive", inner.value,
                            inner.abs_err_est);
  }
  IntegralResult out;
  out.value = s + std::log(inner.value);
  out.abs_err_est = inner.abs_err_est / inner.value;
  out.evaluations = inner.evaluations;
  out.converged = inner.converged;
  return out;
}

ExpectationResult expectation(const std::function<double(double)>& f,
                              const LogDensity& density, const Tolerances& tols) {
  const auto& lp = density.log_pdf;
  IntegralResult mass =
      integrate([&lp](double x) { return exp_guarded(lp(x)); }, density.domain, tols);
  IntegralResult val = integrate(
      [&f, &lp](double x) {
        const double w = exp_guarded(lp(x));
        return w == 0.0 ? 0.0 : w * f(x);
      },
      density.domain, tols);

  ExpectationResult r;
  static_cast<IntegralResult&>(r) = val;
  r.normalization = mass.value;
  r.normalization_ok = std::fabs(mass.value - 1.0) <= 1e-8;
  return r;
}

}  // namespace diffent
