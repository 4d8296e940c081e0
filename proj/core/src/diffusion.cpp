// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/diffusion.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "diffent/errors.hpp"

namespace diffent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const DiffusionSpec& spec) {
  if (!spec.drift || !spec.squared_diffusion) {
    throw std::invalid_argument("DiffusionSpec: drift and squared_diffusion must be set");
  }
  if (!spec.state_space.contains(spec.reference_point)) {
    throw std::invalid_argument("DiffusionSpec: reference point must be interior");
  }
  if (!(spec.squared_diffusion(spec.reference_point) > 0.0)) {
    throw std::invalid_argument("DiffusionSpec: sigma^2 must be positive on the interior");
  }
}

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double gk_adaptive(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  return GK::integrate(f, a, b, 15, 1e-12, &err);
}

}  // namespace

namespace detail {

DriftIntegral::DriftIntegral(std::function<double(double)> ratio, Interval domain, double x0,
                             std::function<double(double)> log_sigma2)
    : ratio_(std::move(ratio)), domain_(domain), x0_(x0) {
  // Expand breakpoints geometrically toward each boundary until the speed
  // density is negligible relative to its running maximum, capping the range
  // when H itself leaves the useful exponent range.
  edges_.push_back(x0_);
  prefix_.push_back(0.0);

  auto log_speed = [&](double h, double x) { return 2.0 * h - log_sigma2(x); };
  double peak = log_speed(0.0, x0_);

  auto expand = [&](bool upward) {
    std::vector<double> pts;
    std::vector<double> vals;
    double h = 0.0;
    double prev = x0_;
    const double boundary = upward ? domain_.upper : domain_.lower;
    const bool finite_side = std::isfinite(boundary);
    double gap = finite_side ? std::fabs(boundary - x0_) : 0.0;
    double step = std::max(1.0, 0.5 * std::fabs(x0_));
    const int kmax = finite_side ? 48 : 46;
    for (int k = 1; k <= kmax; ++k) {
      double x;
      if (finite_side) {
        gap *= 0.5;
        x = upward ? boundary - gap : boundary + gap;
      } else {
        x = upward ? x0_ + step : x0_ - step;
        step *= 2.0;
      }
      if (!domain_.contains(x) || x == prev) break;
      double seg;
      try {
        seg = segment(prev, x);
      } catch (const std::exception&) {
        break;  // keep the range resolved so far
      }
      if (!std::isfinite(seg)) break;
      h += seg;
      pts.push_back(x);
      vals.push_back(h);
      prev = x;
      const double ls = log_speed(h, x);
      if (std::isfinite(ls)) peak = std::max(peak, ls);
      if (std::fabs(h) > 1800.0) break;
      if (std::isfinite(ls) && ls < peak - 1600.0) break;
    }
    return std::pair{pts, vals};
  };

  auto [up_pts, up_vals] = expand(true);
  auto [dn_pts, dn_vals] = expand(false);

  edges_.reserve(1 + up_pts.size() + dn_pts.size());
  prefix_.reserve(edges_.capacity());
  // assemble ascending: reversed down side, x0, up side
  std::vector<double> e, p;
  for (std::size_t i = dn_pts.size(); i-- > 0;) {
    e.push_back(dn_pts[i]);
    p.push_back(dn_vals[i]);
  }
  e.push_back(x0_);
  p.push_back(0.0);
  for (std::size_t i = 0; i < up_pts.size(); ++i) {
    e.push_back(up_pts[i]);
    p.push_back(up_vals[i]);
  }
  edges_ = std::move(e);
  prefix_ = std::move(p);
}

double DriftIntegral::segment(double a, double b) const {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double l = domain_.lower, r = domain_.upper;
  const auto& f = ratio_;

  // Near-boundary segments spanning many orders of magnitude are integrated
  // in a logarithmic variable, otherwise plain adaptive panels suffice.
  constexpr double kSpanRatio = 1e6;
  if (std::isfinite(l) && a > l && (b - l) > kSpanRatio * (a - l)) {
    auto g = [&f, l](double t) {
      const double u = std::exp(t);
      return f(l + u) * u;
    };
    return sign * gk_adaptive(g, std::log(a - l), std::log(b - l));
  }
  if (std::isfinite(r) && b < r && (r - a) > kSpanRatio * (r - b)) {
    auto g = [&f, r](double t) {
      const double u = std::exp(t);
      return f(r - u) * u;
    };
    return -sign * gk_adaptive(g, std::log(r - b), std::log(r - a));
  }
  if (a > 0.0 && b > kSpanRatio * a) {
    auto g = [&f](double t) {
      const double u = std::exp(t);
      return f(u) * u;
    };
    return sign * gk_adaptive(g, std::log(a), std::log(b));
  }
  if (b < 0.0 && a < kSpanRatio * b) {  // both negative, |a| >> |b|
    auto g = [&f](double t) {
      const double u = std::exp(t);
      return f(-u) * u;
    };
    return -sign * gk_adaptive(g, std::log(-b), std::log(-a));
  }
  return sign * gk_adaptive(f, a, b);
}

double DriftIntegral::operator()(double x) const {
  if (!domain_.contains(x)) {
    throw std::domain_error("DriftIntegral: point outside the state space");
  }
  // nearest breakpoint, then one short integral
  auto it = std::lower_bound(edges_.begin(), edges_.end(), x);
  std::size_t idx;
  if (it == edges_.begin()) {
    idx = 0;
  } else if (it == edges_.end()) {
    idx = edges_.size() - 1;
  } else {
    const std::size_t hi = static_cast<std::size_t>(it - edges_.begin());
    idx = (x - edges_[hi - 1] <= edges_[hi] - x) ? hi - 1 : hi;
  }
  return prefix_[idx] + segment(edges_[idx], x);
}

}  // namespace detail

double scale_function(const DiffusionSpec& spec, double x, const Tolerances&) {
  validate(spec);
  if (!spec.state_space.contains(x)) {
    throw std::domain_error("scale_function: point outside the state space");
  }
  if (x == spec.reference_point) return 1.0;
  const auto b = spec.drift;
  const auto s2 = spec.squared_diffusion;
  auto ratio = [b, s2](double y) { return b(y) / s2(y); };
  const double h = gk_adaptive(ratio, spec.reference_point, x);
  return std::exp(-2.0 * h);
}

double speed_density(const DiffusionSpec& spec, double x, const Tolerances& tols) {
  const double s = scale_function(spec, x, tols);
  return 1.0 / (spec.squared_diffusion(x) * s);
}

InvariantDensity::InvariantDensity(const DiffusionSpec& spec, const Tolerances& tols) {
  validate(spec);
  domain_ = spec.state_space;
  const auto b = spec.drift;
  const auto s2 = spec.squared_diffusion;
  log_sigma2_ = [s2](double x) { return std::log(s2(x)); };
  auto ratio = [b, s2](double y) { return b(y) / s2(y); };
  drift_integral_ = std::make_shared<const detail::DriftIntegral>(
      ratio, domain_, spec.reference_point, log_sigma2_);

  const auto& H = *drift_integral_;
  const auto& ls2 = log_sigma2_;
  auto log_m = [&H, &ls2](double x) { return 2.0 * H(x) - ls2(x); };
  try {
    IntegralResult g = log_integrate(log_m, domain_, tols);
    log_normalizer_ = g.value;
    log_normalizer_err_ = g.abs_err_est;
    normalizer_ = std::exp(log_normalizer_);
  } catch (const integration_error& ex) {
    const double est = ex.best_estimate();
    const double rel = ex.error_estimate() / std::max(std::fabs(est), 1e-300);
    if (!std::isfinite(est) || rel > 0.5) {
      throw not_ergodic_error(
          "invariant_density: speed measure integral diverges (no invariant probability law)");
    }
    throw;
  }
}

double InvariantDensity::log_unnormalized(double x) const {
  if (!domain_.contains(x)) return -kInf;
  return 2.0 * (*drift_integral_)(x) - log_sigma2_(x);
}

double InvariantDensity::log_pdf(double x) const {
  return log_unnormalized(x) - log_normalizer_;
}

double InvariantDensity::pdf(double x) const { return exp_guarded(log_pdf(x)); }

LogDensity InvariantDensity::density() const {
  auto H = drift_integral_;
  auto ls2 = log_sigma2_;
  const double lg = log_normalizer_;
  const Interval dom = domain_;
  return LogDensity{[H, ls2, lg, dom](double x) {
                      if (!dom.contains(x)) return -kInf;
                      return 2.0 * (*H)(x) - ls2(x) - lg;
                    },
                    dom};
}

namespace {

// One truncated piece of an improper integral, with loose accuracy; +inf
// stands for "blew up", which the classifier reads as divergence.
double probe_piece(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) std::swap(a, b);
  try {
    IntegralResult r = integrate(f, Interval{a, b}, Tolerances{1e-250, 1e-6});
    return std::fabs(r.value);
  } catch (const integration_error& ex) {
    const double est = std::fabs(ex.best_estimate());
    if (!std::isfinite(est) || est > 1e200) return kInf;
    return est;  // rough but usable for growth ratios
  } catch (const std::exception&) {
    return kInf;
  }
}

// Classifies growth of a sequence of consecutive tail pieces.
ProbeOutcome classify(const std::vector<double>& pieces) {
  double total = 0.0;
  for (double p : pieces) {
    if (!std::isfinite(p)) return ProbeOutcome::divergent;
    total += p;
    if (!std::isfinite(total)) return ProbeOutcome::divergent;
  }
  if (pieces.size() < 3) return ProbeOutcome::inconclusive;
  const std::size_t n = pieces.size();
  if (pieces[n - 1] <= 1e-14 * std::max(total, 1e-300)) return ProbeOutcome::finite;

  int growing = 0, shrinking = 0;
  const std::size_t window = std::min<std::size_t>(3, n - 1);
  for (std::size_t i = n - window; i < n; ++i) {
    const double prev = pieces[i - 1], cur = pieces[i];
    if (prev == 0.0) {
      ++shrinking;
      continue;
    }
    const double ratio = cur / prev;
    if (ratio >= 9.99) ++growing;       // growth-ratio threshold 10 per decade
    else if (ratio <= 0.9) ++shrinking; // geometric decay: the tail converges
  }
  if (growing == static_cast<int>(window)) return ProbeOutcome::divergent;
  if (shrinking == static_cast<int>(window)) return ProbeOutcome::finite;
  return ProbeOutcome::inconclusive;
}

// Truncation points marching toward one boundary: distances 10^k for an
// infinite boundary, gap/10^k for a finite one, k = 1..6.
std::vector<double> truncation_points(double from, double boundary, bool upward) {
  std::vector<double> pts;
  if (std::isfinite(boundary)) {
    double gap = std::fabs(boundary - from);
    for (int k = 1; k <= 6; ++k) {
      gap *= 0.1;
      pts.push_back(upward ? boundary - gap : boundary + gap);
    }
  } else {
    double radius = 10.0;
    for (int k = 1; k <= 6; ++k) {
      pts.push_back(upward ? from + radius : from - radius);
      radius *= 10.0;
    }
  }
  return pts;
}

ProbeOutcome probe_side(const std::function<double(double)>& f, double from, double boundary,
                        bool upward) {
  std::vector<double> pts = truncation_points(from, boundary, upward);
  std::vector<double> pieces;
  double prev = from;
  for (double t : pts) {
    pieces.push_back(probe_piece(f, prev, t));
    prev = t;
    if (!std::isfinite(pieces.back())) break;
  }
  return classify(pieces);
}

}  // namespace

ErgodicityReport ergodicity_check(const DiffusionSpec& spec) {
  validate(spec);
  const auto b = spec.drift;
  const auto s2 = spec.squared_diffusion;
  const Interval dom = spec.state_space;
  const double x0 = spec.reference_point;
  auto ratio = [b, s2](double y) { return b(y) / s2(y); };
  auto H = std::make_shared<const detail::DriftIntegral>(
      ratio, dom, x0, [s2](double x) { return std::log(s2(x)); });

  auto scale = [H](double x) { return exp_guarded(-2.0 * (*H)(x)); };
  auto speed = [H, s2](double x) {
    const double ls = 2.0 * (*H)(x) - std::log(s2(x));
    return ls > 709.0 ? kInf : exp_guarded(ls);
  };

  ErgodicityReport rep;
  rep.left_scale_probe = probe_side(scale, x0, dom.lower, false);
  rep.right_scale_probe = probe_side(scale, x0, dom.upper, true);

  const ProbeOutcome speed_left = probe_side(speed, x0, dom.lower, false);
  const ProbeOutcome speed_right = probe_side(speed, x0, dom.upper, true);
  if (speed_left == ProbeOutcome::divergent || speed_right == ProbeOutcome::divergent) {
    rep.speed_probe = ProbeOutcome::divergent;
  } else if (speed_left == ProbeOutcome::finite && speed_right == ProbeOutcome::finite) {
    rep.speed_probe = ProbeOutcome::finite;
  } else {
    rep.speed_probe = ProbeOutcome::inconclusive;
  }

  rep.speed_integral_finite = rep.speed_probe == ProbeOutcome::finite;
  rep.left_scale_divergent = rep.left_scale_probe == ProbeOutcome::divergent;
  rep.right_scale_divergent = rep.right_scale_probe == ProbeOutcome::divergent;

  if (rep.speed_probe == ProbeOutcome::divergent) {
    rep.verdict = ErgodicVerdict::not_ergodic;
  } else if (rep.speed_probe == ProbeOutcome::inconclusive) {
    rep.verdict = ErgodicVerdict::inconclusive;
  } else if (rep.left_scale_divergent && rep.right_scale_divergent) {
    rep.verdict = ErgodicVerdict::ergodic;
  } else if (rep.left_scale_probe == ProbeOutcome::finite ||
             rep.right_scale_probe == ProbeOutcome::finite) {
    // A finite scale integral next to an integrable speed measure: no
    // ergodic solution without modifying the boundary behaviour.
    rep.verdict = ErgodicVerdict::not_ergodic;
  } else {
    rep.verdict = ErgodicVerdict::inconclusive;
  }
  return rep;
}

}  // namespace diffent
