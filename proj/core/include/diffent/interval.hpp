// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace diffent {

/// An open interval (lower, upper) on the extended real line.
struct Interval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  Interval() = default;
  Interval(double lo, double hi) : lower(lo), upper(hi) {
    if (!(lower < upper)) {
      throw std::invalid_argument("Interval: lower bound must be below upper bound");
    }
  }

  static Interval real_line() { return Interval{}; }
  static Interval positive_half_line() {
    return Interval{0.0, std::numeric_limits<double>::infinity()};
  }
  static Interval unit() { return Interval{0.0, 1.0}; }

  bool bounded_below() const { return std::isfinite(lower); }
  bool bounded_above() const { return std::isfinite(upper); }
  bool bounded() const { return bounded_below() && bounded_above(); }

  bool contains(double x) const { return x > lower && x < upper; }

  /// True when `other` lies inside this interval (used for support checks).
  bool covers(const Interval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }

  /// A finite point inside the interval, biased toward the geometric centre.
  double interior_point() const {
    if (bounded()) return 0.5 * (lower + upper);
    if (bounded_below()) return lower + 1.0;
    if (bounded_above()) return upper - 1.0;
    return 0.0;
  }
};

/// A probability density known through its log, together with its support.
/// `log_pdf` must be finite on the open support (-inf is allowed where the
/// density vanishes).
struct LogDensity {
  std::function<double(double)> log_pdf;
  Interval domain;

  double pdf(double x) const {
    if (!domain.contains(x)) return 0.0;
    const double l = log_pdf(x);
    return l < -745.0 ? 0.0 : std::exp(l);
  }

  /// The affine image Y = sigma * X + mu of this density.
  LogDensity affine(double mu, double sigma) const;
};

inline LogDensity LogDensity::affine(double mu, double sigma) const {
  if (!(sigma > 0.0)) throw std::invalid_argument("LogDensity::affine: sigma must be positive");
  const double log_sigma = std::log(sigma);
  auto base = log_pdf;
  Interval dom{sigma * domain.lower + mu, sigma * domain.upper + mu};
  return LogDensity{
      [base, mu, sigma, log_sigma](double y) { return base((y - mu) / sigma) - log_sigma; },
      dom};
}

}  // namespace diffent
