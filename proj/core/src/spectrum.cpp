// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diffent/errors.hpp"

namespace diffent {

bool SpectrumTable::monotone_nonincreasing(double slack_factor) const {
  const SpectrumRow* prev = nullptr;
  for (const auto& row : rows) {
    if (row.divergent()) continue;
    if (prev) {
      const double slack = slack_factor * (prev->err + row.err);
      if (*row.renyi > *prev->renyi + slack) return false;
    }
    prev = &row;
  }
  return true;
}

std::vector<double> geometric_alpha_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2) {
    throw std::invalid_argument("geometric_alpha_grid: need 0 < lo < hi and points >= 2");
  }
  std::vector<double> g(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo * std::exp(i * step);
  g.front() = lo;
  g.back() = hi;
  return g;
}

namespace {

void check_grid(const std::vector<double>& alphas) {
  double prev = 0.0;
  for (double a : alphas) {
    if (!(a > 0.0)) throw std::invalid_argument("compute_spectrum: orders must be positive");
    if (!(a > prev)) throw std::invalid_argument("compute_spectrum: orders must be increasing");
    if (std::fabs(a - 1.0) < 1e-6) {
      throw std::invalid_argument(
          "compute_spectrum: omit alpha = 1 (the Shannon row is inserted automatically)");
    }
    prev = a;
  }
}

SpectrumRow closed_row(double alpha, double value) {
  SpectrumRow row;
  row.alpha = alpha;
  row.renyi = value;
  row.method = Method::closed_form;
  row.err = 1e-14 * (1.0 + std::fabs(value));
  return row;
}

template <class RenyiFn, class ShannonFn>
SpectrumTable assemble(const std::vector<double>& alphas, const RenyiFn& renyi_row,
                       const ShannonFn& shannon_row) {
  SpectrumTable table;
  bool shannon_done = false;
  for (double a : alphas) {
    if (!shannon_done && a > 1.0) {
      table.rows.push_back(shannon_row());
      shannon_done = true;
    }
    table.rows.push_back(renyi_row(a));
  }
  if (!shannon_done) table.rows.push_back(shannon_row());
  return table;
}

}  // namespace

SpectrumTable compute_spectrum(const models::Model& model, std::vector<double> alphas,
                               const Tolerances& tols) {
  check_grid(alphas);
  auto renyi_row = [&](double a) -> SpectrumRow {
    try {
      if (auto closed = model.closed_renyi(a)) return closed_row(a, *closed);
      MeasureReport r = renyi_numeric(model.density(), a, tols);
      SpectrumRow row;
      row.alpha = a;
      row.renyi = r.value;
      row.method = Method::quadrature;
      row.err = r.abs_err_est;
      return row;
    } catch (const divergence_error&) {
      SpectrumRow row;
      row.alpha = a;
      row.method = Method::quadrature;
      return row;
    }
  };
  auto shannon_row = [&]() -> SpectrumRow {
    try {
      if (auto closed = model.closed_shannon()) {
        SpectrumRow row = closed_row(1.0, *closed);
        return row;
      }
      MeasureReport r = shannon_numeric(model.density(), tols);
      SpectrumRow row;
      row.alpha = 1.0;
      row.renyi = r.value;
      row.method = Method::quadrature;
      row.err = r.abs_err_est;
      return row;
    } catch (const divergence_error&) {
      SpectrumRow row;
      row.alpha = 1.0;
      row.method = Method::quadrature;
      return row;
    }
  };
  return assemble(alphas, renyi_row, shannon_row);
}

SpectrumTable compute_spectrum(const LogDensity& density, std::vector<double> alphas,
                               const Tolerances& tols) {
  check_grid(alphas);
  auto renyi_row = [&](double a) -> SpectrumRow {
    SpectrumRow row;
    row.alpha = a;
    try {
      MeasureReport r = renyi_numeric(density, a, tols);
      row.renyi = r.value;
      row.err = r.abs_err_est;
    } catch (const divergence_error&) {
    }
    return row;
  };
  auto shannon_row = [&]() -> SpectrumRow {
    SpectrumRow row;
    row.alpha = 1.0;
    try {
      MeasureReport r = shannon_numeric(density, tols);
      row.renyi = r.value;
      row.err = r.abs_err_est;
    } catch (const divergence_error&) {
    }
    return row;
  };
  return assemble(alphas, renyi_row, shannon_row);
}

double renyi_value(const models::Model& model, double alpha, const Tolerances& tols) {
  if (std::fabs(alpha - 1.0) < 1e-9) {
    if (auto closed = model.closed_shannon()) return *closed;
    return shannon_numeric(model.density(), tols).value;
  }
  if (auto closed = model.closed_renyi(alpha)) return *closed;
  return renyi_numeric(model.density(), alpha, tols).value;
}

double gradient_at(const models::Model& model, double alpha, double h, const Tolerances& tols) {
  if (!(h > 0.0)) throw std::invalid_argument("gradient_at: h must be positive");
  const double lo = alpha - h, hi = alpha + h;
  if (!(lo > 0.0)) throw std::domain_error("gradient_at: alpha - h must stay positive");
  for (double a : {lo, hi}) {
    if (a != 1.0 && std::fabs(a - 1.0) < 1e-6) {
      throw std::domain_error("gradient_at: stencil point too close to alpha = 1");
    }
  }
  return (renyi_value(model, hi, tols) - renyi_value(model, lo, tols)) / (2.0 * h);
}

MeasureReport song_from_spectrum(const models::Model& model, double h, const Tolerances& tols) {
  if (!(h > 0.0 && h <= 0.1)) {
    throw std::invalid_argument("song_from_spectrum: h must lie in (0, 0.1]");
  }
  MeasureReport r;
  r.method = Method::quadrature;
  r.value = -2.0 * gradient_at(model, 1.0, h, tols);
  r.abs_err_est = h * h;  // leading truncation order
  return r;
}

TailOrder tail_order(const LogDensity& f, const LogDensity& g, const Tolerances& tols,
                     double tie_tol) {
  const double sf_ = song_numeric(f, tols).value;
  const double sg = song_numeric(g, tols).value;
  if (std::fabs(sf_ - sg) <= tie_tol) return TailOrder::equal_within_tol;
  return sf_ < sg ? TailOrder::f_precedes_g : TailOrder::g_precedes_f;
}

}  // namespace diffent
