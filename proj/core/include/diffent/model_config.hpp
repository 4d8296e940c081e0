// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <string>

#include "diffent/models.hpp"
#include "diffent/quadrature.hpp"

namespace diffent {

/// A flat `key = value` model description, round-trippable through dump().
/// Numeric keys hold parameters; for the custom and expfam families the
/// coefficient-valued keys hold expressions in x (see Expression).
///
///   family = gig
///   gamma = 0.5
///   theta1 = 1.5
///   ...
///
/// Unknown keys are rejected. `lower`/`upper` accept inf and -inf.
struct ModelConfig {
  std::string family;
  std::map<std::string, double> params;
  std::map<std::string, std::string> expressions;

  static ModelConfig parse(const std::string& text);
  static ModelConfig from_file(const std::string& path);

  /// Applies a single "key=value" override (the --set flag).
  void set(const std::string& assignment);

  /// Canonical text form; parse(dump()) reproduces this config.
  std::string dump() const;

  /// Validates parameters (and probes expressions on a grid of interior
  /// points) and constructs the model. Throws std::invalid_argument on a
  /// malformed config.
  std::unique_ptr<models::Model> build(const Tolerances& tols = {}) const;
};

}  // namespace diffent
