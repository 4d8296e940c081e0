// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "diffent/diffusion.hpp"
#include "diffent/interval.hpp"
#include "diffent/measures.hpp"
#include "diffent/quadrature.hpp"

namespace diffent::models {

/// Uniform view over the model families: the analytic invariant density, the
/// generating SDE, and whichever closed-form information measures the family
/// possesses. Closed accessors return nullopt when no closed expression
/// exists and throw divergence_error when a validity condition fails.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string family() const = 0;
  virtual LogDensity density() const = 0;
  virtual DiffusionSpec sde() const = 0;

  virtual std::optional<double> closed_renyi(double /*alpha*/) const { return std::nullopt; }
  virtual std::optional<double> closed_shannon() const { return std::nullopt; }
  virtual std::optional<double> closed_song() const { return std::nullopt; }
};

/// dX = -theta (X - mu) dt + sqrt(2 theta) dW on R; stationary law N(mu, 1).
class OrnsteinUhlenbeck final : public Model {
 public:
  OrnsteinUhlenbeck(double theta, double mu);

  double renyi(double alpha) const;
  double shannon() const;
  /// Catalogued value 1. The defining identity -2 dR_alpha/dalpha at
  /// alpha = 1 evaluates to 1/2; `validate` reports the gap.
  double song() const;

  std::string family() const override { return "ou"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double theta() const { return theta_; }
  double mu() const { return mu_; }

 private:
  double theta_, mu_;
};

/// dX = -theta (X - mu) dt + sqrt(2 theta X) dW on (0, inf); stationary law
/// Gamma(shape mu, scale 1). The SDE is ergodic only for mu > 1; the
/// distribution-level formulas are valid for all mu > 0.
class CoxIngersollRoss final : public Model {
 public:
  CoxIngersollRoss(double theta, double mu);

  double renyi(double alpha) const;  // needs alpha (mu - 1) + 1 > 0
  double shannon() const;
  double song() const;
  bool sde_ergodic() const { return mu_ > 1.0; }

  std::string family() const override { return "cir"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double theta() const { return theta_; }
  double mu() const { return mu_; }

 private:
  double theta_, mu_;
};

/// log int_{-pi/2}^{pi/2} (cos t)^q e^{-p t} dt for q > -1. Closed product
/// form when q is a nonnegative integer, tanh-sinh quadrature otherwise.
/// Even in p.
double log_cos_power_integral(double q, double p, const Tolerances& tols = {});

/// dX = -theta (X - mu) dt + sqrt(2 theta a (X^2 + 1)) dW on R; stationary
/// law has density proportional to (1 + x^2)^{-1/(2a)-1} exp{(mu/a) atan x}
/// (a skewed, heavy-tailed law; symmetric scaled Student t for mu = 0).
class PearsonTypeIV final : public Model {
 public:
  enum class Branch { even, half };

  PearsonTypeIV(double a, double mu, double theta);

  /// The order at which a closed form exists: 2a(m+1)/(1+2a) on the even
  /// branch, 2a(m+3/2)/(1+2a) on the half branch, m = 1, 2, ...
  double special_order(int m, Branch branch) const;

  /// Closed-form R at special_order(m, branch). For mu = 0 the even branch
  /// uses the analytic limit of the product expression (the raw form has a
  /// removable singularity there).
  double renyi_special(int m, Branch branch) const;

  /// R_alpha by quadrature of the two cos-power integrals; valid while
  /// alpha (1/a + 2) - 2 > -1.
  MeasureReport renyi_cos_form(double alpha, const Tolerances& tols = {}) const;

  struct ShannonDual {
    MeasureReport oracle;    // the authoritative value (quadrature)
    double formula_value;    // the catalogued a = 1 closed expression
    double discrepancy;      // |formula - oracle|, reported, never reconciled
  };
  /// Both routes to the a = 1 Shannon entropy. Requires a == 1.
  ShannonDual shannon_a1(const Tolerances& tols = {}) const;

  double log_base_integral() const;  // log int (cos t)^{1/a} e^{-(mu/a) t} dt

  std::string family() const override { return "pearson4"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;

  double a() const { return a_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }

 private:
  double a_, mu_, theta_;
};

/// dX = -theta (X - mu) dt + sqrt(2 theta a) X dW on (0, inf); stationary law
/// InverseGamma(shape 1 + 1/a, scale mu/a).
class InverseGammaDiffusion final : public Model {
 public:
  InverseGammaDiffusion(double a, double mu, double theta);

  double renyi(double alpha) const;  // needs alpha (2 + 1/a) - 1 > 0
  double shannon() const;
  double song() const;

  std::string family() const override { return "invgamma"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double a() const { return a_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }

 private:
  double a_, mu_, theta_;
  double shape_, scale_;
};

/// dX = -theta (X - mu) dt + sqrt(2 theta a X (X + 1)) dW on (0, inf);
/// stationary law a scaled F distribution (beta prime with p = mu/a,
/// q = 1 + 1/a).
class ScaledF final : public Model {
 public:
  ScaledF(double a, double mu, double theta);

  double renyi(double alpha) const;  // needs alpha(p-1)+1 > 0 and alpha(q+1)-1 > 0
  double shannon() const;
  double song() const;

  std::string family() const override { return "scaledf"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double a() const { return a_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }

 private:
  double a_, mu_, theta_;
  double p_, q_;
};

/// dX = -theta (X - mu) dt + sqrt(2 theta a X (X - 1)) dW, a < 0, on (0, 1);
/// stationary law Beta(-mu/a, -(1-mu)/a).
class JacobiDiffusion final : public Model {
 public:
  JacobiDiffusion(double a, double mu, double theta);

  double renyi(double alpha) const;
  double shannon() const;
  double song() const;

  std::string family() const override { return "jacobi"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double a() const { return a_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }

 private:
  double a_, mu_, theta_;
  double p_, q_;
};

/// dX = (b1 X^{2g-1} - b2 X^{2g} + b3 X^{2(g-1)}) dt + lambda X^g dW on
/// (0, inf) with theta_i = 2 b_i / lambda^2; stationary law generalized
/// inverse Gaussian with order nu = theta1 - 2 gamma + 1.
class GeneralizedInverseGaussian final : public Model {
 public:
  GeneralizedInverseGaussian(double gamma, double lambda, double theta1, double theta2,
                             double theta3);

  double nu() const { return theta1_ - 2.0 * gamma_ + 1.0; }

  /// Requires theta2 > 0 and theta3 > 0 (the Bessel argument degenerates
  /// otherwise) and alpha != 1.
  double renyi(double alpha) const;
  double shannon() const;
  // No closed shape index: it involves higher-order nu-derivatives of K.

  std::string family() const override { return "gig"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override;
  std::optional<double> closed_shannon() const override;

  double gamma() const { return gamma_; }
  double lambda() const { return lambda_; }
  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  double theta3() const { return theta3_; }

 private:
  bool bessel_form_valid() const { return theta2_ > 0.0 && theta3_ > 0.0; }

  double gamma_, lambda_, theta1_, theta2_, theta3_;
};

/// dX = (sigma^2/2)(beta - gamma (X - mu)/sqrt(delta^2 + (X - mu)^2)) dt
/// + sigma dW on R; stationary law the hyperbolic distribution.
class HyperbolicDiffusion final : public Model {
 public:
  HyperbolicDiffusion(double gamma, double beta, double delta, double mu, double sigma);

  double renyi(double alpha) const;
  double shannon() const;
  /// Shape index from -2 dR_alpha/dalpha at alpha = 1 of the closed R_alpha:
  /// S = 1 - z K0/K1 + z^2 (1 - K0^2/K1^2), z = delta sqrt(gamma^2 - beta^2).
  double song() const;

  std::string family() const override { return "hyperbolic"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  double delta() const { return delta_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double bessel_argument() const { return delta_ * std::sqrt(gamma_ * gamma_ - beta_ * beta_); }

 private:
  double gamma_, beta_, delta_, mu_, sigma_;
};

/// Constant-diffusion SDE whose stationary law is the two-parameter skew
/// Student t (symmetric case gamma = beta: Student t with 2 gamma degrees of
/// freedom).
class SkewStudentT final : public Model {
 public:
  SkewStudentT(double gamma, double beta, double sigma);

  double renyi(double alpha) const;  // needs alpha(gamma+1/2)-1/2 > 0 and same for beta
  double shannon() const;
  double song() const;

  std::string family() const override { return "skewt"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override;
  std::optional<double> closed_renyi(double alpha) const override { return renyi(alpha); }
  std::optional<double> closed_shannon() const override { return shannon(); }
  std::optional<double> closed_song() const override { return song(); }

  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  double sigma() const { return sigma_; }

 private:
  double gamma_, beta_, sigma_;
};

/// A model defined directly by drift and squared diffusion; the density is
/// the numerically constructed invariant law. No closed forms.
class CustomDiffusion final : public Model {
 public:
  explicit CustomDiffusion(DiffusionSpec spec, const Tolerances& tols = {});

  std::string family() const override { return "custom"; }
  LogDensity density() const override;
  DiffusionSpec sde() const override { return spec_; }

  const InvariantDensity& invariant_law() const;

 private:
  DiffusionSpec spec_;
  Tolerances tols_;
  mutable std::shared_ptr<const InvariantDensity> law_;
};

}  // namespace diffent::models
