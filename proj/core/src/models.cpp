// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/models.hpp"

#include <cmath>
#include <stdexcept>

#include "diffent/errors.hpp"
#include "diffent/special_functions.hpp"

namespace diffent::models {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double log_sinh(double y) {  // y > 0
  return y + std::log1p(-std::exp(-2.0 * y)) - kLog2;
}

double log_cosh(double y) {
  y = std::fabs(y);
  return y + std::log1p(std::exp(-2.0 * y)) - kLog2;
}

bool near_integer(double q, int& n) {
  const double r = std::round(q);
  if (r >= 0.0 && std::fabs(q - r) < 1e-12) {
    n = static_cast<int>(r);
    return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ornstein-Uhlenbeck

OrnsteinUhlenbeck::OrnsteinUhlenbeck(double theta, double mu) : theta_(theta), mu_(mu) {
  require(theta > 0.0, "OrnsteinUhlenbeck: theta must be positive");
}

double OrnsteinUhlenbeck::renyi(double alpha) const {
  if (!(alpha > 0.0)) throw std::domain_error("OrnsteinUhlenbeck::renyi: alpha must be positive");
  if (alpha == 1.0) return shannon();
  return 0.5 * (kLog2Pi - std::log(alpha) / (1.0 - alpha));
}

double OrnsteinUhlenbeck::shannon() const { return 0.5 * (1.0 + kLog2Pi); }

double OrnsteinUhlenbeck::song() const { return 1.0; }

LogDensity OrnsteinUhlenbeck::density() const {
  const double mu = mu_;
  return LogDensity{[mu](double x) {
                      const double d = x - mu;
                      return -0.5 * kLog2Pi - 0.5 * d * d;
                    },
                    Interval::real_line()};
}

DiffusionSpec OrnsteinUhlenbeck::sde() const {
  const double th = theta_, mu = mu_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th](double) { return 2.0 * th; }, Interval::real_line(), mu};
}

// ---------------------------------------------------------------------------
// Cox-Ingersoll-Ross

CoxIngersollRoss::CoxIngersollRoss(double theta, double mu) : theta_(theta), mu_(mu) {
  require(theta > 0.0, "CoxIngersollRoss: theta must be positive");
  require(mu > 0.0, "CoxIngersollRoss: mu must be positive");
}

double CoxIngersollRoss::renyi(double alpha) const {
  if (!(alpha > 0.0)) throw std::domain_error("CoxIngersollRoss::renyi: alpha must be positive");
  if (alpha == 1.0) return shannon();
  const double s = alpha * (mu_ - 1.0) + 1.0;
  if (!(s > 0.0)) {
    throw divergence_error("CoxIngersollRoss::renyi: int f^alpha diverges (alpha(mu-1)+1 <= 0)");
  }
  return (-alpha * sf::log_gamma(mu_) - s * std::log(alpha) + sf::log_gamma(s)) /
         (1.0 - alpha);
}

double CoxIngersollRoss::shannon() const {
  return sf::log_gamma(mu_) - (mu_ - 1.0) * sf::digamma(mu_) + mu_;
}

double CoxIngersollRoss::song() const {
  const double d = mu_ - 1.0;
  return sf::trigamma(mu_) * d * d - mu_ + 2.0;
}

LogDensity CoxIngersollRoss::density() const {
  const double mu = mu_;
  const double lg = sf::log_gamma(mu_);
  return LogDensity{[mu, lg](double x) {
                      if (!(x > 0.0)) return -kInf;
                      return (mu - 1.0) * std::log(x) - x - lg;
                    },
                    Interval::positive_half_line()};
}

DiffusionSpec CoxIngersollRoss::sde() const {
  const double th = theta_, mu = mu_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th](double x) { return 2.0 * th * x; },
                       Interval::positive_half_line(), 1.0};
}

// ---------------------------------------------------------------------------
// cos-power integral

double log_cos_power_integral(double q, double p, const Tolerances& tols) {
  if (!(q > -1.0)) {
    throw divergence_error("log_cos_power_integral: cos exponent must exceed -1");
  }
  p = std::fabs(p);  // the integral is even in p
  int n = 0;
  if (near_integer(q, n)) {
    if (n == 0) {
      // int e^{-pt} over (-pi/2, pi/2) = 2 sinh(p pi/2)/p
      if (p == 0.0) return std::log(kPi);
      return kLog2 + log_sinh(0.5 * p * kPi) - std::log(p);
    }
    if (n % 2 == 0) {
      const int m = n / 2;
      // (2m)! * 2 sinh(p pi/2) / (p prod_{j=1..m} (p^2 + (2j)^2))
      double log_prod = 0.0;
      for (int j = 1; j <= m; ++j) log_prod += std::log(p * p + 4.0 * j * j);
      if (p == 0.0) {
        // limit: (2m)! pi / prod (2j)^2
        double log_prod0 = m * std::log(4.0) + 2.0 * sf::log_gamma(m + 1.0);
        return sf::log_gamma(2.0 * m + 1.0) + std::log(kPi) - log_prod0;
      }
      return sf::log_gamma(2.0 * m + 1.0) + kLog2 + log_sinh(0.5 * p * kPi) -
             std::log(p) - log_prod;
    }
    const int m = (n - 1) / 2;
    // (2m+1)! * 2 cosh(p pi/2) / prod_{j=0..m} (p^2 + (2j+1)^2)
    double log_prod = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double odd = 2.0 * j + 1.0;
      log_prod += std::log(p * p + odd * odd);
    }
    return sf::log_gamma(2.0 * m + 2.0) + kLog2 + log_cosh(0.5 * p * kPi) - log_prod;
  }
  const double pp = p;
  IntegralResult r = log_integrate(
      [q, pp](double t) { return q * std::log(std::cos(t)) - pp * t; },
      Interval{-0.5 * kPi, 0.5 * kPi}, tols);
  return r.value;
}

// ---------------------------------------------------------------------------
// Pearson type IV

PearsonTypeIV::PearsonTypeIV(double a, double mu, double theta)
    : a_(a), mu_(mu), theta_(theta) {
  require(a > 0.0, "PearsonTypeIV: a must be positive");
  require(theta > 0.0, "PearsonTypeIV: theta must be positive");
}

double PearsonTypeIV::special_order(int m, Branch branch) const {
  require(m >= 1, "PearsonTypeIV: branch index m must be >= 1");
  if (branch == Branch::even) return 2.0 * a_ * (m + 1.0) / (1.0 + 2.0 * a_);
  return 2.0 * a_ * (m + 1.5) / (1.0 + 2.0 * a_);
}

double PearsonTypeIV::log_base_integral() const {
  return log_cos_power_integral(1.0 / a_, mu_ / a_);
}

double PearsonTypeIV::renyi_special(int m, Branch branch) const {
  require(m >= 1, "PearsonTypeIV: branch index m must be >= 1");
  const double a = a_, mu = mu_;
  const double log_i1 = log_base_integral();

  if (branch == Branch::even) {
    const double denom = 2.0 * a * m - 1.0;
    if (denom == 0.0) {
      throw std::domain_error("PearsonTypeIV::renyi_special: order excluded (2am = 1)");
    }
    const double coef1 = 2.0 * a * (m + 1.0) / denom;
    const double coef2 = (1.0 + 2.0 * a) / (1.0 - 2.0 * a * m);
    const double p = 2.0 * (m + 1.0) * mu / (1.0 + 2.0 * a);
    double log_e;
    if (mu == 0.0) {
      // analytic limit of C(m, mu) sinh(..) as mu -> 0
      log_e = sf::log_gamma(2.0 * m + 1.0) + std::log(kPi) -
              (m * std::log(4.0) + 2.0 * sf::log_gamma(m + 1.0));
    } else {
      const double ap = std::fabs(p);
      double log_prod = 0.0;
      for (int j = 1; j <= m; ++j) log_prod += std::log(p * p + 4.0 * j * j);
      log_e = kLog2 + sf::log_gamma(2.0 * m + 1.0) + log_sinh(0.5 * ap * kPi) -
              std::log(ap) - log_prod;
    }
    return coef1 * log_i1 + coef2 * log_e;
  }

  const double denom = a * (2.0 * m + 1.0) - 1.0;
  if (denom == 0.0) {
    throw std::domain_error("PearsonTypeIV::renyi_special: order excluded (a(2m+1) = 1)");
  }
  const double coef1 = a * (2.0 * m + 3.0) / denom;
  const double coef2 = (1.0 + 2.0 * a) / (1.0 - a * (2.0 * m + 1.0));
  const double p = (2.0 * m + 3.0) * mu / (1.0 + 2.0 * a);
  double log_prod = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double odd = 2.0 * j + 1.0;
    log_prod += std::log(p * p + odd * odd);
  }
  const double log_e =
      kLog2 + sf::log_gamma(2.0 * m + 2.0) + log_cosh(0.5 * p * kPi) - log_prod;
  return coef1 * log_i1 + coef2 * log_e;
}

MeasureReport PearsonTypeIV::renyi_cos_form(double alpha, const Tolerances& tols) const {
  if (!(alpha > 0.0)) {
    throw std::domain_error("PearsonTypeIV::renyi_cos_form: alpha must be positive");
  }
  if (alpha == 1.0) {
    throw std::domain_error("PearsonTypeIV::renyi_cos_form: alpha must differ from 1");
  }
  const double q2 = alpha * (1.0 / a_ + 2.0) - 2.0;
  if (!(q2 > -1.0)) {
    throw divergence_error("PearsonTypeIV::renyi_cos_form: int f^alpha diverges");
  }
  const double log_i1 = log_cos_power_integral(1.0 / a_, mu_ / a_, tols);
  const double log_i2 = log_cos_power_integral(q2, alpha * mu_ / a_, tols);
  MeasureReport r;
  r.alpha = alpha;
  r.method = Method::quadrature;
  r.value = (-alpha * log_i1 + log_i2) / (1.0 - alpha);
  r.abs_err_est = 1e-12 * (1.0 + std::fabs(r.value));
  return r;
}

PearsonTypeIV::ShannonDual PearsonTypeIV::shannon_a1(const Tolerances& tols) const {
  require(a_ == 1.0, "PearsonTypeIV::shannon_a1: requires a == 1");
  ShannonDual d;
  d.oracle = shannon_numeric(density(), tols);

  // Catalogued a = 1 expression, evaluated literally:
  // 3 { cosh(mu pi/2)/(1+mu^2) - (3/2) log Gamma'(2) - (mu pi/2) tanh(mu pi/2)/1... }
  constexpr double kEulerMascheroni = 0.57721566490153286061;
  const double gamma_prime_2 = 1.0 - kEulerMascheroni;  // Gamma'(2) = Gamma(2) psi(2)
  const double y = 0.5 * mu_ * kPi;
  d.formula_value = 3.0 * (std::cosh(y) / (1.0 + mu_ * mu_) - 1.5 * std::log(gamma_prime_2) -
                           0.5 * mu_ * kPi * std::tanh(y) + mu_ * mu_);
  d.discrepancy = std::fabs(d.formula_value - d.oracle.value);
  return d;
}

LogDensity PearsonTypeIV::density() const {
  const double a = a_, mu = mu_;
  const double log_norm = log_base_integral();
  return LogDensity{[a, mu, log_norm](double x) {
                      return -(0.5 / a + 1.0) * std::log1p(x * x) +
                             (mu / a) * std::atan(x) - log_norm;
                    },
                    Interval::real_line()};
}

DiffusionSpec PearsonTypeIV::sde() const {
  const double th = theta_, mu = mu_, a = a_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th, a](double x) { return 2.0 * th * a * (x * x + 1.0); },
                       Interval::real_line(), 0.0};
}

// ---------------------------------------------------------------------------
// Inverse Gamma

InverseGammaDiffusion::InverseGammaDiffusion(double a, double mu, double theta)
    : a_(a), mu_(mu), theta_(theta) {
  require(a > 0.0, "InverseGammaDiffusion: a must be positive");
  require(mu > 0.0, "InverseGammaDiffusion: mu must be positive");
  require(theta > 0.0, "InverseGammaDiffusion: theta must be positive");
  shape_ = 1.0 + 1.0 / a_;
  scale_ = mu_ / a_;
}

double InverseGammaDiffusion::renyi(double alpha) const {
  if (!(alpha > 0.0)) {
    throw std::domain_error("InverseGammaDiffusion::renyi: alpha must be positive");
  }
  if (alpha == 1.0) return shannon();
  const double s = alpha * (shape_ + 1.0) - 1.0;  // alpha(2 + 1/a) - 1
  if (!(s > 0.0)) {
    throw divergence_error(
        "InverseGammaDiffusion::renyi: int f^alpha diverges (alpha(2+1/a)-1 <= 0)");
  }
  return std::log(scale_) + ((1.0 - (shape_ + 1.0) * alpha) * std::log(alpha) +
                             sf::log_gamma(s) - alpha * sf::log_gamma(shape_)) /
                                (1.0 - alpha);
}

double InverseGammaDiffusion::shannon() const {
  return std::log(scale_) + sf::log_gamma(shape_) + shape_ -
         (shape_ + 1.0) * sf::digamma(shape_);
}

double InverseGammaDiffusion::song() const {
  const double k1 = shape_ + 1.0;
  return k1 * k1 * sf::trigamma(shape_) - (shape_ + 2.0);
}

LogDensity InverseGammaDiffusion::density() const {
  const double k = shape_, s = scale_;
  const double c = k * std::log(s) - sf::log_gamma(k);
  return LogDensity{[k, s, c](double x) {
                      if (!(x > 0.0)) return -kInf;
                      return c - (k + 1.0) * std::log(x) - s / x;
                    },
                    Interval::positive_half_line()};
}

DiffusionSpec InverseGammaDiffusion::sde() const {
  const double th = theta_, mu = mu_, a = a_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th, a](double x) { return 2.0 * th * a * x * x; },
                       Interval::positive_half_line(), 1.0};
}

// ---------------------------------------------------------------------------
// Scaled F

ScaledF::ScaledF(double a, double mu, double theta) : a_(a), mu_(mu), theta_(theta) {
  require(a > 0.0, "ScaledF: a must be positive");
  require(theta > 0.0, "ScaledF: theta must be positive");
  require(mu / a >= 1.0, "ScaledF: requires mu/a >= 1");
  p_ = mu_ / a_;
  q_ = 1.0 + 1.0 / a_;
}

double ScaledF::renyi(double alpha) const {
  if (!(alpha > 0.0)) throw std::domain_error("ScaledF::renyi: alpha must be positive");
  if (alpha == 1.0) return shannon();
  const double A = alpha * (p_ - 1.0) + 1.0;
  const double B = alpha * (q_ + 1.0) - 1.0;
  if (!(A > 0.0) || !(B > 0.0)) {
    throw divergence_error("ScaledF::renyi: int f^alpha diverges (Beta argument <= 0)");
  }
  return (-alpha * sf::log_beta(p_, q_) + sf::log_beta(A, B)) / (1.0 - alpha);
}

double ScaledF::shannon() const {
  return sf::log_beta(p_, q_) - (p_ - 1.0) * sf::digamma(p_) -
         (q_ + 1.0) * sf::digamma(q_) + (p_ + q_) * sf::digamma(p_ + q_);
}

double ScaledF::song() const {
  const double c1 = p_ - 1.0, c2 = q_ + 1.0, c3 = p_ + q_;
  return c1 * c1 * sf::trigamma(p_) + c2 * c2 * sf::trigamma(q_) -
         c3 * c3 * sf::trigamma(p_ + q_);
}

LogDensity ScaledF::density() const {
  const double p = p_, q = q_;
  const double lb = sf::log_beta(p, q);
  return LogDensity{[p, q, lb](double x) {
                      if (!(x > 0.0)) return -kInf;
                      return (p - 1.0) * std::log(x) - (p + q) * std::log1p(x) - lb;
                    },
                    Interval::positive_half_line()};
}

DiffusionSpec ScaledF::sde() const {
  const double th = theta_, mu = mu_, a = a_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th, a](double x) { return 2.0 * th * a * x * (x + 1.0); },
                       Interval::positive_half_line(), 1.0};
}

// ---------------------------------------------------------------------------
// Jacobi

JacobiDiffusion::JacobiDiffusion(double a, double mu, double theta)
    : a_(a), mu_(mu), theta_(theta) {
  require(a < 0.0, "JacobiDiffusion: a must be negative");
  require(theta > 0.0, "JacobiDiffusion: theta must be positive");
  require(mu > 0.0 && mu < 1.0, "JacobiDiffusion: mu must lie in (0, 1)");
  require(std::min(mu, 1.0 - mu) >= -a, "JacobiDiffusion: requires min(mu, 1-mu) >= -a");
  p_ = -mu_ / a_;
  q_ = -(1.0 - mu_) / a_;
}

double JacobiDiffusion::renyi(double alpha) const {
  if (!(alpha > 0.0)) throw std::domain_error("JacobiDiffusion::renyi: alpha must be positive");
  if (alpha == 1.0) return shannon();
  const double A = alpha * (p_ - 1.0) + 1.0;
  const double B = alpha * (q_ - 1.0) + 1.0;
  if (!(A > 0.0) || !(B > 0.0)) {
    throw divergence_error("JacobiDiffusion::renyi: int f^alpha diverges (Beta argument <= 0)");
  }
  return (-alpha * sf::log_beta(p_, q_) + sf::log_beta(A, B)) / (1.0 - alpha);
}

double JacobiDiffusion::shannon() const {
  return sf::log_beta(p_, q_) - (p_ - 1.0) * sf::digamma(p_) -
         (q_ - 1.0) * sf::digamma(q_) + (p_ + q_ - 2.0) * sf::digamma(p_ + q_);
}

double JacobiDiffusion::song() const {
  const double c1 = p_ - 1.0, c2 = q_ - 1.0, c3 = p_ + q_ - 2.0;
  return c1 * c1 * sf::trigamma(p_) + c2 * c2 * sf::trigamma(q_) -
         c3 * c3 * sf::trigamma(p_ + q_);
}

LogDensity JacobiDiffusion::density() const {
  const double p = p_, q = q_;
  const double lb = sf::log_beta(p, q);
  return LogDensity{[p, q, lb](double x) {
                      if (!(x > 0.0 && x < 1.0)) return -kInf;
                      return (p - 1.0) * std::log(x) + (q - 1.0) * std::log1p(-x) - lb;
                    },
                    Interval::unit()};
}

DiffusionSpec JacobiDiffusion::sde() const {
  const double th = theta_, mu = mu_, a = a_;
  return DiffusionSpec{[th, mu](double x) { return -th * (x - mu); },
                       [th, a](double x) { return 2.0 * th * a * x * (x - 1.0); },
                       Interval::unit(), 0.5};
}

// ---------------------------------------------------------------------------
// Generalized inverse Gaussian

GeneralizedInverseGaussian::GeneralizedInverseGaussian(double gamma, double lambda,
                                                       double theta1, double theta2,
                                                       double theta3)
    : gamma_(gamma), lambda_(lambda), theta1_(theta1), theta2_(theta2), theta3_(theta3) {
  require(gamma >= 0.0, "GeneralizedInverseGaussian: gamma must be nonnegative");
  require(lambda > 0.0, "GeneralizedInverseGaussian: lambda must be positive");
  const bool t1 = theta1 >= 1.0 && theta2 > 0.0 && theta3 >= 0.0;
  const bool t2 = 1.0 - 2.0 * gamma <= theta1 && theta1 < 1.0 && theta2 > 0.0 && theta3 > 0.0;
  const bool t3 = theta1 < 1.0 - 2.0 * gamma && theta2 >= 0.0 && theta3 > 0.0;
  require(t1 || t2 || t3,
          "GeneralizedInverseGaussian: (theta1, theta2, theta3) outside the ergodic region");
}

double GeneralizedInverseGaussian::renyi(double alpha) const {
  if (!(alpha > 0.0)) {
    throw std::domain_error("GeneralizedInverseGaussian::renyi: alpha must be positive");
  }
  if (alpha == 1.0) return shannon();
  if (!bessel_form_valid()) {
    throw std::domain_error(
        "GeneralizedInverseGaussian::renyi: needs theta2 > 0 and theta3 > 0 "
        "(Bessel argument degenerates)");
  }
  const double omega = 2.0 * std::sqrt(theta2_ * theta3_);
  const double order = alpha * (theta1_ - 2.0 * gamma_) + 1.0;
  return kLog2 - 0.5 * (std::log(theta2_) - std::log(theta3_)) +
         (sf::log_bessel_k(order, alpha * omega) - alpha * sf::log_bessel_k(nu(), omega)) /
             (1.0 - alpha);
}

double GeneralizedInverseGaussian::shannon() const {
  if (!bessel_form_valid()) {
    throw std::domain_error(
        "GeneralizedInverseGaussian::shannon: needs theta2 > 0 and theta3 > 0");
  }
  const double omega = 2.0 * std::sqrt(theta2_ * theta3_);
  const double v = nu();
  const double log_k_nu = sf::log_bessel_k(v, omega);
  const double k_ratio_down = std::exp(sf::log_bessel_k(v - 1.0, omega) - log_k_nu);
  return kLog2 - 0.5 * (std::log(theta2_) - std::log(theta3_)) + v + log_k_nu -
         (v - 1.0) * sf::log_bessel_k_dnu(v, omega) + omega * k_ratio_down;
}

std::optional<double> GeneralizedInverseGaussian::closed_renyi(double alpha) const {
  if (!bessel_form_valid()) return std::nullopt;
  return renyi(alpha);
}

std::optional<double> GeneralizedInverseGaussian::closed_shannon() const {
  if (!bessel_form_valid()) return std::nullopt;
  return shannon();
}

LogDensity GeneralizedInverseGaussian::density() const {
  if (!bessel_form_valid()) {
    throw std::domain_error(
        "GeneralizedInverseGaussian::density: needs theta2 > 0 and theta3 > 0");
  }
  const double v = nu(), t2 = theta2_, t3 = theta3_;
  const double omega = 2.0 * std::sqrt(t2 * t3);
  const double c = -kLog2 + 0.5 * v * (std::log(t2) - std::log(t3)) -
                   sf::log_bessel_k(v, omega);
  return LogDensity{[v, t2, t3, c](double x) {
                      if (!(x > 0.0)) return -kInf;
                      return c + (v - 1.0) * std::log(x) - t2 * x - t3 / x;
                    },
                    Interval::positive_half_line()};
}

DiffusionSpec GeneralizedInverseGaussian::sde() const {
  const double g = gamma_, l2 = lambda_ * lambda_;
  const double b1 = 0.5 * theta1_ * l2, b2 = 0.5 * theta2_ * l2, b3 = 0.5 * theta3_ * l2;
  return DiffusionSpec{
      [g, b1, b2, b3](double x) {
        return b1 * std::pow(x, 2.0 * g - 1.0) - b2 * std::pow(x, 2.0 * g) +
               b3 * std::pow(x, 2.0 * g - 2.0);
      },
      [g, l2](double x) { return l2 * std::pow(x, 2.0 * g); },
      Interval::positive_half_line(), 1.0};
}

// ---------------------------------------------------------------------------
// Hyperbolic

HyperbolicDiffusion::HyperbolicDiffusion(double gamma, double beta, double delta, double mu,
                                         double sigma)
    : gamma_(gamma), beta_(beta), delta_(delta), mu_(mu), sigma_(sigma) {
  require(gamma > std::fabs(beta), "HyperbolicDiffusion: requires gamma > |beta|");
  require(delta > 0.0, "HyperbolicDiffusion: delta must be positive");
  require(sigma > 0.0, "HyperbolicDiffusion: sigma must be positive");
}

double HyperbolicDiffusion::renyi(double alpha) const {
  if (!(alpha > 0.0)) {
    throw std::domain_error("HyperbolicDiffusion::renyi: alpha must be positive");
  }
  if (alpha == 1.0) return shannon();
  const double zeta = std::sqrt(gamma_ * gamma_ - beta_ * beta_);
  const double z = delta_ * zeta;
  const double c = std::log(2.0 * gamma_ * delta_) - std::log(zeta);
  return c + (sf::log_bessel_k(1.0, alpha * z) - alpha * sf::log_bessel_k(1.0, z)) /
                 (1.0 - alpha);
}

double HyperbolicDiffusion::shannon() const {
  const double zeta = std::sqrt(gamma_ * gamma_ - beta_ * beta_);
  const double z = delta_ * zeta;
  const double log_k1 = sf::log_bessel_k(1.0, z);
  const double r0 = std::exp(sf::log_bessel_k(0.0, z) - log_k1);
  return std::log(2.0 * gamma_ * delta_) - std::log(zeta) + log_k1 + 1.0 + z * r0;
}

double HyperbolicDiffusion::song() const {
  const double z = bessel_argument();
  const double r0 = std::exp(sf::log_bessel_k(0.0, z) - sf::log_bessel_k(1.0, z));
  return 1.0 - z * r0 + z * z * (1.0 - r0 * r0);
}

LogDensity HyperbolicDiffusion::density() const {
  const double g = gamma_, b = beta_, d = delta_, m = mu_;
  const double zeta = std::sqrt(g * g - b * b);
  const double z = d * zeta;
  const double c = std::log(zeta) - std::log(2.0 * g * d) - sf::log_bessel_k(1.0, z);
  return LogDensity{[g, b, d, m, c](double x) {
                      const double u = x - m;
                      return c - g * std::sqrt(d * d + u * u) + b * u;
                    },
                    Interval::real_line()};
}

DiffusionSpec HyperbolicDiffusion::sde() const {
  const double g = gamma_, b = beta_, d = delta_, m = mu_, s2 = sigma_ * sigma_;
  return DiffusionSpec{
      [g, b, d, m, s2](double x) {
        const double u = x - m;
        return 0.5 * s2 * (b - g * u / std::sqrt(d * d + u * u));
      },
      [s2](double) { return s2; }, Interval::real_line(), mu_};
}

// ---------------------------------------------------------------------------
// Skew Student t

SkewStudentT::SkewStudentT(double gamma, double beta, double sigma)
    : gamma_(gamma), beta_(beta), sigma_(sigma) {
  require(gamma > 0.0, "SkewStudentT: gamma must be positive");
  require(beta > 0.0, "SkewStudentT: beta must be positive");
  require(sigma > 0.0, "SkewStudentT: sigma must be positive");
}

double SkewStudentT::renyi(double alpha) const {
  if (!(alpha > 0.0)) throw std::domain_error("SkewStudentT::renyi: alpha must be positive");
  if (alpha == 1.0) return shannon();
  const double A = alpha * (gamma_ + 0.5) - 0.5;
  const double B = alpha * (beta_ + 0.5) - 0.5;
  if (!(A > 0.0) || !(B > 0.0)) {
    throw divergence_error("SkewStudentT::renyi: int f^alpha diverges (order too small)");
  }
  const double c = gamma_ + beta_;
  return ((alpha - 1.0) * std::log(4.0) + sf::log_beta(A, B) -
          0.5 * (alpha - 1.0) * std::log(c) - alpha * sf::log_beta(gamma_, beta_)) /
         (1.0 - alpha);
}

double SkewStudentT::shannon() const {
  const double c = gamma_ + beta_;
  return sf::log_beta(gamma_, beta_) + 0.5 * std::log(c) - 2.0 * kLog2 -
         (gamma_ + 0.5) * sf::digamma(gamma_) - (beta_ + 0.5) * sf::digamma(beta_) +
         (c + 1.0) * sf::digamma(c);
}

double SkewStudentT::song() const {
  const double c = gamma_ + beta_;
  const double cg = gamma_ + 0.5, cb = beta_ + 0.5, cc = c + 1.0;
  return cg * cg * sf::trigamma(gamma_) + cb * cb * sf::trigamma(beta_) -
         cc * cc * sf::trigamma(c);
}

LogDensity SkewStudentT::density() const {
  const double g = gamma_, b = beta_;
  const double c = g + b;
  const double log_norm = sf::log_beta(g, b) + 0.5 * std::log(c) + (c - 1.0) * kLog2;
  return LogDensity{[g, b, c, log_norm](double x) {
                      // stable split of 1 +- x/sqrt(c + x^2)
                      const double r = std::sqrt(c + x * x);
                      const double ax = std::fabs(x);
                      const double big = (r + ax) / r;       // 1 + |y|
                      const double small = c / (r * (r + ax));  // 1 - |y|
                      const double lp = x >= 0.0 ? std::log(big) : std::log(small);
                      const double lm = x >= 0.0 ? std::log(small) : std::log(big);
                      return (g + 0.5) * lp + (b + 0.5) * lm - log_norm;
                    },
                    Interval::real_line()};
}

DiffusionSpec SkewStudentT::sde() const {
  const double g = gamma_, b = beta_, s2 = sigma_ * sigma_;
  const double c = g + b;
  return DiffusionSpec{
      [g, b, c, s2](double x) {
        const double r = std::sqrt(c + x * x);
        return 0.5 * s2 * ((g + 0.5) * (r - x) - (b + 0.5) * (r + x)) / (c + x * x);
      },
      [s2](double) { return s2; }, Interval::real_line(), 0.0};
}

// ---------------------------------------------------------------------------
// Custom diffusion

CustomDiffusion::CustomDiffusion(DiffusionSpec spec, const Tolerances& tols)
    : spec_(std::move(spec)), tols_(tols) {}

const InvariantDensity& CustomDiffusion::invariant_law() const {
  if (!law_) law_ = std::make_shared<const InvariantDensity>(spec_, tols_);
  return *law_;
}

LogDensity CustomDiffusion::density() const { return invariant_law().density(); }

}  // namespace diffent::models
