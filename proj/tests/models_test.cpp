// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/models.hpp"

#include <cmath>

#include "diffent/errors.hpp"
#include "diffent/measures.hpp"
#include "diffent/special_functions.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace diffent;
using namespace diffent::models;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286061;

// closed-vs-oracle agreement for one family instance over an order grid
void check_oracle_equivalence(const Model& m, std::initializer_list<double> alphas,
                              double tol_renyi = 1e-7, double tol_shannon = 1e-6) {
  for (double a : alphas) {
    CAPTURE(m.family());
    CAPTURE(a);
    auto closed = m.closed_renyi(a);
    REQUIRE(closed.has_value());
    const double numeric = renyi_numeric(m.density(), a).value;
    CHECK(*closed == AbsTol(numeric, tol_renyi));
  }
  if (auto s = m.closed_shannon()) {
    const double numeric = shannon_numeric(m.density()).value;
    CHECK(*s == AbsTol(numeric, tol_shannon));
  }
}

}  // namespace

TEST_CASE("Ornstein-Uhlenbeck closed measures") {
  OrnsteinUhlenbeck ou(1.0, 0.0);
  CHECK(ou.renyi(2.0) == doctest::Approx(0.5 * std::log(4.0 * kPi)).epsilon(1e-14));
  CHECK(ou.shannon() == doctest::Approx(0.5 * (1.0 + std::log(2.0 * kPi))).epsilon(1e-14));
  CHECK(ou.song() == 1.0);  // catalogued value

  // measures do not depend on theta or mu
  OrnsteinUhlenbeck other(3.2, -7.0);
  CHECK(other.renyi(0.7) == ou.renyi(0.7));
  CHECK(other.shannon() == ou.shannon());

  check_oracle_equivalence(ou, {0.6, 2.0, 3.0});

  // The variance identity evaluates to 1/2, not the catalogued 1; the
  // numeric route is authoritative and the gap is surfaced by validate.
  CHECK(song_numeric(ou.density()).value == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(ou.song() - song_numeric(ou.density()).value == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("Cox-Ingersoll-Ross closed measures") {
  CoxIngersollRoss exponential(1.0, 1.0);
  CHECK(exponential.shannon() == doctest::Approx(1.0).epsilon(1e-14));

  CoxIngersollRoss cir(1.0, 2.0);
  CHECK(cir.renyi(2.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(cir.song() == doctest::Approx(sf::trigamma(2.0)).epsilon(1e-13));
  CHECK(cir.sde_ergodic());

  for (double mu : {1.5, 2.0, 5.0}) {
    check_oracle_equivalence(CoxIngersollRoss(1.0, mu), {0.6, 2.0, 3.0});
  }

  SUBCASE("distribution-level formulas accept 0 < mu <= 1") {
    CoxIngersollRoss sub(1.0, 0.5);
    CHECK_FALSE(sub.sde_ergodic());
    check_oracle_equivalence(sub, {0.6, 1.5});  // alpha < 1/(1-mu) = 2
    CHECK_THROWS_AS(sub.renyi(2.0), divergence_error);   // boundary exactly
    CHECK_THROWS_AS(sub.renyi(3.0), divergence_error);
  }

  SUBCASE("Renyi grows toward the validity boundary") {
    CoxIngersollRoss sub(1.0, 0.5);
    double prev = sub.renyi(1.5);
    for (double a : {1.8, 1.9, 1.99}) {
      const double cur = sub.renyi(a);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("inverse Gamma closed measures") {
  InverseGammaDiffusion ig(1.0, 1.0, 1.0);
  CHECK(ig.shannon() == doctest::Approx(3.0 * kEuler - 1.0).epsilon(1e-13));  // 0.7316470
  CHECK(ig.song() == doctest::Approx(9.0 * sf::trigamma(2.0) - 4.0).epsilon(1e-13));

  for (auto [a, mu] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{2.0, 3.0}}) {
    check_oracle_equivalence(InverseGammaDiffusion(a, mu, 1.0), {0.6, 2.0, 3.0});
  }

  // the shape index has no mu dependence
  CHECK(InverseGammaDiffusion(1.0, 7.0, 1.0).song() == ig.song());

  CHECK_THROWS_AS(ig.renyi(1.0 / 3.0), divergence_error);  // alpha(2 + 1/a) - 1 = 0
}

TEST_CASE("scaled F closed measures") {
  ScaledF f11(1.0, 1.0, 1.0);
  // density 2 (1+x)^{-3}: Shannon = 3/2 - log 2, R_2 = log(5/4), S = 9/4
  CHECK(f11.shannon() == doctest::Approx(1.5 - std::log(2.0)).epsilon(1e-13));
  CHECK(f11.renyi(2.0) == doctest::Approx(std::log(1.25)).epsilon(1e-13));
  CHECK(f11.song() == doctest::Approx(2.25).epsilon(1e-13));

  for (auto [a, mu] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 1.0}}) {
    check_oracle_equivalence(ScaledF(a, mu, 1.0), {0.6, 2.0, 3.0});
  }

  CHECK_THROWS_AS(ScaledF(1.0, 0.5, 1.0), std::invalid_argument);  // mu/a < 1
  CHECK_THROWS_AS(f11.renyi(1.0 / 3.0), divergence_error);
}

TEST_CASE("Jacobi closed measures") {
  JacobiDiffusion uniform(-0.5, 0.5, 1.0);
  for (double a : {0.5, 2.0, 3.0}) {
    CAPTURE(a);
    CHECK(uniform.renyi(a) == AbsTol(0.0, 1e-14));
  }
  CHECK(uniform.song() == AbsTol(0.0, 1e-13));

  JacobiDiffusion beta22(-0.25, 0.5, 1.0);  // Beta(2, 2)
  CHECK(beta22.shannon() ==
        doctest::Approx(5.0 / 3.0 - std::log(6.0)).epsilon(1e-12));
  CHECK(beta22.shannon() ==
        AbsTol(shannon_numeric(beta22.density()).value, 1e-9));

  for (auto [a, mu] : {std::pair{-0.5, 0.5}, std::pair{-0.25, 0.5}, std::pair{-0.25, 1.0 / 3.0}}) {
    check_oracle_equivalence(JacobiDiffusion(a, mu, 1.0), {0.6, 2.0, 3.0});
  }

  CHECK_THROWS_AS(JacobiDiffusion(-0.6, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(JacobiDiffusion(0.25, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("generalized inverse Gaussian closed measures") {
  // theta1 - 2 gamma = -1/2, theta2 = theta3 = 1
  GeneralizedInverseGaussian gig(0.75, 1.0, 1.0, 1.0, 1.0);
  CHECK(gig.nu() == doctest::Approx(0.5));

  const double r2 = gig.renyi(2.0);
  const double expected =
      std::log(2.0) - std::log(sf::bessel_k(0.0, 4.0) / std::pow(sf::bessel_k(0.5, 2.0), 2));
  CHECK(r2 == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r2 == doctest::Approx(0.947).epsilon(1e-3));

  for (auto p : {std::tuple{0.75, 1.0, 1.0}, std::tuple{0.5, 2.0, 0.5}, std::tuple{0.0, 1.0, 3.0}}) {
    auto [g, t2, t3] = p;
    GeneralizedInverseGaussian m(g, 1.0, 1.5, t2, t3);
    check_oracle_equivalence(m, {0.6, 2.0, 3.0});
  }

  SUBCASE("degenerate Bessel argument is rejected") {
    GeneralizedInverseGaussian gamma_like(0.0, 1.0, 2.0, 1.0, 0.0);
    CHECK_THROWS_AS(gamma_like.renyi(2.0), std::domain_error);
    CHECK_FALSE(gamma_like.closed_renyi(2.0).has_value());
  }
  SUBCASE("parameter triples outside the admissible region are rejected") {
    CHECK_THROWS_AS(GeneralizedInverseGaussian(0.0, 1.0, 0.5, 1.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("hyperbolic closed measures") {
  HyperbolicDiffusion hyp(1.0, 0.0, 1.0, 0.0, 1.0);
  const double k0 = sf::bessel_k(0.0, 1.0);
  const double k1 = sf::bessel_k(1.0, 1.0);

  CHECK(hyp.renyi(2.0) ==
        doctest::Approx(std::log(2.0) - std::log(sf::bessel_k(1.0, 2.0) / (k1 * k1)))
            .epsilon(1e-12));
  CHECK(hyp.renyi(2.0) == doctest::Approx(1.645).epsilon(1e-3));

  // S from -2 dR/dalpha at 1: z = 1 here
  const double r0 = k0 / k1;
  CHECK(hyp.song() == doctest::Approx(1.0 - r0 + (1.0 - r0 * r0)).epsilon(1e-12));
  CHECK(hyp.song() == doctest::Approx(song_numeric(hyp.density()).value).epsilon(1e-7));

  for (auto p : {std::tuple{1.0, 0.0, 1.0}, std::tuple{2.0, 1.0, 1.0}, std::tuple{1.5, -0.5, 2.0}}) {
    auto [g, b, d] = p;
    check_oracle_equivalence(HyperbolicDiffusion(g, b, d, 0.0, 1.0), {0.6, 2.0, 3.0});
  }

  SUBCASE("measures do not depend on the location") {
    HyperbolicDiffusion shifted(1.0, 0.0, 1.0, 5.0, 1.0);
    CHECK(shifted.renyi(2.0) == hyp.renyi(2.0));
    CHECK(shifted.shannon() == hyp.shannon());
    CHECK(shifted.song() == hyp.song());
  }
  SUBCASE("gamma <= |beta| is rejected") {
    CHECK_THROWS_AS(HyperbolicDiffusion(1.0, 1.0, 1.0, 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("the Bessel ratio identity behind the hyperbolic proofs") {
  for (double z : {0.5, 1.0, 2.0, 10.0}) {
    CAPTURE(z);
    const double lhs = z * (sf::bessel_k(0.0, z) + sf::bessel_k(2.0, z)) /
                       (2.0 * sf::bessel_k(1.0, z));
    const double rhs = 1.0 + z * sf::bessel_k(0.0, z) / sf::bessel_k(1.0, z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("skew Student t closed measures") {
  SUBCASE("gamma = beta = 1/2 is the Cauchy law") {
    SkewStudentT cauchy(0.5, 0.5, 1.0);
    CHECK(cauchy.shannon() == doctest::Approx(std::log(4.0 * kPi)).epsilon(1e-13));
    CHECK(cauchy.renyi(2.0) == doctest::Approx(std::log(2.0 * kPi)).epsilon(1e-13));
    CHECK(cauchy.song() == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-12));
    CHECK(cauchy.density().log_pdf(1.3) ==
          doctest::Approx(-std::log(kPi * (1.0 + 1.3 * 1.3))).epsilon(1e-12));
  }
  SUBCASE("gamma = beta = 3 is Student t with 6 degrees of freedom") {
    SkewStudentT t6(3.0, 3.0, 1.0);
    CHECK(t6.song() == doctest::Approx(0.79105980666).epsilon(1e-9));
    CHECK(song_numeric(t6.density()).value == doctest::Approx(t6.song()).epsilon(1e-7));
  }
  SUBCASE("validity region") {
    SkewStudentT cauchy(0.5, 0.5, 1.0);
    CHECK_THROWS_AS(cauchy.renyi(0.5), divergence_error);  // boundary exactly
    CHECK_THROWS_AS(cauchy.renyi(0.3), divergence_error);
    CHECK(std::isfinite(cauchy.renyi(0.51)));
  }
  SUBCASE("reflection symmetry in (gamma, beta)") {
    SkewStudentT ab(2.0, 1.0, 1.0);
    SkewStudentT ba(1.0, 2.0, 1.0);
    CHECK(ab.shannon() == doctest::Approx(ba.shannon()).epsilon(1e-14));
    CHECK(ab.song() == doctest::Approx(ba.song()).epsilon(1e-14));
    CHECK(ab.renyi(2.0) == doctest::Approx(ba.renyi(2.0)).epsilon(1e-14));
    // densities are mirror images
    CHECK(ab.density().log_pdf(1.7) == doctest::Approx(ba.density().log_pdf(-1.7)).epsilon(1e-12));
  }
  for (auto p : {std::pair{3.0, 3.0}, std::pair{2.0, 1.0}, std::pair{0.5, 0.5}}) {
    check_oracle_equivalence(SkewStudentT(p.first, p.second, 1.0), {0.6, 2.0, 3.0});
  }
}

TEST_CASE("closed Renyi spectra are nonincreasing in the order") {
  const std::initializer_list<double> grid = {0.6, 0.9, 1.5, 2.0, 4.0, 8.0};
  auto check_monotone = [&](const Model& m) {
    double prev = std::numeric_limits<double>::infinity();
    for (double a : grid) {
      CAPTURE(m.family());
      CAPTURE(a);
      auto v = m.closed_renyi(a);
      REQUIRE(v.has_value());
      CHECK(*v <= prev + 1e-12);
      prev = *v;
    }
  };
  check_monotone(OrnsteinUhlenbeck(1.0, 0.0));
  check_monotone(CoxIngersollRoss(1.0, 2.0));
  check_monotone(InverseGammaDiffusion(1.0, 1.0, 1.0));
  check_monotone(ScaledF(1.0, 2.0, 1.0));
  check_monotone(JacobiDiffusion(-0.25, 0.5, 1.0));
  check_monotone(GeneralizedInverseGaussian(0.75, 1.0, 1.0, 1.0, 1.0));
  check_monotone(HyperbolicDiffusion(1.0, 0.0, 1.0, 0.0, 1.0));
  check_monotone(SkewStudentT(3.0, 3.0, 1.0));
}
