// Copyright 2026 The pwclock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pwclock/clock.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pwclock/error.hpp"

namespace pwclock::clock {
namespace {

using testing::integrate;

ClockParams natural(double r, double n_reset, double alpha_re) {
  ClockParams p;
  p.damping = r;
  p.n_reset = n_reset;
  p.alpha = {alpha_re, 0.0};
  return p;
}

struct QuadratureMoments {
  double norm, mean, stddev;
};

QuadratureMoments quadrature_moments(double n, const ClockParams& p) {
  // interval from the formulas themselves, wide enough that tails are < 1e-40
  const double mu = p.amplitude() * std::exp(-0.5 * p.damping * n) *
                    std::cos(std::sqrt(p.omega * p.omega - p.damping * p.damping / 4) * n);
  const double s = std::exp(-0.5 * p.damping * n) * std::sqrt(p.hbar / (2 * p.mass * p.omega));
  const double lo = mu - 14 * s, hi = mu + 14 * s;
  const auto rho = [&](double x) { return std::norm(wavefunction(x, n, p)); };
  const double norm = integrate(rho, lo, hi);
  const double mean = integrate([&](double x) { return x * rho(x); }, lo, hi) / norm;
  const double var =
      integrate([&](double x) { return (x - mean) * (x - mean) * rho(x); }, lo, hi) / norm;
  return {norm, mean, std::sqrt(var)};
}

TEST(Wavefunction, UnitGaussianPeak) {
  const ClockParams p = natural(0.0, 1.0, 0.0);  // alpha = 0: centred at the origin
  EXPECT_NEAR(std::norm(wavefunction(0.0, 0.0, p)), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
}

TEST(Wavefunction, PeakAtMeanForDampedClock) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  const double mean = position_expectation(0.0, p);
  EXPECT_NEAR(mean, std::sqrt(2.0), 1e-15);
  const double delta = std::sqrt(0.5);
  EXPECT_NEAR(std::norm(wavefunction(mean, 0.0, p)),
              1.0 / (delta * std::sqrt(2 * std::numbers::pi)), 1e-14);
}

TEST(Wavefunction, PhaseIsGlobal) {
  ClockParams p = natural(0.5, 2.0, 1.0);
  const double before = std::norm(wavefunction(0.9, 0.7, p));
  p.phase = 1.234;
  const Complex psi = wavefunction(0.9, 0.7, p);
  EXPECT_NEAR(std::norm(psi), before, 1e-15);
  EXPECT_NEAR(std::arg(psi), 1.234, 1e-14);
}

TEST(Wavefunction, RejectsTimesOutsideRun) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_THROW(wavefunction(0.0, -0.1, p), Error);
  EXPECT_THROW(wavefunction(0.0, 2.1, p), Error);
  EXPECT_NO_THROW(wavefunction(0.0, 2.0, p));
}

TEST(Wavefunction, NormalizedMeanAndWidthMatchQuadrature) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ClockParams p = testing::random_clock(rng);
    const double n = std::uniform_real_distribution<double>(0.0, p.n_reset)(rng);
    const auto q = quadrature_moments(n, p);
    const double s = width(n, p);
    EXPECT_NEAR(q.norm, 1.0, 1e-8);
    EXPECT_NEAR(q.mean, position_expectation(n, p), 1e-8 * std::max(std::abs(q.mean), s));
    EXPECT_NEAR(q.stddev / s, 1.0, 1e-8);
  }
}

TEST(PositionExpectation, LimitsAndEnvelope) {
  ClockParams p = natural(0.4, 2.5, 1.3);
  p.mass = 2.0;
  p.omega = 1.7;
  EXPECT_EQ(position_expectation(0.0, p), p.amplitude());
  for (double n = 0.0; n < 2.5; n += 0.01) {
    EXPECT_LE(std::abs(position_expectation(n, p)),
              p.amplitude() * std::exp(-0.2 * n) * (1 + 1e-15));
  }
  ClockParams undamped = natural(0.0, 5.0, 1.0);
  EXPECT_NEAR(position_expectation(2.3, undamped), std::sqrt(2.0) * std::cos(2.3), 1e-15);
}

TEST(Width, SubstitutionValues) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_NEAR(width(0.0, p), 0.70711, 5e-6);
  EXPECT_NEAR(width(4.0, natural(0.5, 2.0, 1.0)), std::exp(-1.0) * std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(width(4.0, p), 0.26013, 5e-6);
}

TEST(Width, StrictlyDecreasingWhenDamped) {
  const ClockParams damped = natural(0.3, 3.0, 1.0);
  const ClockParams undamped = natural(0.0, 3.0, 1.0);
  for (double n = 0.0; n + 0.05 < 3.0; n += 0.05) {
    EXPECT_GT(width(n, damped), width(n + 0.05, damped));
    EXPECT_EQ(width(n, undamped), width(n + 0.05, undamped));
  }
}

TEST(Moments, BundleMatchesParts) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  const auto m = moments(0.8, p);
  EXPECT_EQ(m.n, 0.8);
  EXPECT_EQ(m.mean_x, position_expectation(0.8, p));
  EXPECT_EQ(m.width, width(0.8, p));
  EXPECT_GT(m.width, 0.0);
}

TEST(DecoherenceRate, Values) {
  ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(decoherence_rate(0.0, p), 0.5);
  EXPECT_NEAR(decoherence_rate(2.0, p), 0.5 * 0.36788, 5e-6);  // rn = 1
  p.hbar = 2.0;
  p.mass = 4.0;
  p.omega = 0.5;
  EXPECT_DOUBLE_EQ(decoherence_rate(0.0, p), 0.5 * 2.0 / (4.0 * 0.5));
}

TEST(DecoherenceRate, MatchesFiniteDifferenceOfSquaredWidth) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const ClockParams p = testing::random_clock(rng);
    const double n = std::uniform_real_distribution<double>(0.0, p.n_reset)(rng);
    // 2 delta^2 = hbar e^{-rn} / (m omega), differentiated numerically
    const auto twice_var = [&](double t) {
      const double d = width(t, p);
      return 2.0 * d * d;
    };
    const double fd = (twice_var(n + 1e-5) - twice_var(n - 1e-5)) / 2e-5;
    if (p.damping == 0.0) {
      EXPECT_EQ(decoherence_rate(n, p), 0.0);
      continue;
    }
    EXPECT_LT(fd, 0.0);
    EXPECT_NEAR(std::abs(fd) / decoherence_rate(n, p), 1.0, 1e-6);
  }
}

TEST(WidthDampingDerivative, MatchesFiniteDifference) {
  ClockParams p = natural(0.5, 2.0, 1.0);
  const double n = 1.3;
  const auto delta_of_r = [&](double r) {
    ClockParams q = p;
    q.damping = r;
    return width(n, q);
  };
  const double fd = (delta_of_r(0.5 + 1e-5) - delta_of_r(0.5 - 1e-5)) / 2e-5;
  EXPECT_NEAR(width_damping_derivative(n, p), fd, 1e-9);
}

TEST(DampingStationaryPoint, RnEqualsOne) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  const auto pt = damping_stationary_point(10.0, p);
  EXPECT_DOUBLE_EQ(pt.damping, 0.1);
  EXPECT_NEAR(pt.first_derivative, 0.0, 1e-8);
}

TEST(DampingStationaryPoint, IsAMaximumOfSigma) {
  // d2sigma/dr2 at rn = 1 is -n e^{-1} hbar/(m omega) < 0
  const ClockParams p = natural(0.5, 2.0, 1.0);
  const auto pt = damping_stationary_point(1.0, p);
  EXPECT_EQ(pt.kind, StationaryKind::kMaximum);
  EXPECT_NEAR(pt.second_derivative, -std::exp(-1.0), 1e-6);
  EXPECT_EQ(to_string(pt.kind), "maximum");
}

TEST(DampingStationaryPoint, RejectsNonPositiveTime) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_THROW(damping_stationary_point(0.0, p), Error);
  EXPECT_THROW(damping_stationary_point(-3.0, p), Error);
}

TEST(RecommendDamping, Cases) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(recommend_damping(10.0, p), 0.1);
  try {
    recommend_damping(0.4, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnderDampingViolated);
  }
  EXPECT_EQ(recommend_damping(INFINITY, p), 0.0);
  EXPECT_LT(recommend_damping(1e12, p), 1e-11);
}

TEST(RecommendDamping, SaturatesRunningTimeAndStationarity) {
  const ClockParams base = natural(0.5, 2.0, 1.0);
  const double n_reset = 4.0;
  ClockParams p = base;
  p.damping = recommend_damping(n_reset, base);
  p.n_reset = n_reset;
  EXPECT_NO_THROW(validate_clock_params(p));
  EXPECT_DOUBLE_EQ(p.damping * n_reset, 1.0);
  EXPECT_DOUBLE_EQ(damping_stationary_point(n_reset, p).damping, p.damping);
}

TEST(SemiclassicalPosition, Values) {
  const ClockParams p = natural(0.5, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(semiclassical_position(0.5, 0.0, 0.0, p), 1.0);
  EXPECT_NEAR(semiclassical_position(0.5, 1.0, 0.0, p), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(semiclassical_position(0.5, 0.0, 1.2, p), std::exp(-0.3), 1e-15);
  try {
    semiclassical_position(-1.0, 0.5, 0.0, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeRadicand);
  }
}

}  // namespace
}  // namespace pwclock::clock
