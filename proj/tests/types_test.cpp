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

#include "pwclock/types.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "pwclock/error.hpp"

namespace pwclock {
namespace {

ClockParams make_clock(double r, double n_reset, double alpha_re = 1.0) {
  ClockParams p;
  p.damping = r;
  p.n_reset = n_reset;
  p.alpha = {alpha_re, 0.0};
  return p;
}

ErrorCode clock_error(const ClockParams& p) {
  try {
    validate_clock_params(p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validation to fail";
  return ErrorCode::kNumericalFailure;
}

ErrorCode system_error(const SystemSpec& s) {
  try {
    validate_system_spec(s);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validation to fail";
  return ErrorCode::kNumericalFailure;
}

TEST(ValidateClockParams, AcceptsUnderDampedClock) {
  const auto p = make_clock(0.5, 2.0);
  const auto v = validate_clock_params(p);
  EXPECT_EQ(v.damping, p.damping);
  EXPECT_EQ(v.n_reset, p.n_reset);
}

TEST(ValidateClockParams, RejectsOverDamping) {
  EXPECT_EQ(clock_error(make_clock(2.5, 0.4)), ErrorCode::kOverDamped);
  // r/2 == omega is already over the line
  EXPECT_EQ(clock_error(make_clock(2.0, 0.5)), ErrorCode::kOverDamped);
}

TEST(ValidateClockParams, RejectsLateReset) {
  EXPECT_EQ(clock_error(make_clock(0.1, 20.0)), ErrorCode::kResetTooLate);
  EXPECT_NO_THROW(validate_clock_params(make_clock(0.1, 10.0)));
}

TEST(ValidateClockParams, RejectsNonPositiveAmplitude) {
  EXPECT_EQ(clock_error(make_clock(0.5, 2.0, 0.0)), ErrorCode::kNonPositiveAmplitude);
  EXPECT_EQ(clock_error(make_clock(0.5, 2.0, -1.0)), ErrorCode::kNonPositiveAmplitude);
}

TEST(ValidateClockParams, RejectsNonPositiveScales) {
  auto p = make_clock(0.5, 2.0);
  p.mass = 0.0;
  EXPECT_EQ(clock_error(p), ErrorCode::kNonPositiveScale);
  p = make_clock(0.5, 2.0);
  p.omega = -1.0;
  EXPECT_EQ(clock_error(p), ErrorCode::kNonPositiveScale);
  p = make_clock(0.5, 2.0);
  p.hbar = std::nan("");
  EXPECT_EQ(clock_error(p), ErrorCode::kNonPositiveScale);
}

TEST(ValidateClockParams, UndampedClockNeedsFiniteHorizon) {
  EXPECT_NO_THROW(validate_clock_params(make_clock(0.0, 50.0)));
  EXPECT_EQ(clock_error(make_clock(0.0, INFINITY)), ErrorCode::kNonPositiveScale);
}

TEST(ValidateClockParams, IsIdempotent) {
  const auto once = validate_clock_params(make_clock(0.3, 1.5, 0.7));
  const auto twice = validate_clock_params(once);
  EXPECT_EQ(once.damping, twice.damping);
  EXPECT_EQ(once.n_reset, twice.n_reset);
  EXPECT_EQ(once.alpha, twice.alpha);
  EXPECT_EQ(once.damped_frequency(), twice.damped_frequency());
  EXPECT_EQ(once.amplitude(), twice.amplitude());
}

TEST(ClockParams, DerivedQuantities) {
  ClockParams p = make_clock(0.5, 2.0);
  p.hbar = 2.0;
  p.mass = 3.0;
  p.omega = 1.5;
  p.alpha = {0.8, 5.0};  // Im(alpha) does not enter A
  EXPECT_DOUBLE_EQ(p.damped_frequency(), std::sqrt(1.5 * 1.5 - 0.0625));
  EXPECT_DOUBLE_EQ(p.amplitude(), std::sqrt(2.0 * 2.0 / (3.0 * 1.5)) * 0.8);
  EXPECT_DOUBLE_EQ(p.integration_bound(), 2.0);
  p.n_reset = 1.0;
  EXPECT_DOUBLE_EQ(p.integration_bound(), 1.0);
  p.damping = 0.0;
  EXPECT_DOUBLE_EQ(p.integration_bound(), 1.0);
}

TEST(ValidateSystemSpec, AcceptsPauliZOverTwo) {
  EXPECT_NO_THROW(validate_system_spec(default_qubit()));
}

TEST(ValidateSystemSpec, RejectsNonHermitian) {
  auto s = default_qubit();
  s.hamiltonian(0, 1) = {0.3, 0.1};
  s.hamiltonian(1, 0) = {0.3, 0.1};  // should be the conjugate
  EXPECT_EQ(system_error(s), ErrorCode::kNotHermitian);
  s = default_qubit();
  s.hamiltonian(0, 0) = {0.5, 1e-6};  // complex diagonal
  EXPECT_EQ(system_error(s), ErrorCode::kNotHermitian);
}

TEST(ValidateSystemSpec, RejectsUnnormalizedState) {
  auto s = default_qubit();
  s.initial_state = StateVector::Constant(2, Complex(1.0, 0.0));
  EXPECT_EQ(system_error(s), ErrorCode::kNotNormalized);
}

TEST(ValidateSystemSpec, RejectsTinyOrMismatchedDimension) {
  SystemSpec s;
  s.hamiltonian = ComplexMatrix::Zero(1, 1);
  s.initial_state = StateVector::Ones(1);
  EXPECT_EQ(system_error(s), ErrorCode::kDimensionTooSmall);
  s = default_qubit();
  s.hamiltonian = ComplexMatrix::Zero(3, 3);
  EXPECT_EQ(system_error(s), ErrorCode::kDimensionMismatch);
}

TEST(SystemSpec, RescaledHamiltonian) {
  const auto s = default_qubit();
  const ClockParams p = make_clock(0.5, 2.0);
  const double scale = 2.0 / (0.5 * p.amplitude());
  EXPECT_TRUE(s.rescaled_hamiltonian(p).isApprox(s.hamiltonian * scale));
  EXPECT_THROW(s.rescaled_hamiltonian(make_clock(0.0, 2.0)), Error);
}

}  // namespace
}  // namespace pwclock
