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

#pragma once

#include <complex>
#include <limits>

#include <Eigen/Core>

namespace pwclock {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Oscillator clock configuration. Natural units (hbar = mass = omega = 1) are
/// the defaults; every formula keeps the symbols so other values work too.
///
/// Only Re(alpha) enters the position expectation. `phase` is a global phase
/// on the wavefunction and never changes a probability.
struct ClockParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double damping = 0.5;  // r, inverse abstract time
  Complex alpha{1.0, 0.0};
  double n_reset = 2.0;  // reset horizon; must not exceed 1/r
  double phase = 0.0;

  /// Omega = sqrt(omega^2 - r^2/4).
  double damped_frequency() const;

  /// A = sqrt(2 hbar / (m omega)) Re(alpha), the undamped amplitude.
  double amplitude() const;

  /// Upper end of the abstract-time integration range, min(n_reset, 1/r).
  double integration_bound() const;
};

/// Finite-dimensional "rest of the Universe": Hermitian generator plus
/// initial state.
struct SystemSpec {
  ComplexMatrix hamiltonian;
  StateVector initial_state;

  Eigen::Index dim() const { return initial_state.size(); }

  /// H~ = 2 H / (r A). Requires r > 0 and A > 0.
  ComplexMatrix rescaled_hamiltonian(const ClockParams& clock) const;
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-12;

/// Returns `params` unchanged or throws Error with one of OverDamped,
/// ResetTooLate, NonPositiveAmplitude, NonPositiveScale.
ClockParams validate_clock_params(const ClockParams& params);

/// Returns `spec` unchanged or throws Error with one of NotHermitian,
/// NotNormalized, DimensionTooSmall, DimensionMismatch.
SystemSpec validate_system_spec(const SystemSpec& spec);

/// Qubit with H = diag(+1/2, -1/2) and initial state (1, 1)/sqrt(2).
SystemSpec default_qubit();

}  // namespace pwclock
