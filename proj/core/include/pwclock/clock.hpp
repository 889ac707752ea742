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

#include <string_view>

#include "pwclock/types.hpp"

namespace pwclock::clock {

/// Mean position and Gaussian width of the clock density at abstract time n.
struct ClockMoments {
  double n = 0.0;
  double mean_x = 0.0;
  double width = 0.0;  // standard deviation of |Psi_C(., n)|^2
};

/// Position-space wavefunction of the damped coherent-state clock,
///
///   Psi_C(x, n) = (2 pi delta^2)^(-1/4) exp(-(x - <x>)^2 / (4 delta^2) + i phi),
///
/// with delta = width(n) and <x> = position_expectation(n). The exponent
/// coefficient is e^{+rn} m omega / (2 hbar): the damped oscillator behaves as
/// one with growing mass m e^{rn}, so the packet narrows as the clock runs
/// down. Throws InvalidAbstractTime unless 0 <= n <= n_reset.
Complex wavefunction(double x, double n, const ClockParams& params);

/// |Psi_C(x, n)|^2 without the abstract-time range check. Hot path for the
/// quadrature in pw; callers own the range.
double density(double x, double n, const ClockParams& params);

/// A e^{-rn/2} cos(Omega n).
double position_expectation(double n, const ClockParams& params);

/// e^{-rn/2} sqrt(hbar / (2 m omega)).
double width(double n, const ClockParams& params);

ClockMoments moments(double n, const ClockParams& params);

/// Decoherence rate sigma(n) = r hbar e^{-rn} / (m omega).
///
/// This is the magnitude of d/dn [hbar e^{-rn} / (m omega)] = d(2 delta^2)/dn;
/// the derivative itself is negative because the packet narrows.
double decoherence_rate(double n, const ClockParams& params);

/// d(delta)/dr at fixed n, taken from the width formula:
/// -(n/2) e^{-rn/2} sqrt(hbar / (2 m omega)).
double width_damping_derivative(double n, const ClockParams& params);

enum class StationaryKind { kMaximum, kMinimum, kInflection };

std::string_view to_string(StationaryKind kind);

struct StationaryPoint {
  double damping = 0.0;             // r* = 1/n
  double first_derivative = 0.0;    // central difference of sigma in r at r*
  double second_derivative = 0.0;   // second difference of sigma in r at r*
  StationaryKind kind = StationaryKind::kInflection;
};

inline constexpr double kFirstDifferenceStep = 1e-5;
inline constexpr double kSecondDifferenceStep = 1e-3;

/// Stationary point of sigma(n; r) along r at fixed n, r* = 1/n, classified
/// by the sign of a central second difference. Throws NonPositiveTime for
/// n <= 0. Only hbar, mass and omega are read from `params`.
StationaryPoint damping_stationary_point(double n, const ClockParams& params);

/// r = 1/n_reset. An infinite horizon gives r = 0. Throws
/// UnderDampingViolated if the result breaks r/2 < omega and
/// NonPositiveTime for n_reset <= 0.
double recommend_damping(double n_reset, const ClockParams& params);

/// e^{-rn/2} sqrt(2E/(m omega) + p^2/omega^2) with scalar E and p, using the
/// stored mass as the unevolved mass. Natural units only; the two radicand
/// terms do not share dimensions otherwise. Throws NegativeRadicand.
double semiclassical_position(double energy, double momentum, double n,
                              const ClockParams& params);

}  // namespace pwclock::clock
