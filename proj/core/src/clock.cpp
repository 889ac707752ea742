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
#include <limits>
#include <numbers>
#include <sstream>

#include "pwclock/error.hpp"
#include "pwclock/numeric.hpp"

namespace pwclock::clock {

namespace {

void check_abstract_time(double n, const ClockParams& params) {
  if (!(n >= 0.0) || !(n <= params.n_reset)) {
    std::ostringstream os;
    os << "abstract time " << n << " outside [0, " << params.n_reset << "]";
    throw Error(ErrorCode::kInvalidAbstractTime, os.str());
  }
}

// sigma as a function of the damping coefficient at fixed n
double sigma_of_damping(double r, double n, const ClockParams& params) {
  return r * params.hbar * std::exp(-r * n) / (params.mass * params.omega);
}

}  // namespace

double position_expectation(double n, const ClockParams& params) {
  return params.amplitude() * std::exp(-0.5 * params.damping * n) *
         std::cos(params.damped_frequency() * n);
}

double width(double n, const ClockParams& params) {
  return std::exp(-0.5 * params.damping * n) *
         std::sqrt(params.hbar / (2.0 * params.mass * params.omega));
}

ClockMoments moments(double n, const ClockParams& params) {
  return {n, position_expectation(n, params), width(n, params)};
}

double density(double x, double n, const ClockParams& params) {
  const double delta = width(n, params);
  const double dx = x - position_expectation(n, params);
  const double variance = delta * delta;
  return std::exp(-dx * dx / (2.0 * variance)) /
         (delta * std::sqrt(2.0 * std::numbers::pi));
}

Complex wavefunction(double x, double n, const ClockParams& params) {
  check_abstract_time(n, params);
  const double delta = width(n, params);
  const double dx = x - position_expectation(n, params);
  const double norm = std::pow(2.0 * std::numbers::pi * delta * delta, -0.25);
  const double magnitude = norm * std::exp(-dx * dx / (4.0 * delta * delta));
  return std::polar(magnitude, params.phase);
}

double decoherence_rate(double n, const ClockParams& params) {
  return sigma_of_damping(params.damping, n, params);
}

double width_damping_derivative(double n, const ClockParams& params) {
  return -0.5 * n * width(n, params);
}

std::string_view to_string(StationaryKind kind) {
  switch (kind) {
    case StationaryKind::kMaximum: return "maximum";
    case StationaryKind::kMinimum: return "minimum";
    case StationaryKind::kInflection: return "inflection";
  }
  return "unknown";
}

StationaryPoint damping_stationary_point(double n, const ClockParams& params) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kNonPositiveTime, "stationary point needs n > 0");
  }
  const auto sigma = [&](double r) { return sigma_of_damping(r, n, params); };
  StationaryPoint point;
  point.damping = 1.0 / n;
  point.first_derivative =
      numeric::central_difference(sigma, point.damping, kFirstDifferenceStep);
  point.second_derivative =
      numeric::second_difference(sigma, point.damping, kSecondDifferenceStep);
  if (point.second_derivative < 0.0) {
    point.kind = StationaryKind::kMaximum;
  } else if (point.second_derivative > 0.0) {
    point.kind = StationaryKind::kMinimum;
  }
  return point;
}

double recommend_damping(double n_reset, const ClockParams& params) {
  if (!(n_reset > 0.0)) {
    throw Error(ErrorCode::kNonPositiveTime, "n_reset must be positive");
  }
  const double r = std::isinf(n_reset) ? 0.0 : 1.0 / n_reset;
  if (r / 2.0 >= params.omega) {
    std::ostringstream os;
    os << "r = 1/n_reset = " << r << " violates r/2 < omega = " << params.omega;
    throw Error(ErrorCode::kUnderDampingViolated, os.str());
  }
  return r;
}

double semiclassical_position(double energy, double momentum, double n,
                              const ClockParams& params) {
  const double radicand = 2.0 * energy / (params.mass * params.omega) +
                          momentum * momentum / (params.omega * params.omega);
  if (radicand < 0.0) {
    throw Error(ErrorCode::kNegativeRadicand, "2E/(m omega) + p^2/omega^2 is negative");
  }
  return std::exp(-0.5 * params.damping * n) * std::sqrt(radicand);
}

}  // namespace pwclock::clock
