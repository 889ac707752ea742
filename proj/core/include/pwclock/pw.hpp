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

#include <cstddef>
#include <optional>
#include <vector>

#include "pwclock/types.hpp"

namespace pwclock::pw {

inline constexpr std::size_t kDefaultGridSize = 2048;
inline constexpr double kDegenerateSupport = 1e-300;

/// |<x|alpha(n)>|^2, the probability density of reading x at abstract time n.
double position_given_n(double x, double n, const ClockParams& params);

/// p(n' | x) on a uniform grid of [0, upper_bound].
struct PosteriorDensity {
  double x = 0.0;
  double upper_bound = 0.0;
  std::vector<double> grid;
  std::vector<double> density;
  /// Unnormalized integral of |<x|alpha(n')>|^2 over n'.
  double norm_raw = 0.0;
};

/// Posterior over abstract time for the reading x. The default upper bound is
/// min(n_reset, 1/r). Throws DegenerateSupport if the raw integral falls below
/// 1e-300 (x unreachable) and ZeroDamping-free: r = 0 integrates to n_reset.
PosteriorDensity posterior_over_n(double x, const ClockParams& params,
                                  std::size_t grid_size = kDefaultGridSize,
                                  std::optional<double> upper_bound = std::nullopt);

/// Posterior mass within |n' - n(x)| <= window. n(x) is the preimage of x on
/// the monotone branch of <x>(n), which may lie beyond the integration bound.
/// Both integrals use `grid_size` trapezoid nodes on their own intervals.
double ideal_limit_concentration(double x, const ClockParams& params, double window,
                                 std::size_t grid_size = kDefaultGridSize);

/// Discretized history state
///
///   |Psi> = norm * sum_k w_k |alpha(n_k)>_C (x) e^{+i H_S n_k} |Psi_in>_S
///
/// with trapezoid weights w_k on [0, min(n_reset, 1/r)].
struct HistoryState {
  std::vector<double> grid;
  std::vector<double> weights;
  std::vector<StateVector> sys_states;
  ClockParams clock_params;
  double norm = 1.0;
};

inline constexpr std::size_t kMinHistoryGrid = 16;

/// Closed-form <alpha(n1)|alpha(n2)> for the Gaussian clock states.
double clock_overlap(double n1, double n2, const ClockParams& params);

/// Builds the history state. The global norm comes from the full Gram sum
/// sum_{k,j} w_k w_j <alpha_k|alpha_j> <s_k|s_j>, accumulated row by row in
/// ascending order.
HistoryState build_history_state(const SystemSpec& spec, const ClockParams& params,
                                 std::size_t grid_size = kDefaultGridSize);

/// <Psi|Psi> including the stored norm; 1 up to rounding after construction.
double joint_norm(const HistoryState& history);

/// Probability that S is found in the range of `projector`, conditioned on the
/// clock reading x. Throws NotAProjector unless `projector` is Hermitian and
/// idempotent to 1e-10, DegenerateSupport when the conditional state vanishes.
double conditional_system_probability(const HistoryState& history, double x,
                                      const ComplexMatrix& projector);

}  // namespace pwclock::pw
