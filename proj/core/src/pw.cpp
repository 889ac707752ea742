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

#include "pwclock/pw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pwclock/clock.hpp"
#include "pwclock/error.hpp"
#include "pwclock/numeric.hpp"
#include "pwclock/parallel.hpp"
#include "pwclock/system.hpp"
#include "pwclock/timemap.hpp"

namespace pwclock::pw {

namespace {

constexpr double kProjectorTolerance = 1e-10;
constexpr double kImaginaryResidue = 1e-9;
constexpr double kNegativeClamp = -1e-12;

// real-valued clock amplitude; the global phase cancels in every ratio
double clock_amplitude(double x, double n, const ClockParams& params) {
  const double delta = clock::width(n, params);
  const double dx = x - clock::position_expectation(n, params);
  return std::pow(2.0 * std::numbers::pi * delta * delta, -0.25) *
         std::exp(-dx * dx / (4.0 * delta * delta));
}

}  // namespace

double position_given_n(double x, double n, const ClockParams& params) {
  return std::norm(clock::wavefunction(x, n, params));
}

PosteriorDensity posterior_over_n(double x, const ClockParams& params,
                                  std::size_t grid_size, std::optional<double> upper_bound) {
  if (grid_size < 2) throw Error(ErrorCode::kInvalidGrid, "posterior grid needs >= 2 points");
  PosteriorDensity post;
  post.x = x;
  post.upper_bound = upper_bound.value_or(params.integration_bound());
  if (!(post.upper_bound > 0.0)) {
    throw Error(ErrorCode::kInvalidGrid, "posterior upper bound must be positive");
  }
  post.grid = numeric::uniform_grid(0.0, post.upper_bound, grid_size);
  post.density.resize(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    post.density[k] = clock::density(x, post.grid[k], params);
  }
  post.norm_raw =
      numeric::trapezoid(post.density, post.upper_bound / static_cast<double>(grid_size - 1));
  if (!(post.norm_raw >= kDegenerateSupport)) {
    std::ostringstream os;
    os << "reading " << x << " is unreachable: raw posterior mass " << post.norm_raw;
    throw Error(ErrorCode::kDegenerateSupport, os.str());
  }
  for (auto& value : post.density) value /= post.norm_raw;
  return post;
}

double ideal_limit_concentration(double x, const ClockParams& params, double window,
                                 std::size_t grid_size) {
  if (!(window >= 0.0)) throw Error(ErrorCode::kOutOfRange, "window must be non-negative");
  if (grid_size < 2) throw Error(ErrorCode::kInvalidGrid, "grid needs >= 2 points");

  // preimage on the whole monotone branch, just inside its turning point
  const double branch_end = std::nextafter(timemap::monotone_window(params), 0.0);
  const double n_x = timemap::invert_position(x, params, branch_end);

  const double upper = params.integration_bound();
  const auto posterior = [&](double n) { return clock::density(x, n, params); };
  const double total = numeric::trapezoid(posterior, 0.0, upper, grid_size);
  if (!(total >= kDegenerateSupport)) {
    throw Error(ErrorCode::kDegenerateSupport, "reading carries no posterior mass");
  }

  const double lo = std::max(0.0, n_x - window);
  const double hi = std::min(upper, n_x + window);
  if (!(hi > lo)) return 0.0;
  if (lo == 0.0 && hi == upper) return 1.0;
  const double inside = numeric::trapezoid(posterior, lo, hi, grid_size);
  return std::clamp(inside / total, 0.0, 1.0);
}

double clock_overlap(double n1, double n2, const ClockParams& params) {
  const double d1 = clock::width(n1, params);
  const double d2 = clock::width(n2, params);
  const double s = d1 * d1 + d2 * d2;
  const double dm = clock::position_expectation(n1, params) -
                    clock::position_expectation(n2, params);
  return std::sqrt(2.0 * d1 * d2 / s) * std::exp(-dm * dm / (4.0 * s));
}

HistoryState build_history_state(const SystemSpec& spec, const ClockParams& params,
                                  std::size_t grid_size) {
  if (grid_size < kMinHistoryGrid) {
    throw Error(ErrorCode::kInvalidGrid, "history state needs grid_size >= 16");
  }
  HistoryState history;
  history.clock_params = params;
  const double upper = params.integration_bound();
  history.grid = numeric::uniform_grid(0.0, upper, grid_size);
  history.weights = numeric::trapezoid_weights(0.0, upper, grid_size);

  const system::Propagator propagator(spec.hamiltonian);
  history.sys_states.resize(grid_size);
  parallel_for(grid_size, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      history.sys_states[k] = propagator.apply(history.grid[k], spec.initial_state);
    }
  });

  history.norm = 1.0;
  const double raw = joint_norm(history);
  if (!(raw > 0.0) || !std::isfinite(raw)) {
    throw Error(ErrorCode::kNumericalFailure, "history state has zero norm");
  }
  history.norm = 1.0 / std::sqrt(raw);
  return history;
}

double joint_norm(const HistoryState& history) {
  const std::size_t count = history.grid.size();
  std::vector<double> row_sums(count, 0.0);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      double row = 0.0;
      for (std::size_t j = 0; j < count; ++j) {
        const double clock_part =
            clock_overlap(history.grid[k], history.grid[j], history.clock_params);
        // real part suffices: the double sum is Hermitian and real in total
        const double sys_part = history.sys_states[k].dot(history.sys_states[j]).real();
        row += history.weights[k] * history.weights[j] * clock_part * sys_part;
      }
      row_sums[k] = row;
    }
  });
  double total = 0.0;
  for (const double row : row_sums) total += row;
  return history.norm * history.norm * total;
}

double conditional_system_probability(const HistoryState& history, double x,
                                      const ComplexMatrix& projector) {
  if (history.sys_states.empty()) {
    throw Error(ErrorCode::kInvalidGrid, "history state is empty");
  }
  const Eigen::Index d = history.sys_states.front().size();
  if (projector.rows() != d || projector.cols() != d) {
    throw Error(ErrorCode::kNotAProjector, "projector dimension does not match the system");
  }
  const double hermitian_gap = (projector - projector.adjoint()).cwiseAbs().maxCoeff();
  const double idempotent_gap = (projector * projector - projector).cwiseAbs().maxCoeff();
  if (!(hermitian_gap <= kProjectorTolerance) || !(idempotent_gap <= kProjectorTolerance)) {
    throw Error(ErrorCode::kNotAProjector, "operator is not a Hermitian idempotent");
  }

  // conditional system state, ascending k
  StateVector conditioned = StateVector::Zero(d);
  for (std::size_t k = 0; k < history.grid.size(); ++k) {
    const double amplitude =
        history.weights[k] * clock_amplitude(x, history.grid[k], history.clock_params);
    if (amplitude != 0.0) conditioned += amplitude * history.sys_states[k];
  }

  const double denominator = conditioned.squaredNorm();
  if (!(denominator >= kDegenerateSupport)) {
    throw Error(ErrorCode::kDegenerateSupport, "clock reading has no support in the history state");
  }
  const Complex numerator = conditioned.dot(projector * conditioned);
  const Complex ratio = numerator / denominator;
  if (std::abs(ratio.imag()) > kImaginaryResidue) {
    throw Error(ErrorCode::kNumericalFailure, "conditional probability has an imaginary part");
  }
  if (ratio.real() < kNegativeClamp) {
    throw Error(ErrorCode::kNumericalFailure, "conditional probability is negative");
  }
  return std::clamp(ratio.real(), 0.0, 1.0);
}

}  // namespace pwclock::pw
