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

#include "pwclock/timemap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "pwclock/clock.hpp"
#include "pwclock/error.hpp"
#include "pwclock/numeric.hpp"
#include "pwclock/parallel.hpp"

namespace pwclock::timemap {

namespace {

void require_damping(const ClockParams& params) {
  if (!(params.damping > 0.0)) {
    throw Error(ErrorCode::kZeroDamping, "linearized time map needs r > 0");
  }
}

}  // namespace

double monotone_window(const ClockParams& params) {
  const double big_omega = params.damped_frequency();
  return (std::numbers::pi - std::atan(params.damping / (2.0 * big_omega))) / big_omega;
}

double invert_position(double x, const ClockParams& params, double n_max) {
  if (!(n_max < monotone_window(params))) {
    std::ostringstream os;
    os << "<x>(n) is not monotone on [0, " << n_max << "]; window ends at "
       << monotone_window(params);
    throw Error(ErrorCode::kNonMonotonicWindow, os.str());
  }
  const double amp = params.amplitude();
  const double x_min = clock::position_expectation(n_max, params);
  if (!(x <= amp) || !(x >= x_min)) {
    std::ostringstream os;
    os << "reading " << x << " outside attained interval [" << x_min << ", " << amp << "]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  if (x == amp) return 0.0;

  const auto residual = [&](double n) { return clock::position_expectation(n, params) - x; };
  const auto found =
      numeric::find_root_bracketed(residual, 0.0, n_max, kRootTolerance, kRootMaxIterations);
  if (!found.converged) {
    throw Error(ErrorCode::kNumericalFailure, "time-map root finder did not converge");
  }
  return found.root;
}

double n_from_x_exact(double x, const ClockParams& params) {
  if (!(params.n_reset < monotone_window(params))) {
    std::ostringstream os;
    os << "Omega n_reset = " << params.damped_frequency() * params.n_reset
       << " leaves the monotone window of <x>(n)";
    throw Error(ErrorCode::kNonMonotonicWindow, os.str());
  }
  if (!(x > clock::position_expectation(params.n_reset, params))) {
    std::ostringstream os;
    os << "reading " << x << " is not above <x>(n_reset)";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  return invert_position(x, params, params.n_reset);
}

double n_from_x_log(double x, const ClockParams& params) {
  require_damping(params);
  const double amp = params.amplitude();
  if (!(x > 0.0) || !(x <= amp)) {
    throw Error(ErrorCode::kOutOfRange, "log time map needs 0 < x <= A");
  }
  return (2.0 / params.damping) * std::log(amp / x);
}

double n_from_x_linear(double x, const ClockParams& params) {
  require_damping(params);
  const double amp = params.amplitude();
  if (!(x <= amp)) {
    throw Error(ErrorCode::kOutOfRange, "linear time map needs x <= A");
  }
  return 2.0 * (amp - x) / (params.damping * amp);
}

TimeMapResult map_reading(double x, const ClockParams& params) {
  require_damping(params);
  TimeMapResult row;
  row.x = x;
  row.y = params.amplitude() - x;
  row.n_exact = n_from_x_exact(x, params);
  row.n = row.n_exact;
  row.n_log = x > 0.0 ? n_from_x_log(x, params) : std::numeric_limits<double>::quiet_NaN();
  row.n_linear = n_from_x_linear(x, params);
  row.rel_error_linear =
      std::abs(row.n_linear - row.n_exact) / std::max(row.n_exact, kRelativeErrorFloor);
  return row;
}

std::vector<TimeMapResult> linearization_report(const ClockParams& params,
                                                std::size_t grid_size) {
  require_damping(params);
  if (grid_size < 2) {
    throw Error(ErrorCode::kInvalidGrid, "linearization report needs grid_size >= 2");
  }
  std::vector<TimeMapResult> rows(grid_size);
  const double step = params.n_reset / static_cast<double>(grid_size);
  parallel_for(grid_size, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double n = step * static_cast<double>(k);
      rows[k] = map_reading(clock::position_expectation(n, params), params);
      rows[k].n = n;
    }
  });
  return rows;
}

}  // namespace pwclock::timemap
