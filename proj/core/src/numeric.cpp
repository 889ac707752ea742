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

#include "pwclock/numeric.hpp"

#include <cmath>

#include "pwclock/error.hpp"

namespace pwclock::numeric {

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw Error(ErrorCode::kInvalidGrid, "grid needs at least 2 points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = lo + step * static_cast<double>(k);
  }
  grid.back() = hi;
  return grid;
}

std::vector<double> trapezoid_weights(double lo, double hi, std::size_t points) {
  if (points < 2) throw Error(ErrorCode::kInvalidGrid, "grid needs at least 2 points");
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> weights(points, step);
  weights.front() = 0.5 * step;
  weights.back() = 0.5 * step;
  return weights;
}

double trapezoid(std::span<const double> samples, double step) {
  if (samples.size() < 2) return 0.0;
  double interior = 0.0;
  for (std::size_t k = 1; k + 1 < samples.size(); ++k) interior += samples[k];
  return step * (0.5 * (samples.front() + samples.back()) + interior);
}

double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 std::size_t points) {
  const auto grid = uniform_grid(lo, hi, points);
  std::vector<double> samples(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) samples[k] = f(grid[k]);
  return trapezoid(samples, (hi - lo) / static_cast<double>(points - 1));
}

RootResult find_root_bracketed(const std::function<double(double)>& f, double lo,
                               double hi, double tolerance, int max_iterations) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  RootResult result;
  if (f_lo == 0.0) return {lo, 0, true};
  if (f_hi == 0.0) return {hi, 0, true};
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw Error(ErrorCode::kOutOfRange, "root is not bracketed");
  }

  for (int it = 1; it <= max_iterations; ++it) {
    result.iterations = it;

    // secant (false position) candidate from the current bracket
    double probe = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (probe > lo && probe < hi) {
      const double f_probe = f(probe);
      if (f_probe == 0.0) return {probe, it, true};
      if (std::signbit(f_probe) == std::signbit(f_lo)) {
        lo = probe;
        f_lo = f_probe;
      } else {
        hi = probe;
        f_hi = f_probe;
      }
    }

    if (hi - lo <= tolerance) break;

    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, it, true};
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    if (hi - lo <= tolerance) break;
  }

  result.converged = hi - lo <= tolerance;
  // final secant refinement inside the converged bracket
  const double refined = hi - f_hi * (hi - lo) / (f_hi - f_lo);
  result.root = (refined >= lo && refined <= hi) ? refined : lo + 0.5 * (hi - lo);
  return result;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double second_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace pwclock::numeric
