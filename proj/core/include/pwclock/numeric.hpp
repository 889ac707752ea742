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
#include <functional>
#include <span>
#include <vector>

namespace pwclock::numeric {

/// `points` equally spaced samples on [lo, hi], both ends included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// Composite trapezoid weights for `points` equally spaced nodes on [lo, hi].
std::vector<double> trapezoid_weights(double lo, double hi, std::size_t points);

/// Trapezoid rule over samples taken on a uniform grid of spacing `step`.
double trapezoid(std::span<const double> samples, double step);

/// Trapezoid rule for `f` on [lo, hi] with `points` nodes.
double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 std::size_t points);

struct RootResult {
  double root = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Finds a sign change of `f` inside [lo, hi] by bisection, taking a secant
/// step from the current bracket whenever it lands strictly inside. Each
/// iteration also halves the bracket, so the width shrinks at least
/// geometrically. Requires f(lo) and f(hi) of opposite sign (or zero).
RootResult find_root_bracketed(const std::function<double(double)>& f, double lo,
                               double hi, double tolerance = 1e-12,
                               int max_iterations = 200);

/// Central first difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);

/// Central second difference (f(x+h) - 2f(x) + f(x-h)) / h^2.
double second_difference(const std::function<double(double)>& f, double x, double h);

}  // namespace pwclock::numeric
