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
#include <vector>

#include "pwclock/types.hpp"

namespace pwclock::timemap {

/// One clock reading mapped back to abstract time three ways.
struct TimeMapResult {
  double n = 0.0;         // abstract time that produced the reading
  double x = 0.0;         // reading, <x>(n)
  double y = 0.0;         // displacement A - x
  double n_exact = 0.0;   // root of <x>(n) = x
  double n_log = 0.0;     // (2/r) ln(A/x); NaN when x <= 0
  double n_linear = 0.0;  // 2y/(rA)
  double rel_error_linear = 0.0;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 200;
inline constexpr double kRelativeErrorFloor = 1e-12;

/// End of the first interval on which <x>(n) = A e^{-rn/2} cos(Omega n)
/// strictly decreases: (pi - atan(r / (2 Omega))) / Omega.
double monotone_window(const ClockParams& params);

/// Inverts <x>(n) = x on [0, n_max]. n_max must lie inside the monotone
/// window (NonMonotonicWindow) and x inside [<x>(n_max), A] (OutOfRange).
double invert_position(double x, const ClockParams& params, double n_max);

/// Exact inversion of the reading on [0, n_reset): bracketed
/// bisection/secant to 1e-12 in n. Throws NonMonotonicWindow when n_reset
/// reaches past the monotone window and OutOfRange for readings outside
/// (<x>(n_reset), A].
double n_from_x_exact(double x, const ClockParams& params);

/// Log form (2/r) ln(A/x), exact for the envelope A e^{-rn/2} alone.
/// ZeroDamping for r = 0, OutOfRange unless 0 < x <= A.
double n_from_x_log(double x, const ClockParams& params);

/// First-order map 2(A - x)/(rA). ZeroDamping for r = 0, OutOfRange for x > A.
double n_from_x_linear(double x, const ClockParams& params);

/// All three recoveries for a single reading.
TimeMapResult map_reading(double x, const ClockParams& params);

/// Rows on the uniform grid n_k = k n_reset / grid_size, k < grid_size.
/// Rows are evaluated concurrently and returned in order of n.
std::vector<TimeMapResult> linearization_report(const ClockParams& params,
                                                std::size_t grid_size);

}  // namespace pwclock::timemap
