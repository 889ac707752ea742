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

#include <benchmark/benchmark.h>

#include <cmath>

#include "pwclock/clock.hpp"
#include "pwclock/pw.hpp"
#include "pwclock/timemap.hpp"

namespace {

pwclock::ClockParams narrow_clock() {
  pwclock::ClockParams p;
  p.mass = 1e4;
  p.omega = 1.0;
  p.damping = 0.1;
  p.n_reset = 1.5;
  p.alpha = {std::sqrt(p.mass * p.omega / 2.0), 0.0};
  return p;
}

}  // namespace

static void BuildHistoryState(benchmark::State& state) {
  const auto spec = pwclock::default_qubit();
  const auto params = narrow_clock();
  const auto grid = static_cast<std::size_t>(state.range());
  for (auto _ : state) {
    auto history = pwclock::pw::build_history_state(spec, params, grid);
    benchmark::DoNotOptimize(history.norm);
  }
  state.SetComplexityN(state.range());
}
BENCHMARK(BuildHistoryState)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void ConditionalProbability(benchmark::State& state) {
  const auto params = narrow_clock();
  const auto history = pwclock::pw::build_history_state(
      pwclock::default_qubit(), params, static_cast<std::size_t>(state.range()));
  const double x = pwclock::clock::position_expectation(0.5, params);
  const pwclock::ComplexMatrix plus = pwclock::ComplexMatrix::Constant(2, 2, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pwclock::pw::conditional_system_probability(history, x, plus));
  }
  state.SetComplexityN(state.range());
}
BENCHMARK(ConditionalProbability)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void ExactTimeMap(benchmark::State& state) {
  const auto params = narrow_clock();
  const double x = pwclock::clock::position_expectation(0.8, params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pwclock::timemap::n_from_x_exact(x, params));
  }
}
BENCHMARK(ExactTimeMap);

static void Posterior(benchmark::State& state) {
  const auto params = narrow_clock();
  const double x = pwclock::clock::position_expectation(0.5, params);
  for (auto _ : state) {
    auto post = pwclock::pw::posterior_over_n(x, params, static_cast<std::size_t>(state.range()));
    benchmark::DoNotOptimize(post.norm_raw);
  }
  state.SetComplexityN(state.range());
}
BENCHMARK(Posterior)->RangeMultiplier(4)->Range(512, 8192)->Complexity();

BENCHMARK_MAIN();
