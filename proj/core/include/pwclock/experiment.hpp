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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pwclock/types.hpp"

namespace pwclock::experiment {

inline constexpr int kCsvSchemaVersion = 1;

std::string_view library_version();

enum class Experiment {
  kClockProfile,
  kDampingOpt,
  kTimemap,
  kPosterior,
  kIdealLimit,
  kEvolveCompare,
  kOracleCheck,
};

inline constexpr std::array<Experiment, 7> kAllExperiments{
    Experiment::kClockProfile, Experiment::kDampingOpt,    Experiment::kTimemap,
    Experiment::kPosterior,    Experiment::kIdealLimit,    Experiment::kEvolveCompare,
    Experiment::kOracleCheck,
};

std::string_view to_string(Experiment experiment);
std::optional<Experiment> parse_experiment(std::string_view name);

/// Clock settings as written in a config. Missing damping / n_reset are
/// filled in by resolve():
///   neither      -> r = omega/2, n_reset = 1/r
///   n_reset only -> r = recommend_damping(n_reset)
///   damping only -> n_reset = 1/r (r = 0 needs an explicit n_reset)
struct ClockSettings {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  std::optional<double> damping;
  std::optional<double> n_reset;
  Complex alpha{1.0, 0.0};
  double phase = 0.0;

  ClockParams resolve() const;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::kClockProfile;
  ClockSettings clock;
  SystemSpec system = default_qubit();
  std::size_t grid_size = 2048;
  std::filesystem::path output_path = "pwclock_out";
  std::uint64_t seed = 0;
  std::optional<double> reading;  // clock reading for posterior / ideal-limit
  double window = 0.05;           // ideal-limit half-width in n
  std::size_t readings = 16;      // oracle-check readings
  std::size_t samples = 0;        // evolve-compare sampled readings per row
};

inline constexpr std::size_t kMinGridSize = 16;

/// Parses a JSON config. Complex numbers are [re, im] pairs; the Hamiltonian
/// is a row-major list of d*d pairs. Throws Error(InvalidConfig).
ExperimentConfig parse_config(std::string_view json_text);

/// Reads and parses a config file. Throws Error(Io) if it cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks grid sizes and resolves/validates clock and system.
void validate_config(const ExperimentConfig& config);

/// Fully resolved config as JSON text.
std::string config_to_json(const ExperimentConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  std::vector<std::pair<std::string, std::string>> notes;
};

/// Computes an experiment's table in memory.
Table compute(const ExperimentConfig& config);

/// Shortest round-trip decimal text for a double ("nan", "inf", "-inf" for
/// non-finite values).
std::string format_double(double value);

/// CSV text with a header row and "\n" line endings.
std::string to_csv(const Table& table);

struct RunOutput {
  std::filesystem::path csv_path;
  std::filesystem::path meta_path;
};

/// Computes the configured experiment and writes <experiment>.csv plus the
/// <experiment>.meta.json sidecar into config.output_path. Numerical and
/// validation failures throw Error; I/O failures throw Error(Io).
RunOutput run(const ExperimentConfig& config);

/// Runs all seven experiments into config.output_path.
std::vector<RunOutput> run_bundle(const ExperimentConfig& config);

inline constexpr std::array<std::string_view, 5> kSweepParameters{
    "r", "n_reset", "mass", "omega", "grid_size"};

struct SweepEntry {
  double value = 0.0;
  std::filesystem::path directory;
  bool ok = false;
  std::string error_code;
  std::string error_message;
};

/// Runs `config` (or the bundle when `bundle` is set) once per value, each
/// into <output_path>/<parameter>=<value>/, then writes
/// <output_path>/sweep_index.json. Throws NoValues for an empty list and
/// InvalidConfig for an unknown parameter; per-value failures are recorded.
std::vector<SweepEntry> sweep(const ExperimentConfig& config, std::string_view parameter,
                              const std::vector<double>& values, bool bundle = false);

/// Applies one sweep value to a copy of the config.
ExperimentConfig with_parameter(const ExperimentConfig& config, std::string_view parameter,
                                double value);

}  // namespace pwclock::experiment
