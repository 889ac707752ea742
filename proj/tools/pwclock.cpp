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

// pwclock <experiment|all> [--config <path>] [--out <dir>] [--grid N]
//         [--sweep param=v1,v2,...]
//
// Exit status: 0 success, 1 validation or numerical failure, 2 I/O failure.
// Failures print a JSON error object on stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwclock/error.hpp"
#include "pwclock/experiment.hpp"

namespace {

using pwclock::Error;
using pwclock::ErrorCode;
namespace ex = pwclock::experiment;

int report(ErrorCode code, const std::string& message) {
  const nlohmann::json error = {
      {"error", {{"code", std::string(pwclock::to_string(code))}, {"message", message}}}};
  std::cerr << error.dump() << '\n';
  return code == ErrorCode::kIo ? 2 : 1;
}

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::kInvalidConfig, "--sweep expects param=v1,v2,...");
  }
  SweepSpec spec;
  spec.parameter = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string token = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!token.empty()) {
      try {
        std::size_t used = 0;
        spec.values.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidConfig, "sweep value '" + token + "' is not a number");
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional-probability clock experiments"};
  app.set_version_flag("--version", std::string(ex::library_version()));

  std::string experiment_name;
  std::string config_path;
  std::string out_dir;
  std::optional<std::size_t> grid;
  std::string sweep_text;

  std::vector<std::string> names{"all"};
  for (const auto e : ex::kAllExperiments) names.emplace_back(ex::to_string(e));

  app.add_option("experiment", experiment_name, "Experiment to run, or 'all'")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_dir, "Output directory (overrides output_path)");
  app.add_option("--grid", grid, "Grid size (overrides grid_size)");
  app.add_option("--sweep", sweep_text, "Sweep one parameter: param=v1,v2,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    ex::ExperimentConfig config =
        config_path.empty() ? ex::ExperimentConfig{} : ex::load_config(config_path);
    const bool bundle = experiment_name == "all";
    if (!bundle) config.experiment = *ex::parse_experiment(experiment_name);
    if (!out_dir.empty()) config.output_path = out_dir;
    if (grid) config.grid_size = *grid;

    if (!sweep_text.empty()) {
      const SweepSpec spec = parse_sweep(sweep_text);
      const auto entries = ex::sweep(config, spec.parameter, spec.values, bundle);
      bool all_ok = true;
      for (const auto& entry : entries) {
        std::cout << spec.parameter << '=' << ex::format_double(entry.value) << ' '
                  << (entry.ok ? "ok" : "error " + entry.error_code) << ' '
                  << entry.directory.string() << '\n';
        all_ok = all_ok && entry.ok;
      }
      return all_ok ? 0 : 1;
    }

    if (bundle) {
      for (const auto& output : ex::run_bundle(config)) {
        std::cout << output.csv_path.string() << '\n';
      }
    } else {
      std::cout << ex::run(config).csv_path.string() << '\n';
    }
    return 0;
  } catch (const Error& e) {
    return report(e.code(), e.what());
  } catch (const std::exception& e) {
    return report(ErrorCode::kNumericalFailure, e.what());
  }
}
