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

#include "pwclock/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "pwclock/clock.hpp"
#include "pwclock/error.hpp"
#include "pwclock/parallel.hpp"
#include "pwclock/pw.hpp"
#include "pwclock/system.hpp"
#include "pwclock/timemap.hpp"

#ifndef PWCLOCK_VERSION
#define PWCLOCK_VERSION "0.0.0"
#endif

namespace pwclock::experiment {

using json = nlohmann::json;

namespace {

constexpr std::array<double, 4> kIdealLimitScales{1e1, 1e2, 1e3, 1e4};

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorCode::kInvalidConfig, message);
}

Complex parse_complex(const json& value, const std::string& where) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    config_error(where + ": expected a number or an [re, im] pair");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

double get_number(const json& object, const char* key, double fallback) {
  if (!object.contains(key)) return fallback;
  if (!object[key].is_number()) config_error(std::string(key) + " must be a number");
  return object[key].get<double>();
}

void reject_unknown(const json& object, std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& item : object.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      config_error("unknown key '" + item.key() + "' in " + where);
    }
  }
}

ClockSettings parse_clock(const json& object) {
  if (!object.is_object()) config_error("clock must be an object");
  reject_unknown(object, {"hbar", "mass", "omega", "damping", "r", "n_reset", "alpha", "phase"},
                 "clock");
  ClockSettings clock;
  clock.hbar = get_number(object, "hbar", clock.hbar);
  clock.mass = get_number(object, "mass", clock.mass);
  clock.omega = get_number(object, "omega", clock.omega);
  if (object.contains("damping")) clock.damping = get_number(object, "damping", 0.0);
  if (object.contains("r")) clock.damping = get_number(object, "r", 0.0);
  if (object.contains("n_reset")) clock.n_reset = get_number(object, "n_reset", 0.0);
  if (object.contains("alpha")) clock.alpha = parse_complex(object["alpha"], "clock.alpha");
  clock.phase = get_number(object, "phase", clock.phase);
  return clock;
}

SystemSpec parse_system(const json& object) {
  if (!object.is_object()) config_error("system must be an object");
  reject_unknown(object, {"dim", "hamiltonian", "initial_state"}, "system");
  if (!object.contains("hamiltonian") || !object.contains("initial_state")) {
    config_error("system needs hamiltonian and initial_state");
  }
  const auto& state = object["initial_state"];
  if (!state.is_array()) config_error("system.initial_state must be a list");
  const auto d = static_cast<Eigen::Index>(state.size());
  if (object.contains("dim") &&
      (!object["dim"].is_number_integer() || object["dim"].get<Eigen::Index>() != d)) {
    config_error("system.dim does not match initial_state length");
  }
  const auto& matrix = object["hamiltonian"];
  if (!matrix.is_array() || static_cast<Eigen::Index>(matrix.size()) != d * d) {
    config_error("system.hamiltonian must hold dim*dim row-major entries");
  }
  SystemSpec spec;
  spec.initial_state.resize(d);
  spec.hamiltonian.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    spec.initial_state(i) = parse_complex(state[static_cast<std::size_t>(i)], "initial_state");
    for (Eigen::Index j = 0; j < d; ++j) {
      spec.hamiltonian(i, j) =
          parse_complex(matrix[static_cast<std::size_t>(i * d + j)], "hamiltonian");
    }
  }
  return spec;
}

std::size_t get_count(const json& object, const char* key, std::size_t fallback) {
  if (!object.contains(key)) return fallback;
  if (!object[key].is_number_integer() || object[key].get<long long>() < 0) {
    config_error(std::string(key) + " must be a non-negative integer");
  }
  return object[key].get<std::size_t>();
}

double spectral_norm(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- experiments

Table clock_profile(const ExperimentConfig& config, const ClockParams& params) {
  Table table;
  table.columns = {"n", "mean_x", "width", "decoherence_rate"};
  const double step = params.n_reset / static_cast<double>(config.grid_size);
  for (std::size_t k = 0; k < config.grid_size; ++k) {
    const double n = step * static_cast<double>(k);
    table.rows.push_back({n, clock::position_expectation(n, params), clock::width(n, params),
                          clock::decoherence_rate(n, params)});
  }
  return table;
}

Table damping_opt(const ExperimentConfig& config, const ClockParams& params) {
  Table table;
  table.columns = {"r", "decoherence_rate", "dsigma_dr", "width", "dwidth_dr"};
  const double n = params.n_reset;
  const double r_max = 2.0 * params.omega;
  ClockParams probe = params;
  for (std::size_t k = 0; k < config.grid_size; ++k) {
    probe.damping = r_max * static_cast<double>(k + 1) / static_cast<double>(config.grid_size + 1);
    const double rn = probe.damping * n;
    const double dsigma_dr =
        params.hbar / (params.mass * params.omega) * std::exp(-rn) * (1.0 - rn);
    table.rows.push_back({probe.damping, clock::decoherence_rate(n, probe), dsigma_dr,
                          clock::width(n, probe), clock::width_damping_derivative(n, probe)});
  }
  const auto point = clock::damping_stationary_point(n, params);
  table.summary = {{"n", n},
                   {"r_star", point.damping},
                   {"dsigma_dr_at_r_star", point.first_derivative},
                   {"d2sigma_dr2_at_r_star", point.second_derivative}};
  table.notes = {{"stationary_kind", std::string(clock::to_string(point.kind))}};
  try {
    table.summary.emplace_back("recommended_damping",
                               clock::recommend_damping(params.n_reset, params));
  } catch (const Error& e) {
    table.notes.emplace_back("recommended_damping", std::string(to_string(e.code())));
  }
  return table;
}

Table timemap_table(const ExperimentConfig& config, const ClockParams& params) {
  Table table;
  table.columns = {"n", "x", "y", "n_exact", "n_log", "n_linear", "rel_error_linear"};
  for (const auto& row : timemap::linearization_report(params, config.grid_size)) {
    table.rows.push_back(
        {row.n, row.x, row.y, row.n_exact, row.n_log, row.n_linear, row.rel_error_linear});
  }
  return table;
}

double default_reading(const ClockParams& params) {
  return clock::position_expectation(0.25 * params.n_reset, params);
}

Table posterior_table(const ExperimentConfig& config, const ClockParams& params) {
  const double x = config.reading.value_or(default_reading(params));
  const auto post = pw::posterior_over_n(x, params, config.grid_size);
  Table table;
  table.columns = {"n", "density"};
  for (std::size_t k = 0; k < post.grid.size(); ++k) {
    table.rows.push_back({post.grid[k], post.density[k]});
  }
  table.summary = {{"x", x}, {"norm_raw", post.norm_raw}, {"upper_bound", post.upper_bound}};
  const auto mode = std::max_element(post.density.begin(), post.density.end());
  table.summary.emplace_back("mode_n", post.grid[static_cast<std::size_t>(mode - post.density.begin())]);
  return table;
}

Table ideal_limit_table(const ExperimentConfig& config, const ClockParams& params) {
  const double x = config.reading.value_or(default_reading(params));
  const double amp = params.amplitude();
  Table table;
  table.columns = {"m_omega", "fraction"};
  for (const double scale : kIdealLimitScales) {
    // vary the mass at fixed omega and fixed amplitude A
    ClockParams narrow = params;
    narrow.mass = scale / params.omega;
    narrow.alpha = {amp * std::sqrt(narrow.mass * narrow.omega / (2.0 * narrow.hbar)),
                    params.alpha.imag()};
    table.rows.push_back(
        {scale, pw::ideal_limit_concentration(x, narrow, config.window, config.grid_size)});
  }
  table.summary = {{"x", x}, {"window", config.window}};
  return table;
}

Table evolve_compare_table(const ExperimentConfig& config, const ClockParams& params) {
  const auto comparison = system::compare_evolutions(config.system, params, config.grid_size);
  Table table;
  table.columns = {"n", "x", "y", "fidelity"};
  if (config.samples > 0) table.columns.emplace_back("fidelity_sampled");
  table.rows.resize(comparison.rows.size());

  const system::Propagator rescaled(config.system.rescaled_hamiltonian(params));
  const double amp = params.amplitude();
  parallel_for(comparison.rows.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& row = comparison.rows[k];
      auto& out = table.rows[k];
      out = {row.n, row.x, row.y, row.fidelity};
      if (config.samples == 0) continue;
      // per-row stream so the result does not depend on the worker split
      std::seed_seq seq{config.seed, static_cast<std::uint64_t>(k)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> reading(row.x, clock::width(row.n, params));
      double total = 0.0;
      for (std::size_t s = 0; s < config.samples; ++s) {
        const double y = std::max(0.0, amp - reading(rng));
        total += system::fidelity(row.state_exact, rescaled.apply(y, config.system.initial_state));
      }
      out.push_back(total / static_cast<double>(config.samples));
    }
  });
  table.summary = {{"worst_fidelity", comparison.worst_fidelity}};
  return table;
}

Table oracle_check_table(const ExperimentConfig& config, const ClockParams& params) {
  const auto history = pw::build_history_state(config.system, params, config.grid_size);
  const Eigen::Index d = config.system.dim();
  const system::Propagator propagator(config.system.hamiltonian);

  Table table;
  table.columns = {"n", "x", "n_exact"};
  for (Eigen::Index a = 0; a < d; ++a) {
    table.columns.push_back("p_history_" + std::to_string(a));
    table.columns.push_back("p_exact_" + std::to_string(a));
  }
  table.columns.emplace_back("max_abs_diff");

  const std::size_t count = std::max<std::size_t>(1, config.readings);
  table.rows.resize(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const double n = (static_cast<double>(j) + 0.5) * params.n_reset / static_cast<double>(count);
      const double x = clock::position_expectation(n, params);
      const double n_exact = timemap::n_from_x_exact(x, params);
      const StateVector exact = propagator.apply(n_exact, config.system.initial_state);
      auto& row = table.rows[j];
      row = {n, x, n_exact};
      double worst = 0.0;
      for (Eigen::Index a = 0; a < d; ++a) {
        ComplexMatrix projector = ComplexMatrix::Zero(d, d);
        projector(a, a) = 1.0;
        const double p_history = pw::conditional_system_probability(history, x, projector);
        const double p_exact = std::norm(exact(a));
        row.push_back(p_history);
        row.push_back(p_exact);
        worst = std::max(worst, std::abs(p_history - p_exact));
      }
      row.push_back(worst);
    }
  });
  table.summary = {{"history_joint_norm", pw::joint_norm(history)}};
  return table;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "cannot create output directory " + dir.string());
  }
}

json config_json(const ExperimentConfig& config) {
  const ClockParams params = config.clock.resolve();
  json clock = {{"hbar", params.hbar},
                {"mass", params.mass},
                {"omega", params.omega},
                {"damping", params.damping},
                {"n_reset", params.n_reset},
                {"alpha", complex_to_json(params.alpha)},
                {"phase", params.phase}};
  const auto d = config.system.dim();
  json hamiltonian = json::array();
  json state = json::array();
  for (Eigen::Index i = 0; i < d; ++i) {
    state.push_back(complex_to_json(config.system.initial_state(i)));
    for (Eigen::Index j = 0; j < d; ++j) {
      hamiltonian.push_back(complex_to_json(config.system.hamiltonian(i, j)));
    }
  }
  json out = {{"experiment", std::string(to_string(config.experiment))},
              {"clock", clock},
              {"system", {{"dim", d}, {"hamiltonian", hamiltonian}, {"initial_state", state}}},
              {"grid_size", config.grid_size},
              {"output_path", config.output_path.string()},
              {"seed", config.seed},
              {"window", config.window},
              {"readings", config.readings},
              {"samples", config.samples}};
  if (config.reading) out["reading"] = *config.reading;
  return out;
}

json number_or_null(double value) {
  return std::isfinite(value) ? json(value) : json(nullptr);
}

}  // namespace

std::string_view library_version() { return PWCLOCK_VERSION; }

std::string_view to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::kClockProfile: return "clock-profile";
    case Experiment::kDampingOpt: return "damping-opt";
    case Experiment::kTimemap: return "timemap";
    case Experiment::kPosterior: return "posterior";
    case Experiment::kIdealLimit: return "ideal-limit";
    case Experiment::kEvolveCompare: return "evolve-compare";
    case Experiment::kOracleCheck: return "oracle-check";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto experiment : kAllExperiments) {
    if (to_string(experiment) == name) return experiment;
  }
  return std::nullopt;
}

ClockParams ClockSettings::resolve() const {
  ClockParams params;
  params.hbar = hbar;
  params.mass = mass;
  params.omega = omega;
  params.alpha = alpha;
  params.phase = phase;
  if (damping && n_reset) {
    params.damping = *damping;
    params.n_reset = *n_reset;
  } else if (n_reset) {
    params.n_reset = *n_reset;
    params.damping = clock::recommend_damping(*n_reset, params);
  } else if (damping) {
    if (!(*damping > 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "r = 0 needs an explicit n_reset");
    }
    params.damping = *damping;
    params.n_reset = 1.0 / *damping;
  } else {
    params.damping = 0.5 * omega;
    params.n_reset = 1.0 / params.damping;
  }
  return validate_clock_params(params);
}

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) config_error("config must be a JSON object");
  reject_unknown(root,
                 {"experiment", "clock", "system", "grid_size", "output_path", "seed", "reading",
                  "window", "readings", "samples"},
                 "config");

  ExperimentConfig config;
  if (root.contains("experiment")) {
    if (!root["experiment"].is_string()) config_error("experiment must be a string");
    const auto name = root["experiment"].get<std::string>();
    const auto parsed = parse_experiment(name);
    if (!parsed) config_error("unknown experiment '" + name + "'");
    config.experiment = *parsed;
  }
  if (root.contains("clock")) config.clock = parse_clock(root["clock"]);
  if (root.contains("system")) config.system = parse_system(root["system"]);
  config.grid_size = get_count(root, "grid_size", config.grid_size);
  if (root.contains("output_path")) {
    if (!root["output_path"].is_string()) config_error("output_path must be a string");
    config.output_path = root["output_path"].get<std::string>();
  }
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) config_error("seed must be an integer");
    config.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("reading")) config.reading = get_number(root, "reading", 0.0);
  config.window = get_number(root, "window", config.window);
  config.readings = get_count(root, "readings", config.readings);
  config.samples = get_count(root, "samples", config.samples);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate_config(const ExperimentConfig& config) {
  if (config.grid_size < kMinGridSize) {
    throw Error(ErrorCode::kInvalidGrid, "grid_size must be at least 16");
  }
  if (!(config.window >= 0.0)) throw Error(ErrorCode::kInvalidConfig, "window must be >= 0");
  config.clock.resolve();
  validate_system_spec(config.system);
}

std::string config_to_json(const ExperimentConfig& config) {
  return config_json(config).dump(2);
}

Table compute(const ExperimentConfig& config) {
  validate_config(config);
  const ClockParams params = config.clock.resolve();
  switch (config.experiment) {
    case Experiment::kClockProfile: return clock_profile(config, params);
    case Experiment::kDampingOpt: return damping_opt(config, params);
    case Experiment::kTimemap: return timemap_table(config, params);
    case Experiment::kPosterior: return posterior_table(config, params);
    case Experiment::kIdealLimit: return ideal_limit_table(config, params);
    case Experiment::kEvolveCompare: return evolve_compare_table(config, params);
    case Experiment::kOracleCheck: return oracle_check_table(config, params);
  }
  throw Error(ErrorCode::kInvalidConfig, "unhandled experiment");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw Error(ErrorCode::kNumericalFailure, "number formatting failed");
  return std::string(buffer.data(), end);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

RunOutput run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = compute(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const ClockParams params = config.clock.resolve();
  json derived = {{"Omega", params.damped_frequency()},
                  {"A", params.amplitude()},
                  {"integration_bound", params.integration_bound()}};
  derived["rescaled_hamiltonian_norm"] =
      params.damping > 0.0 ? number_or_null(spectral_norm(config.system.rescaled_hamiltonian(params)))
                           : json(nullptr);
  json summary = json::object();
  for (const auto& [key, value] : table.summary) summary[key] = number_or_null(value);
  for (const auto& [key, value] : table.notes) summary[key] = value;

  const json meta = {{"schema_version", kCsvSchemaVersion},
                     {"experiment", std::string(to_string(config.experiment))},
                     {"library_version", std::string(library_version())},
                     {"columns", table.columns},
                     {"config", config_json(config)},
                     {"derived", derived},
                     {"summary", summary},
                     {"wall_clock_seconds", seconds}};

  ensure_directory(config.output_path);
  const std::string name(to_string(config.experiment));
  RunOutput output{config.output_path / (name + ".csv"),
                   config.output_path / (name + ".meta.json")};
  write_text(output.csv_path, to_csv(table));
  write_text(output.meta_path, meta.dump(2) + "\n");
  return output;
}

std::vector<RunOutput> run_bundle(const ExperimentConfig& config) {
  std::vector<RunOutput> outputs;
  for (const auto experiment : kAllExperiments) {
    ExperimentConfig one = config;
    one.experiment = experiment;
    outputs.push_back(run(one));
  }
  return outputs;
}

ExperimentConfig with_parameter(const ExperimentConfig& config, std::string_view parameter,
                                double value) {
  ExperimentConfig out = config;
  if (parameter == "r" || parameter == "damping") {
    out.clock.damping = value;
  } else if (parameter == "n_reset") {
    out.clock.n_reset = value;
  } else if (parameter == "mass") {
    out.clock.mass = value;
  } else if (parameter == "omega") {
    out.clock.omega = value;
  } else if (parameter == "grid_size") {
    if (!(value >= 0.0) || value != std::floor(value)) {
      throw Error(ErrorCode::kInvalidConfig, "grid_size sweep values must be integers");
    }
    out.grid_size = static_cast<std::size_t>(value);
  } else {
    throw Error(ErrorCode::kInvalidConfig,
                "parameter '" + std::string(parameter) +
                    "' is not sweepable (r, n_reset, mass, omega, grid_size)");
  }
  return out;
}

std::vector<SweepEntry> sweep(const ExperimentConfig& config, std::string_view parameter,
                              const std::vector<double>& values, bool bundle) {
  if (values.empty()) throw Error(ErrorCode::kNoValues, "sweep needs at least one value");
  with_parameter(config, parameter, values.front());  // rejects unknown names up front

  std::vector<SweepEntry> entries;
  for (const double value : values) {
    SweepEntry entry;
    entry.value = value;
    entry.directory = config.output_path / (std::string(parameter) + "=" + format_double(value));
    try {
      ExperimentConfig one = with_parameter(config, parameter, value);
      one.output_path = entry.directory;
      if (bundle) {
        run_bundle(one);
      } else {
        run(one);
      }
      entry.ok = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIo) throw;
      entry.error_code = std::string(to_string(e.code()));
      entry.error_message = e.what();
    }
    entries.push_back(std::move(entry));
  }

  json index = {{"parameter", std::string(parameter)},
                {"experiment", bundle ? std::string("all") : std::string(to_string(config.experiment))},
                {"runs", json::array()}};
  for (const auto& entry : entries) {
    json run_json = {{"value", entry.value},
                     {"path", entry.directory.string()},
                     {"status", entry.ok ? "ok" : "error"}};
    if (!entry.ok) run_json["error"] = {{"code", entry.error_code}, {"message", entry.error_message}};
    index["runs"].push_back(run_json);
  }
  ensure_directory(config.output_path);
  write_text(config.output_path / "sweep_index.json", index.dump(2) + "\n");
  return entries;
}

}  // namespace pwclock::experiment
