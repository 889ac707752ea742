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

#include "pwclock/system.hpp"

#include <algorithm>
#include <cstring>

#include <Eigen/Eigenvalues>

#include "pwclock/clock.hpp"
#include "pwclock/error.hpp"
#include "pwclock/parallel.hpp"

namespace pwclock::system {

namespace {

bool same_bits(const StateVector& a, const StateVector& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), sizeof(Complex) * static_cast<std::size_t>(a.size())) == 0;
}

void require_clock_map(const ClockParams& params) {
  if (!(params.damping > 0.0)) {
    throw Error(ErrorCode::kZeroDamping, "clock-parameterized evolution needs r > 0");
  }
}

}  // namespace

Propagator::Propagator(const ComplexMatrix& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kEigenFailure, "Hermitian eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

StateVector Propagator::apply(double t, const StateVector& psi) const {
  if (t == 0.0) return psi;
  StateVector coefficients = eigenvectors_.adjoint() * psi;
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    coefficients(k) *= std::polar(1.0, eigenvalues_(k) * t);
  }
  return eigenvectors_ * coefficients;
}

double fidelity(const StateVector& a, const StateVector& b) {
  const Complex overlap = a.dot(b);
  return std::norm(overlap) / (a.squaredNorm() * b.squaredNorm());
}

StateVector evolve_exact(const SystemSpec& spec, double n) {
  return Propagator(spec.hamiltonian).apply(n, spec.initial_state);
}

StateVector evolve_via_displacement(const SystemSpec& spec, double y,
                                    const ClockParams& params) {
  require_clock_map(params);
  if (!(y >= 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "clock displacement y = A - x must be >= 0");
  }
  return Propagator(spec.rescaled_hamiltonian(params)).apply(y, spec.initial_state);
}

StateVector evolve_via_clock(const SystemSpec& spec, double x, const ClockParams& params) {
  require_clock_map(params);
  if (!(x <= params.amplitude())) {
    throw Error(ErrorCode::kOutOfRange, "clock reading x exceeds the amplitude A");
  }
  return evolve_via_displacement(spec, params.amplitude() - x, params);
}

ComparisonTable compare_evolutions(const SystemSpec& spec, const ClockParams& params,
                                   std::size_t grid_size) {
  require_clock_map(params);
  if (grid_size < 1) throw Error(ErrorCode::kInvalidGrid, "comparison grid is empty");

  const Propagator exact(spec.hamiltonian);
  const Propagator rescaled(spec.rescaled_hamiltonian(params));
  const double amp = params.amplitude();
  const double step = params.n_reset / static_cast<double>(grid_size);

  ComparisonTable table;
  table.rows.resize(grid_size);
  parallel_for(grid_size, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      auto& row = table.rows[k];
      row.n = step * static_cast<double>(k);
      row.x = clock::position_expectation(row.n, params);
      row.y = amp - row.x;
      row.state_exact = exact.apply(row.n, spec.initial_state);
      row.state_clock = rescaled.apply(row.y, spec.initial_state);
      row.fidelity = fidelity(row.state_exact, row.state_clock);
    }
  });
  for (const auto& row : table.rows) {
    table.worst_fidelity = std::min(table.worst_fidelity, row.fidelity);
  }
  return table;
}

ScalarParameterReport scalar_parameter_check(const SystemSpec& spec,
                                             const ClockParams& params, double x) {
  ScalarParameterReport report;

  const StateVector first = evolve_via_clock(spec, x, params);
  const StateVector second = evolve_via_clock(spec, x, params);
  report.deterministic = same_bits(first, second);

  // the same scalar reached through a copy of its bit pattern, and through y
  double x_copy = 0.0;
  std::memcpy(&x_copy, &x, sizeof x);
  const StateVector via_copy = evolve_via_clock(spec, x_copy, params);
  const StateVector via_y = evolve_via_displacement(spec, params.amplitude() - x, params);
  report.depends_only_on_y = same_bits(first, via_copy) && same_bits(first, via_y);

  std::vector<ComplexMatrix> probes{spec.hamiltonian, spec.rescaled_hamiltonian(params)};
  const Eigen::Index d = spec.dim();
  for (Eigen::Index a = 0; a < d; ++a) {
    ComplexMatrix projector = ComplexMatrix::Zero(d, d);
    projector(a, a) = 1.0;
    probes.push_back(std::move(projector));
  }
  const ComplexMatrix scalar = ComplexMatrix::Identity(d, d) * Complex(x, 0.0);
  for (const auto& op : probes) {
    const double norm = (scalar * op - op * scalar).norm();
    report.max_commutator_norm = std::max(report.max_commutator_norm, norm);
  }
  return report;
}

}  // namespace pwclock::system
