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

#include "pwclock/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pwclock/error.hpp"

namespace pwclock {

double ClockParams::damped_frequency() const {
  return std::sqrt(omega * omega - damping * damping / 4.0);
}

double ClockParams::amplitude() const {
  return std::sqrt(2.0 * hbar / (mass * omega)) * alpha.real();
}

double ClockParams::integration_bound() const {
  if (damping <= 0.0) return n_reset;
  return std::min(n_reset, 1.0 / damping);
}

ComplexMatrix SystemSpec::rescaled_hamiltonian(const ClockParams& clock) const {
  if (!(clock.damping > 0.0)) {
    throw Error(ErrorCode::kZeroDamping,
                "rescaled Hamiltonian 2H/(rA) is undefined for r = 0");
  }
  const double amp = clock.amplitude();
  if (!(amp > 0.0)) {
    throw Error(ErrorCode::kNonPositiveAmplitude,
                "rescaled Hamiltonian requires A > 0");
  }
  return hamiltonian * (2.0 / (clock.damping * amp));
}

ClockParams validate_clock_params(const ClockParams& params) {
  auto fail = [](ErrorCode code, const std::string& what) {
    throw Error(code, what);
  };
  if (!(params.hbar > 0.0) || !(params.mass > 0.0) || !(params.omega > 0.0) ||
      !std::isfinite(params.hbar) || !std::isfinite(params.mass) ||
      !std::isfinite(params.omega)) {
    fail(ErrorCode::kNonPositiveScale, "hbar, mass and omega must be positive and finite");
  }
  if (!(params.damping >= 0.0) || !std::isfinite(params.damping)) {
    fail(ErrorCode::kNonPositiveScale, "damping must be finite and non-negative");
  }
  if (params.damping / 2.0 >= params.omega) {
    std::ostringstream os;
    os << "under-damping requires r/2 < omega (r = " << params.damping
       << ", omega = " << params.omega << ")";
    fail(ErrorCode::kOverDamped, os.str());
  }
  if (!(params.n_reset > 0.0) || !std::isfinite(params.n_reset)) {
    fail(ErrorCode::kNonPositiveScale, "n_reset must be positive and finite");
  }
  if (params.damping > 0.0 && params.n_reset > 1.0 / params.damping) {
    std::ostringstream os;
    os << "n_reset = " << params.n_reset << " exceeds 1/r = " << 1.0 / params.damping;
    fail(ErrorCode::kResetTooLate, os.str());
  }
  if (!std::isfinite(params.alpha.real()) || !std::isfinite(params.alpha.imag()) ||
      !std::isfinite(params.phase)) {
    fail(ErrorCode::kNonPositiveAmplitude, "alpha and phase must be finite");
  }
  if (!(params.amplitude() > 0.0)) {
    fail(ErrorCode::kNonPositiveAmplitude, "amplitude A requires Re(alpha) > 0");
  }
  return params;
}

SystemSpec validate_system_spec(const SystemSpec& spec) {
  const Eigen::Index d = spec.initial_state.size();
  if (d < 2) {
    throw Error(ErrorCode::kDimensionTooSmall, "system dimension must be at least 2");
  }
  if (spec.hamiltonian.rows() != d || spec.hamiltonian.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "hamiltonian must be d x d with d the length of the initial state");
  }
  if (!spec.hamiltonian.allFinite() || !spec.initial_state.allFinite()) {
    throw Error(ErrorCode::kNotHermitian, "system spec contains non-finite entries");
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      if (std::abs(spec.hamiltonian(i, j) - std::conj(spec.hamiltonian(j, i))) >
          kHermiticityTolerance) {
        std::ostringstream os;
        os << "hamiltonian is not Hermitian at (" << i << ", " << j << ")";
        throw Error(ErrorCode::kNotHermitian, os.str());
      }
    }
  }
  if (std::abs(spec.initial_state.norm() - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os << "initial state norm " << spec.initial_state.norm() << " is not 1";
    throw Error(ErrorCode::kNotNormalized, os.str());
  }
  return spec;
}

SystemSpec default_qubit() {
  SystemSpec spec;
  spec.hamiltonian = ComplexMatrix::Zero(2, 2);
  spec.hamiltonian(0, 0) = 0.5;
  spec.hamiltonian(1, 1) = -0.5;
  spec.initial_state = StateVector::Constant(2, Complex(1.0 / std::sqrt(2.0), 0.0));
  return spec;
}

}  // namespace pwclock
