// Copyright 2026 The magicdist authors
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

#include "magicdist/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace magicdist {

NoiseConfig NoiseConfig::none() { return NoiseConfig{}; }

NoiseConfig NoiseConfig::t2_preset() {
  NoiseConfig cfg;
  cfg.mode = NoiseMode::T2;
  cfg.t2_s = {0.84, 1.27, 1.17, 1.19, 1.13};
  return cfg;
}

NoiseConfig NoiseConfig::t2star_preset() {
  NoiseConfig cfg;
  cfg.mode = NoiseMode::T2Star;
  cfg.t2_s = {0.61, 1.04, 0.66, 1.16, 0.84};
  return cfg;
}

void NoiseConfig::validate() const {
  for (double t : t2_s) {
    if (t <= 0) throw std::invalid_argument("dephasing times must be > 0");
  }
  if (total_time_s < 0) {
    throw std::invalid_argument("total circuit time must be >= 0");
  }
  if (slices < 1) throw std::invalid_argument("slicing must be >= 1");
}

DensityOperator dephase(const DensityOperator& rho, int qubit, double t,
                        double t2) {
  if (qubit < 0 || qubit >= rho.n_qubits()) {
    throw std::invalid_argument("dephase qubit index out of range");
  }
  if (t < 0) throw std::invalid_argument("dephase time must be >= 0");
  if (t2 <= 0) throw std::invalid_argument("dephasing time must be > 0");
  const double gamma = std::exp(-t / t2);
  const int shift = rho.n_qubits() - 1 - qubit;
  Matrix m = rho.matrix();
  for (int r = 0; r < rho.dim(); ++r) {
    for (int c = 0; c < rho.dim(); ++c) {
      if (((r >> shift) & 1) != ((c >> shift) & 1)) m(r, c) *= gamma;
    }
  }
  return DensityOperator(rho.n_qubits(), std::move(m));
}

DistillationOutcome noisy_distill(double p_in, const NoiseConfig& cfg) {
  cfg.validate();
  DensityOperator rho = tensor_power(prepare_faulty_direct(p_in), kNumQubits);
  if (cfg.mode == NoiseMode::None) {
    return distill_decode(rho);
  }
  const auto& gates = decoder().gates;
  const size_t n_gates = gates.size();
  const double slice_t = cfg.total_time_s / cfg.slices;
  size_t applied = 0;
  for (int j = 1; j <= cfg.slices; ++j) {
    const size_t upto = n_gates * static_cast<size_t>(j) / cfg.slices;
    for (; applied < upto; ++applied) {
      rho = apply_unitary(rho, gates[applied]);
    }
    for (int q = 0; q < kNumQubits; ++q) {
      rho = dephase(rho, q, slice_t, cfg.t2_s[q]);
    }
  }
  return decompose_decoded(rho);
}

}  // namespace magicdist
