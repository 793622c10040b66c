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

#pragma once

#include "magicdist/code5.hpp"

namespace magicdist {

enum class NoiseMode { None, T2, T2Star, Custom };

/// Per-qubit dephasing times for (M, C1, C2, C3, C4), with the total
/// circuit time split into equal slices between decode gate layers.
struct NoiseConfig {
  NoiseMode mode{NoiseMode::None};
  std::array<double, 5> t2_s{0.84, 1.27, 1.17, 1.19, 1.13};
  double total_time_s{0.1};
  int slices{8};

  static NoiseConfig none();
  static NoiseConfig t2_preset();
  static NoiseConfig t2star_preset();

  void validate() const;
};

/// Phase-damping channel: transverse single-qubit coherences of `qubit`
/// scale by exp(-t/t2); populations are unchanged.
DensityOperator dephase(const DensityOperator& rho, int qubit, double t,
                        double t2);

/// distill_decode with dephasing slices interleaved between gate layers.
DistillationOutcome noisy_distill(double p_in, const NoiseConfig& cfg);

}  // namespace magicdist
