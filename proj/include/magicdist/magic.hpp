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

#include "magicdist/gates.hpp"

namespace magicdist {

/// The 8 T-type or 12 H-type magic-state Bloch vectors.
struct MagicStateSet {
  char kind;  // 'T' or 'H'
  std::vector<BlochVector> states;
};

MagicStateSet t_type_states();
MagicStateSet h_type_states();

/// (1,1,1)/sqrt(3).
BlochVector magic_axis();

/// The T-type target state along the magic axis.
DensityOperator magic_target();

/// 2 tr(rho_M rho) - 1 = (p_x + p_y + p_z)/sqrt(3).
double m_polarization(const DensityOperator& rho);

/// One phase-cycling branch: pi/2 pulse along y on |0><0|, then a pi/2
/// pulse along [cos a', sin a', 0] with a' = a (or pi + a when
/// `shifted`). Returned before the final axis rotation.
DensityOperator prepare_branch(double a, bool shifted);

/// Equal-weight average of the two branches: (1 - sigma_z sin a)/2.
DensityOperator prepare_depolarized(double a);

/// Full faulty-state preparation with phase cycling; a in [pi, 3pi/2].
/// Yields polarization p = -sin a along the magic axis.
DensityOperator prepare_faulty_cycled(double a);

/// Closed form [1 + p(X+Y+Z)/sqrt(3)]/2 for p in [-1, 1].
DensityOperator prepare_faulty_direct(double p);

/// For a state on the magic axis, the mixing weight eps such that
/// rho = (1-eps) rho_M + eps rho_M_perp, i.e. eps = (1-p)/2.
double as_t_mixture(const DensityOperator& rho);

}  // namespace magicdist
