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

#include <array>
#include <string>
#include <vector>

#include "magicdist/state.hpp"

namespace magicdist {

/// A k-qubit unitary bound to an ordered target list, with a nominal
/// duration used for noise interleaving. Global phase is preserved.
struct GateOp {
  Matrix matrix;
  std::vector<int> targets;
  double duration{0.0};
  std::string label;

  GateOp(Matrix m, std::vector<int> t, double dur = 0.0, std::string lbl = "");

  int arity() const { return static_cast<int>(targets.size()); }
};

GateOp pauli(char name, int target = 0);
GateOp hadamard(int target = 0);
GateOp phase_gate(int target = 0);  // S_ph = diag(1, i)
GateOp cnot(int control = 0, int target = 1);
/// One of "H", "S_ph", "CNOT".
GateOp clifford_generator(const std::string& name);

/// exp(-i angle (axis . sigma)/2); axis must be unit length.
GateOp rotation(const std::array<double, 3>& axis, double angle,
                int target = 0);
/// diag(e^{-i alpha/2}, e^{i alpha/2}).
GateOp z_alpha(double alpha, int target = 0);

DensityOperator apply_unitary(const DensityOperator& rho, const GateOp& g);

/// True iff U maps every Pauli string to a Pauli string times a phase
/// in {±1, ±i}. Exhaustive; supports up to 3-qubit gates.
bool conjugates_pauli_group(const GateOp& u);

/// The 24 single-qubit Clifford unitaries (phase-normalized), generated
/// by closure over H and S_ph in a deterministic order.
const std::vector<Matrix>& single_qubit_cliffords();

/// SO(3) action of a single-qubit unitary on Bloch vectors.
Eigen::Matrix3d bloch_rotation(const Matrix& u);

struct AxisAlignment {
  Matrix unitary;
  Eigen::Matrix3d rotation;
  int index;  // position in single_qubit_cliffords()
};

/// The Clifford whose Bloch rotation best aligns `b` with the magic axis
/// (1,1,1)/sqrt(3). Ties break toward the lowest enumeration index.
AxisAlignment magic_axis_alignment(const BlochVector& b);

}  // namespace magicdist
