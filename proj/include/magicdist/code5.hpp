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

#include <optional>
#include <utility>

#include "magicdist/magic.hpp"
#include "magicdist/pauli_string.hpp"

namespace magicdist {

// Register order (q0..q4) = (M, C1, C2, C3, C4). C1 carries the
// distilled state; M, C2, C3, C4 carry the syndrome.
inline constexpr int kNumQubits = 5;
inline constexpr int kOutputQubit = 1;
inline constexpr std::array<int, 4> kSyndromeQubits{0, 2, 3, 4};

/// Bloch vectors with probability below this are reported undefined.
inline constexpr double kOutcomeFloor = 1e-12;

struct StabilizerSet {
  std::array<PauliString, 4> ops;

  Matrix matrix(int i) const;
  /// Product of (1 + S_i)/2 over all four generators.
  Matrix trivial_projector() const;
};

/// XZZXI, IXZZX, XIXZZ, ZXIXZ.
StabilizerSet stabilizers();

PauliString logical_x();  // XXXXX
PauliString logical_z();  // ZZZZZ

/// Canonical decoding circuit for the five-qubit code. Conjugates each
/// stabilizer generator to Z on its syndrome qubit, moves the logical
/// qubit onto C1, and ends with the fixed output-alignment Clifford.
struct DecoderUnitary {
  std::vector<GateOp> gates;
  Matrix matrix;  // 32x32 product of the gates
  int output_qubit{kOutputQubit};
  std::array<int, 4> syndrome_qubits{kSyndromeQubits};
};

const DecoderUnitary& decoder();

/// The 16 syndrome-labelled outcomes of the decoded mixture.
/// Index i reads the pattern |M C2 C3 C4> in binary, M most significant.
struct DistillationOutcome {
  std::array<double, 16> theta{};
  std::array<std::optional<BlochVector>, 16> blochs{};
  double theta0{0.0};
  std::optional<double> p_out;
};

/// Trivial-syndrome post-selection: project with the stabilizer
/// projector, decode, return (success probability, distilled state).
/// Throws when the input has no trivial-syndrome support.
std::pair<double, DensityOperator> distill_projective(
    const DensityOperator& rho_in);

/// Decode-then-decompose variant (ensemble readout).
DistillationOutcome distill_decode(const DensityOperator& rho_in);

/// Decomposes an already-decoded 5-qubit state over the 16 syndrome
/// projectors.
DistillationOutcome decompose_decoded(const DensityOperator& rho_decoded);

struct OraclePoint {
  double p_out;
  double theta0;
};

/// Brute-force analytic reference: expands rho^x5 over its 32 pure
/// product terms and evaluates the stabilizer projector termwise with
/// symbolic Pauli arithmetic. No circuit simulation.
OraclePoint distill_oracle(double p_in);

/// The nontrivial fixed point of the oracle map: sqrt(3/7).
double threshold_locate();

/// Feeds p_out back as the next round's input, idealized fresh copies.
std::vector<OraclePoint> iterate_distillation(double p_start, int rounds);

}  // namespace magicdist
