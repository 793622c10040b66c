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

#include <cstdint>
#include <string>
#include <vector>

#include "magicdist/state.hpp"

namespace magicdist {

/// Symbolic n-qubit Pauli operator  i^phase * prod_q X_q^{x_q} Z_q^{z_q}.
///
/// Bit q of the x/z words refers to qubit q (qubit 0 is the most
/// significant tensor factor, matching DensityOperator indexing).
struct PauliString {
  int n{1};
  uint32_t x{0};
  uint32_t z{0};
  int phase{0};  // exponent of i, mod 4

  static PauliString identity(int n_qubits);
  /// Label such as "XZZXI"; character j names the factor on qubit j.
  static PauliString from_label(const std::string& label);

  bool x_bit(int q) const { return (x >> q) & 1u; }
  bool z_bit(int q) const { return (z >> q) & 1u; }

  PauliString operator*(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  bool commutes_with(const PauliString& other) const;
  bool is_hermitian() const;
  std::string label() const;  // sign prefix plus one letter per qubit
  Matrix to_matrix() const;

  // In-place conjugation P -> g P g† by Clifford gates.
  void conj_h(int q);
  void conj_s(int q);  // diag(1, i)
  void conj_x(int q);
  void conj_z(int q);
  void conj_cnot(int control, int target);
};

/// <psi| P |psi> for a product state given as one 2-vector per qubit.
complexd product_state_expectation(const PauliString& p,
                                   const std::vector<Eigen::Vector2cd>& qubits);

}  // namespace magicdist
