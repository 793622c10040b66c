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

#include "magicdist/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace magicdist {

namespace {

const complexd kPhases[4] = {complexd(1, 0), complexd(0, 1), complexd(-1, 0),
                             complexd(0, -1)};

// 2x2 factor X^x Z^z.
Eigen::Matrix2cd local_factor(bool x, bool z) {
  Eigen::Matrix2cd m;
  if (x && z) {
    m << 0, -1, 1, 0;  // XZ = -iY
  } else if (x) {
    m << 0, 1, 1, 0;
  } else if (z) {
    m << 1, 0, 0, -1;
  } else {
    m.setIdentity();
  }
  return m;
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 31) {
    throw std::invalid_argument("unsupported qubit count");
  }
  PauliString p;
  p.n = n_qubits;
  return p;
}

PauliString PauliString::from_label(const std::string& label) {
  PauliString p = identity(static_cast<int>(label.size()));
  for (size_t q = 0; q < label.size(); ++q) {
    switch (label[q]) {
      case 'I':
        break;
      case 'X':
        p.x |= 1u << q;
        break;
      case 'Y':
        p.x |= 1u << q;
        p.z |= 1u << q;
        p.phase = (p.phase + 1) % 4;  // Y = i XZ
        break;
      case 'Z':
        p.z |= 1u << q;
        break;
      default:
        throw std::invalid_argument("bad Pauli label character");
    }
  }
  return p;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n != other.n) {
    throw std::invalid_argument("Pauli string size mismatch");
  }
  PauliString p;
  p.n = n;
  p.x = x ^ other.x;
  p.z = z ^ other.z;
  // Reorder Z^{z} X^{other.x}: one sign per overlapping qubit.
  p.phase = (phase + other.phase + 2 * std::popcount(z & other.x)) % 4;
  return p;
}

bool PauliString::commutes_with(const PauliString& other) const {
  int anti = std::popcount(x & other.z) + std::popcount(z & other.x);
  return (anti % 2) == 0;
}

bool PauliString::is_hermitian() const {
  // Each x=z=1 factor contributes XZ = -iY.
  int y_count = std::popcount(x & z);
  return ((phase - y_count) % 2 + 2) % 2 == 0;
}

std::string PauliString::label() const {
  std::string out;
  int eff = ((phase - std::popcount(x & z)) % 4 + 4) % 4;
  static const char* kSign[4] = {"+", "+i", "-", "-i"};
  out += kSign[eff];
  for (int q = 0; q < n; ++q) {
    if (x_bit(q) && z_bit(q)) {
      out += 'Y';
    } else if (x_bit(q)) {
      out += 'X';
    } else if (z_bit(q)) {
      out += 'Z';
    } else {
      out += 'I';
    }
  }
  return out;
}

Matrix PauliString::to_matrix() const {
  // Qubit 0 is the outermost Kronecker factor (most significant bit).
  Matrix m = Matrix::Ones(1, 1) * kPhases[phase % 4];
  for (int q = n - 1; q >= 0; --q) {
    Eigen::Matrix2cd f = local_factor(x_bit(q), z_bit(q));
    Matrix next(m.rows() * 2, m.cols() * 2);
    next.block(0, 0, m.rows(), m.cols()) = f(0, 0) * m;
    next.block(0, m.cols(), m.rows(), m.cols()) = f(0, 1) * m;
    next.block(m.rows(), 0, m.rows(), m.cols()) = f(1, 0) * m;
    next.block(m.rows(), m.cols(), m.rows(), m.cols()) = f(1, 1) * m;
    m = std::move(next);
  }
  return m;
}

void PauliString::conj_h(int q) {
  bool xb = x_bit(q), zb = z_bit(q);
  if (xb && zb) {
    phase = (phase + 2) % 4;  // H (XZ) H = ZX = -XZ
  }
  x = (x & ~(1u << q)) | (uint32_t(zb) << q);
  z = (z & ~(1u << q)) | (uint32_t(xb) << q);
}

void PauliString::conj_s(int q) {
  if (x_bit(q)) {
    // S X S† = i XZ,  S (XZ) S† = i X
    z ^= 1u << q;
    phase = (phase + 1) % 4;
  }
}

void PauliString::conj_x(int q) {
  if (z_bit(q)) phase = (phase + 2) % 4;
}

void PauliString::conj_z(int q) {
  if (x_bit(q)) phase = (phase + 2) % 4;
}

void PauliString::conj_cnot(int control, int target) {
  // X_c -> X_c X_t, Z_t -> Z_c Z_t; no phase in this representation.
  if (x_bit(control)) x ^= 1u << target;
  if (z_bit(target)) z ^= 1u << control;
}

complexd product_state_expectation(const PauliString& p,
                                   const std::vector<Eigen::Vector2cd>& qubits) {
  if (static_cast<int>(qubits.size()) != p.n) {
    throw std::invalid_argument("product state size mismatch");
  }
  complexd acc = kPhases[p.phase % 4];
  for (int q = 0; q < p.n; ++q) {
    Eigen::Matrix2cd f = local_factor(p.x_bit(q), p.z_bit(q));
    acc *= (qubits[q].adjoint() * f * qubits[q])(0, 0);
  }
  return acc;
}

}  // namespace magicdist
