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

#include "magicdist/gates.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "magicdist/pauli_string.hpp"

namespace magicdist {

namespace {

void check_gate(const Matrix& m, const std::vector<int>& targets) {
  const int k = static_cast<int>(targets.size());
  if (k == 0) {
    throw std::invalid_argument("gate needs at least one target");
  }
  if (std::set<int>(targets.begin(), targets.end()).size() != targets.size()) {
    throw std::invalid_argument("gate targets must be distinct");
  }
  if (m.rows() != (1 << k) || m.cols() != (1 << k)) {
    throw std::invalid_argument("gate matrix dimension mismatch");
  }
  if ((m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-10) {
    throw std::invalid_argument("gate matrix is not unitary");
  }
}

// Phase-normalize: rotate so the first nonzero entry is real positive.
Matrix phase_canonical(Matrix u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      if (std::abs(u(r, c)) > 1e-8) {
        return u * (std::conj(u(r, c)) / std::abs(u(r, c)));
      }
    }
  }
  return u;
}

std::string matrix_key(const Matrix& u) {
  std::string key;
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      long re = std::lround(u(r, c).real() * 1e6);
      long im = std::lround(u(r, c).imag() * 1e6);
      key += std::to_string(re) + "," + std::to_string(im) + ";";
    }
  }
  return key;
}

}  // namespace

GateOp::GateOp(Matrix m, std::vector<int> t, double dur, std::string lbl)
    : matrix(std::move(m)),
      targets(std::move(t)),
      duration(dur),
      label(std::move(lbl)) {
  check_gate(matrix, targets);
}

GateOp pauli(char name, int target) {
  switch (name) {
    case 'I':
      return GateOp(identity2(), {target}, 0.0, "I");
    case 'X':
      return GateOp(sigma_x(), {target}, 0.0, "X");
    case 'Y':
      return GateOp(sigma_y(), {target}, 0.0, "Y");
    case 'Z':
      return GateOp(sigma_z(), {target}, 0.0, "Z");
    default:
      throw std::invalid_argument("unknown Pauli name");
  }
}

GateOp hadamard(int target) {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return GateOp(std::move(m), {target}, 0.0, "H");
}

GateOp phase_gate(int target) {
  Matrix m(2, 2);
  m << 1, 0, 0, complexd(0, 1);
  return GateOp(std::move(m), {target}, 0.0, "S_ph");
}

GateOp cnot(int control, int target) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return GateOp(std::move(m), {control, target}, 0.0, "CNOT");
}

GateOp clifford_generator(const std::string& name) {
  if (name == "H") return hadamard();
  if (name == "S_ph") return phase_gate();
  if (name == "CNOT") return cnot();
  throw std::invalid_argument("unknown Clifford generator name");
}

GateOp rotation(const std::array<double, 3>& axis, double angle, int target) {
  const double norm =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("rotation axis must be a unit vector");
  }
  const complexd i(0, 1);
  Matrix m = std::cos(angle / 2) * identity2() -
             i * std::sin(angle / 2) *
                 (axis[0] * sigma_x() + axis[1] * sigma_y() +
                  axis[2] * sigma_z());
  return GateOp(std::move(m), {target}, 0.0, "R");
}

GateOp z_alpha(double alpha, int target) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(complexd(0, -alpha / 2));
  m(1, 1) = std::exp(complexd(0, alpha / 2));
  return GateOp(std::move(m), {target}, 0.0, "Z_alpha");
}

DensityOperator apply_unitary(const DensityOperator& rho, const GateOp& g) {
  return apply_matrix(rho, g.matrix, g.targets);
}

bool conjugates_pauli_group(const GateOp& u) {
  const int k = u.arity();
  if (k > 3) {
    throw std::invalid_argument("conjugates_pauli_group supports <= 3 qubits");
  }
  const int dim = 1 << k;
  const int strings = 1 << (2 * k);
  for (int code = 1; code < strings; ++code) {
    PauliString p = PauliString::identity(k);
    p.x = static_cast<uint32_t>(code & (dim - 1));
    p.z = static_cast<uint32_t>(code >> k);
    Matrix conj = u.matrix * p.to_matrix() * u.matrix.adjoint();
    // Find the unique Pauli with unit overlap, then verify the phase.
    bool matched = false;
    for (int q = 0; q < strings && !matched; ++q) {
      PauliString cand = PauliString::identity(k);
      cand.x = static_cast<uint32_t>(q & (dim - 1));
      cand.z = static_cast<uint32_t>(q >> k);
      Matrix cm = cand.to_matrix();
      complexd overlap = (cm.adjoint() * conj).trace() / double(dim);
      if (std::abs(std::abs(overlap) - 1.0) > 1e-9) continue;
      if ((conj - overlap * cm).cwiseAbs().maxCoeff() > 1e-9) continue;
      const bool axis_phase = std::abs(overlap.real()) > 1e-9 !=
                              (std::abs(overlap.imag()) > 1e-9);
      if (!axis_phase) continue;
      matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

const std::vector<Matrix>& single_qubit_cliffords() {
  static const std::vector<Matrix> group = [] {
    std::vector<Matrix> out;
    std::map<std::string, int> seen;
    std::deque<Matrix> queue;
    Matrix id = Matrix::Identity(2, 2);
    queue.push_back(id);
    seen[matrix_key(id)] = 0;
    out.push_back(id);
    const Matrix h = hadamard().matrix;
    const Matrix s = phase_gate().matrix;
    while (!queue.empty()) {
      Matrix u = queue.front();
      queue.pop_front();
      for (const Matrix* g : {&h, &s}) {
        Matrix next = phase_canonical((*g) * u);
        std::string key = matrix_key(next);
        if (!seen.count(key)) {
          seen[key] = static_cast<int>(out.size());
          out.push_back(next);
          queue.push_back(next);
        }
      }
    }
    if (out.size() != 24) {
      throw std::logic_error("single-qubit Clifford closure is not 24");
    }
    return out;
  }();
  return group;
}

Eigen::Matrix3d bloch_rotation(const Matrix& u) {
  const Matrix* sigmas[3] = {&sigma_x(), &sigma_y(), &sigma_z()};
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) =
          0.5 * ((*sigmas[i]) * u * (*sigmas[j]) * u.adjoint()).trace().real();
    }
  }
  return r;
}

AxisAlignment magic_axis_alignment(const BlochVector& b) {
  const auto& group = single_qubit_cliffords();
  const Eigen::Vector3d axis =
      Eigen::Vector3d(1, 1, 1) / std::sqrt(3.0);
  const Eigen::Vector3d v(b.x, b.y, b.z);
  double best = -2.0;
  std::vector<double> scores(group.size());
  std::vector<Eigen::Matrix3d> rotations(group.size());
  for (size_t i = 0; i < group.size(); ++i) {
    rotations[i] = bloch_rotation(group[i]);
    scores[i] = (rotations[i] * v).dot(axis);
    best = std::max(best, scores[i]);
  }
  for (size_t i = 0; i < group.size(); ++i) {
    if (scores[i] >= best - 1e-9) {
      return AxisAlignment{group[i], rotations[i], static_cast<int>(i)};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace magicdist
