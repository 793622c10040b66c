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

#include "magicdist/magic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace magicdist {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

DensityOperator ket0_density() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1;
  return DensityOperator(1, std::move(m));
}

}  // namespace

MagicStateSet t_type_states() {
  MagicStateSet set;
  set.kind = 'T';
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      for (int sz : {1, -1}) {
        set.states.push_back(
            BlochVector{sx * kInvSqrt3, sy * kInvSqrt3, sz * kInvSqrt3});
      }
    }
  }
  return set;
}

MagicStateSet h_type_states() {
  MagicStateSet set;
  set.kind = 'H';
  const double s = 1.0 / std::sqrt(2.0);
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      set.states.push_back(BlochVector{0, a * s, b * s});
      set.states.push_back(BlochVector{b * s, 0, a * s});
      set.states.push_back(BlochVector{a * s, b * s, 0});
    }
  }
  return set;
}

BlochVector magic_axis() { return BlochVector{kInvSqrt3, kInvSqrt3, kInvSqrt3}; }

DensityOperator magic_target() { return density_from_bloch(magic_axis()); }

double m_polarization(const DensityOperator& rho) {
  if (rho.n_qubits() != 1) {
    throw std::invalid_argument("m_polarization needs a one-qubit state");
  }
  return 2.0 * (magic_target().matrix() * rho.matrix()).trace().real() - 1.0;
}

DensityOperator prepare_branch(double a, bool shifted) {
  const double phi = shifted ? kPi + a : a;
  DensityOperator rho = ket0_density();
  rho = apply_unitary(rho, rotation({0, 1, 0}, kPi / 2));
  rho = apply_unitary(rho, rotation({std::cos(phi), std::sin(phi), 0}, kPi / 2));
  return rho;
}

DensityOperator prepare_depolarized(double a) {
  // Phase cycling: the second run inverts the receiver phase, so the
  // branch deviations subtract. The components common to both branches
  // (the transverse ones) cancel; the opposite-sign z components add.
  Matrix m = 0.5 * Matrix::Identity(2, 2) +
             0.5 * (prepare_branch(a, false).matrix() -
                    prepare_branch(a, true).matrix());
  return DensityOperator(1, std::move(m));
}

DensityOperator prepare_faulty_cycled(double a) {
  if (a < kPi - 1e-12 || a > 1.5 * kPi + 1e-12) {
    throw std::invalid_argument("preparation angle must lie in [pi, 3pi/2]");
  }
  DensityOperator rho = prepare_depolarized(a);
  const double s = 1.0 / std::sqrt(2.0);
  return apply_unitary(rho, rotation({-s, s, 0}, std::acos(kInvSqrt3)));
}

DensityOperator prepare_faulty_direct(double p) {
  if (std::abs(p) > 1.0 + 1e-12) {
    throw std::invalid_argument("polarization must lie in [-1, 1]");
  }
  return density_from_bloch(
      BlochVector{p * kInvSqrt3, p * kInvSqrt3, p * kInvSqrt3});
}

double as_t_mixture(const DensityOperator& rho) {
  BlochVector b = bloch_from_density(rho);
  const double p = (b.x + b.y + b.z) * kInvSqrt3;
  const double off = std::sqrt(std::pow(b.x - p * kInvSqrt3, 2) +
                               std::pow(b.y - p * kInvSqrt3, 2) +
                               std::pow(b.z - p * kInvSqrt3, 2));
  if (off > 1e-9) {
    throw std::invalid_argument("Bloch vector is off the magic axis");
  }
  return (1.0 - p) / 2.0;
}

}  // namespace magicdist
