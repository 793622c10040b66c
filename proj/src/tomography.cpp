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

#include "magicdist/tomography.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace magicdist {

namespace {

// Observable for C_s(n): s on C1, sigma_z on each syndrome qubit whose
// bit is set in n-1. Bits of n-1 follow the syndrome outcome index:
// M is bit 3, then C2, C3, C4 down to bit 0.
PauliString readout_operator(int s, int n) {
  PauliString p = PauliString::identity(kNumQubits);
  switch (s) {
    case 0:
      p.x |= 1u << kOutputQubit;
      break;
    case 1:
      p.x |= 1u << kOutputQubit;
      p.z |= 1u << kOutputQubit;
      p.phase = 1;
      break;
    case 2:
      p.z |= 1u << kOutputQubit;
      break;
    case 3:
      break;
    default:
      throw std::invalid_argument("bad observable index");
  }
  const int pattern = n - 1;
  for (int i = 0; i < 4; ++i) {
    if ((pattern >> (3 - i)) & 1) p.z |= 1u << kSyndromeQubits[i];
  }
  return p;
}

}  // namespace

const SignMatrix& sign_matrix() {
  static const SignMatrix a = [] {
    SignMatrix m;
    for (int k = 0; k < 16; ++k) {
      for (int j = 0; j < 16; ++j) {
        m(k, j) = (std::popcount(static_cast<unsigned>(k & j)) % 2) ? -1 : 1;
      }
    }
    return m;
  }();
  return a;
}

CoefficientVector measure_coefficients(const DensityOperator& rho_final) {
  if (rho_final.n_qubits() != kNumQubits) {
    throw std::invalid_argument("tomography input must be a 5-qubit state");
  }
  CoefficientVector out;
  for (int s = 0; s < 4; ++s) {
    for (int n = 1; n <= 16; ++n) {
      out.c[s][n - 1] =
          (readout_operator(s, n).to_matrix() * rho_final.matrix())
              .trace()
              .real();
    }
  }
  return out;
}

ReconstructionResult reconstruct(const CoefficientVector& c) {
  const SignMatrix& a = sign_matrix();
  // A^{-1} = A/16.
  std::array<std::array<double, 16>, 4> r{};
  for (int s = 0; s < 4; ++s) {
    for (int k = 0; k < 16; ++k) {
      double sum = 0;
      for (int j = 0; j < 16; ++j) sum += a(k, j) * c.c[s][j];
      r[s][k] = sum / 16.0;
    }
  }
  ReconstructionResult out;
  for (int i = 0; i < 16; ++i) {
    out.theta[i] = r[3][i];
    if (out.theta[i] > kThetaFloor) {
      out.blochs[i] = BlochVector{r[0][i] / out.theta[i],
                                  r[1][i] / out.theta[i],
                                  r[2][i] / out.theta[i]};
    }
  }
  out.theta0 = out.theta[0];
  if (out.blochs[0]) {
    const BlochVector& b = *out.blochs[0];
    out.p_out = (b.x + b.y + b.z) / std::sqrt(3.0);
  }
  return out;
}

double p_out_as_ratio(const CoefficientVector& c) {
  const SignMatrix& a = sign_matrix();
  double rx = 0, ry = 0, rz = 0, theta0 = 0;
  for (int j = 0; j < 16; ++j) {
    rx += a(0, j) * c.c[0][j];
    ry += a(0, j) * c.c[1][j];
    rz += a(0, j) * c.c[2][j];
    theta0 += a(0, j) * c.c[3][j];
  }
  rx /= 16.0;
  ry /= 16.0;
  rz /= 16.0;
  theta0 /= 16.0;
  if (theta0 < kThetaFloor) {
    throw std::runtime_error("theta_0 below floor; ratio undefined");
  }
  return (rx + ry + rz) / (std::sqrt(3.0) * theta0);
}

}  // namespace magicdist
