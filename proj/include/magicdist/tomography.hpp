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

/// 16x16 matrix A(k,m) = prod_i (-1)^{k_i m_i} over the 4-bit
/// expansions of k-1 and m-1. Satisfies A = A^T and A*A = 16*I.
using SignMatrix = Eigen::Matrix<int, 16, 16>;

const SignMatrix& sign_matrix();

/// Expectation values of the product operators: index s over
/// {sigma_x, sigma_y, sigma_z, I} placed on C1, and n = 1..16 over the
/// sigma_z-or-identity pattern on the syndrome qubits (M, C2, C3, C4).
struct CoefficientVector {
  // c[s][n-1], s: 0 = x, 1 = y, 2 = z, 3 = I.
  std::array<std::array<double, 16>, 4> c{};
};

/// Exact ensemble readout: C_s(n) = tr(O rho_final) with s on C1 and
/// the n-th sigma_z pattern on the syndrome qubits. The syndrome bit
/// assignment matches the outcome indexing of distill_decode.
CoefficientVector measure_coefficients(const DensityOperator& rho_final);

struct ReconstructionResult {
  std::array<double, 16> theta{};
  std::array<std::optional<BlochVector>, 16> blochs{};
  double theta0{0.0};
  std::optional<double> p_out;
};

inline constexpr double kThetaFloor = 1e-9;

/// Solves C = A x R and divides out the thetas. Near-zero outcomes get
/// undefined Bloch markers rather than amplified noise.
ReconstructionResult reconstruct(const CoefficientVector& c);

/// The ratio estimator theta_0 p_out / theta_0 computed from the
/// trivial-syndrome row of R. Throws when theta_0 is below the floor.
double p_out_as_ratio(const CoefficientVector& c);

}  // namespace magicdist
