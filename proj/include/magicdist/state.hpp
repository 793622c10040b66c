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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace magicdist {

using complexd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Polarization triple (p_x, p_y, p_z) of a single qubit.
struct BlochVector {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  double norm() const;
};

/// Dense trace-1 Hermitian operator over n qubits.
///
/// Basis indexing is row-major over the computational basis
/// |0...0> ... |1...1> with qubit 0 as the most significant bit.
/// Instances are immutable after construction.
class DensityOperator {
 public:
  DensityOperator(int n_qubits, Matrix m);

  static DensityOperator from_matrix(Matrix m);

  int n_qubits() const { return n_; }
  int dim() const { return 1 << n_; }
  const Matrix& matrix() const { return m_; }

  double purity() const;
  /// Eigenvalues >= -tol.
  bool is_positive_semidefinite(double tol = 1e-9) const;

 private:
  int n_;
  Matrix m_;
};

const Matrix& identity2();
const Matrix& sigma_x();
const Matrix& sigma_y();
const Matrix& sigma_z();

/// (1 + p_x X + p_y Y + p_z Z)/2. Rejects |b| > 1 + 1e-10.
DensityOperator density_from_bloch(const BlochVector& b);

/// p_k = tr(sigma_k rho) for a single-qubit state.
BlochVector bloch_from_density(const DensityOperator& rho);

/// Kronecker product; qubits of `a` become the most significant ones.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
DensityOperator tensor_power(const DensityOperator& a, int k);

/// Embeds a k-qubit matrix onto the named target qubits of an n-qubit
/// register. targets[0] is the most significant bit of u's own index.
Matrix embed(const Matrix& u, const std::vector<int>& targets, int n_qubits);

/// rho -> U rho U† with U a k-qubit unitary embedded on `targets`.
DensityOperator apply_matrix(const DensityOperator& rho, const Matrix& u,
                             const std::vector<int>& targets);

/// Reduced state over the kept qubits; keep[0] is the output MSB.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep);

/// (1/2) sum of singular values of (a - b).
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace magicdist
