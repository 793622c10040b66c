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

#include "magicdist/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace magicdist {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;

int bit_of(int index, int qubit, int n_qubits) {
  return (index >> (n_qubits - 1 - qubit)) & 1;
}

void check_targets(const std::vector<int>& targets, int n_qubits) {
  if (targets.empty()) {
    throw std::invalid_argument("target list must be nonempty");
  }
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) {
      throw std::invalid_argument("target qubit index out of range");
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument("target qubit indices must be distinct");
    }
  }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityOperator::DensityOperator(int n_qubits, Matrix m)
    : n_(n_qubits), m_(std::move(m)) {
  if (n_ < 1) {
    throw std::invalid_argument("n_qubits must be positive");
  }
  const int d = 1 << n_;
  if (m_.rows() != d || m_.cols() != d) {
    throw std::invalid_argument("matrix dimension does not match qubit count");
  }
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - complexd(1.0, 0.0)) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

DensityOperator DensityOperator::from_matrix(Matrix m) {
  const auto d = m.rows();
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  if ((Eigen::Index(1) << n) != d) {
    throw std::invalid_argument("matrix dimension is not a power of two");
  }
  return DensityOperator(n, std::move(m));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

bool DensityOperator::is_positive_semidefinite(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

const Matrix& identity2() {
  static const Matrix m = Matrix::Identity(2, 2);
  return m;
}

const Matrix& sigma_x() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
  }();
  return m;
}

const Matrix& sigma_y() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << complexd(0, 0), complexd(0, -1), complexd(0, 1), complexd(0, 0);
    return s;
  }();
  return m;
}

const Matrix& sigma_z() {
  static const Matrix m = [] {
    Matrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
  }();
  return m;
}

DensityOperator density_from_bloch(const BlochVector& b) {
  if (b.norm() > 1.0 + 1e-10) {
    throw std::invalid_argument("Bloch vector norm exceeds 1 (unphysical)");
  }
  Matrix m = 0.5 * (identity2() + b.x * sigma_x() + b.y * sigma_y() +
                    b.z * sigma_z());
  return DensityOperator(1, std::move(m));
}

BlochVector bloch_from_density(const DensityOperator& rho) {
  if (rho.n_qubits() != 1) {
    throw std::invalid_argument("bloch_from_density needs a one-qubit state");
  }
  return BlochVector{(sigma_x() * rho.matrix()).trace().real(),
                     (sigma_y() * rho.matrix()).trace().real(),
                     (sigma_z() * rho.matrix()).trace().real()};
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix m(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityOperator(a.n_qubits() + b.n_qubits(), std::move(m));
}

DensityOperator tensor_power(const DensityOperator& a, int k) {
  if (k < 1) {
    throw std::invalid_argument("tensor power requires k >= 1");
  }
  DensityOperator out = a;
  for (int i = 1; i < k; ++i) {
    out = tensor(out, a);
  }
  return out;
}

Matrix embed(const Matrix& u, const std::vector<int>& targets, int n_qubits) {
  check_targets(targets, n_qubits);
  const int k = static_cast<int>(targets.size());
  if (u.rows() != (1 << k) || u.cols() != (1 << k)) {
    throw std::invalid_argument("matrix dimension does not match target count");
  }
  const int dim = 1 << n_qubits;
  Matrix full = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    int a = 0;
    int base = r;
    for (int j = 0; j < k; ++j) {
      a |= bit_of(r, targets[j], n_qubits) << (k - 1 - j);
      base &= ~(1 << (n_qubits - 1 - targets[j]));
    }
    for (int b = 0; b < (1 << k); ++b) {
      int c = base;
      for (int j = 0; j < k; ++j) {
        c |= ((b >> (k - 1 - j)) & 1) << (n_qubits - 1 - targets[j]);
      }
      full(r, c) = u(a, b);
    }
  }
  return full;
}

DensityOperator apply_matrix(const DensityOperator& rho, const Matrix& u,
                             const std::vector<int>& targets) {
  if ((u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-10) {
    throw std::invalid_argument("matrix is not unitary");
  }
  Matrix full = embed(u, targets, rho.n_qubits());
  Matrix m = full * rho.matrix() * full.adjoint();
  return DensityOperator(rho.n_qubits(), std::move(m));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  check_targets(keep, n);
  const int m = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
      traced.push_back(q);
    }
  }
  const int dk = 1 << m;
  const int dt = 1 << static_cast<int>(traced.size());
  auto compose = [&](int kept_bits, int traced_bits) {
    int idx = 0;
    for (int j = 0; j < m; ++j) {
      idx |= ((kept_bits >> (m - 1 - j)) & 1) << (n - 1 - keep[j]);
    }
    for (size_t j = 0; j < traced.size(); ++j) {
      idx |= ((traced_bits >> (traced.size() - 1 - j)) & 1)
             << (n - 1 - traced[j]);
    }
    return idx;
  };
  Matrix out = Matrix::Zero(dk, dk);
  for (int a = 0; a < dk; ++a) {
    for (int b = 0; b < dk; ++b) {
      complexd sum = 0;
      for (int e = 0; e < dt; ++e) {
        sum += rho.matrix()(compose(a, e), compose(b, e));
      }
      out(a, b) = sum;
    }
  }
  return DensityOperator(m, std::move(out));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("trace_distance dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix() - b.matrix(),
                                           Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace magicdist
