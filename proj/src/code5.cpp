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

#include "magicdist/code5.hpp"

#include <cmath>
#include <stdexcept>

namespace magicdist {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// Basis index of |M, c1, C2, C3, C4> for syndrome pattern i = |M C2 C3 C4>.
int basis_index(int syndrome, int c1_bit) {
  const int m = (syndrome >> 3) & 1;
  const int c2 = (syndrome >> 2) & 1;
  const int c3 = (syndrome >> 1) & 1;
  const int c4 = syndrome & 1;
  return (m << 4) | (c1_bit << 3) | (c2 << 2) | (c3 << 1) | c4;
}

DistillationOutcome decompose(const Matrix& rho_after) {
  DistillationOutcome out;
  for (int i = 0; i < 16; ++i) {
    Eigen::Matrix2cd block;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        block(a, b) = rho_after(basis_index(i, a), basis_index(i, b));
      }
    }
    const double theta = block.trace().real();
    out.theta[i] = theta;
    if (theta > kOutcomeFloor) {
      Eigen::Matrix2cd cond = block / theta;
      out.blochs[i] = BlochVector{(sigma_x() * cond).trace().real(),
                                  (sigma_y() * cond).trace().real(),
                                  (sigma_z() * cond).trace().real()};
    }
  }
  out.theta0 = out.theta[0];
  if (out.blochs[0]) {
    const BlochVector& b = *out.blochs[0];
    out.p_out = (b.x + b.y + b.z) * kInvSqrt3;
  }
  return out;
}

// Records a Clifford circuit while conjugating a set of tracked Pauli
// rows through it.
struct SynthState {
  std::vector<PauliString> rows;
  std::vector<GateOp> gates;

  void h(int q) {
    for (auto& r : rows) r.conj_h(q);
    gates.push_back(hadamard(q));
  }
  void s(int q) {
    for (auto& r : rows) r.conj_s(q);
    gates.push_back(phase_gate(q));
  }
  void x(int q) {
    for (auto& r : rows) r.conj_x(q);
    gates.push_back(pauli('X', q));
  }
  void z(int q) {
    for (auto& r : rows) r.conj_z(q);
    gates.push_back(pauli('Z', q));
  }
  void cx(int control, int target) {
    for (auto& r : rows) r.conj_cnot(control, target);
    gates.push_back(cnot(control, target));
  }
};

PauliString single_z(int q) {
  PauliString p = PauliString::identity(kNumQubits);
  p.z = 1u << q;
  return p;
}

PauliString single_x(int q) {
  PauliString p = PauliString::identity(kNumQubits);
  p.x = 1u << q;
  return p;
}

// Symplectic elimination over the four stabilizers plus the logical
// operators: S_i -> Z on its syndrome qubit, Z_L -> Z_C1, X_L -> X_C1.
DecoderUnitary build_decoder() {
  SynthState sy;
  const StabilizerSet stab = stabilizers();
  sy.rows = {stab.ops[0], stab.ops[1], stab.ops[2], stab.ops[3], logical_z(),
             logical_x()};
  const std::array<int, 5> z_targets = {kSyndromeQubits[0], kSyndromeQubits[1],
                                        kSyndromeQubits[2], kSyndromeQubits[3],
                                        kOutputQubit};
  std::array<bool, kNumQubits> done{};
  for (int i = 0; i < 5; ++i) {
    const int t = z_targets[i];
    for (int q = 0; q < kNumQubits; ++q) {
      if (sy.rows[i].x_bit(q) && sy.rows[i].z_bit(q)) sy.s(q);
    }
    for (int q = 0; q < kNumQubits; ++q) {
      if (sy.rows[i].x_bit(q)) sy.h(q);
    }
    if (!sy.rows[i].z_bit(t)) {
      int pick = -1;
      for (int q = 0; q < kNumQubits; ++q) {
        if (sy.rows[i].z_bit(q) && !done[q]) pick = q;
      }
      if (pick < 0) throw std::logic_error("dependent stabilizer row");
      sy.cx(t, pick);
    }
    for (int q = 0; q < kNumQubits; ++q) {
      if (q != t && sy.rows[i].z_bit(q)) sy.cx(q, t);
    }
    if (sy.rows[i].phase == 2) sy.x(t);
    if (!(sy.rows[i] == single_z(t))) {
      throw std::logic_error("stabilizer row did not reduce to Z");
    }
    done[t] = true;
  }
  // Logical X: clear residual Z factors on the syndrome qubits by
  // multiplying with the reduced stabilizer rows, then fix C1.
  for (int j = 0; j < 4; ++j) {
    if (sy.rows[5].z_bit(z_targets[j])) {
      sy.rows[5] = sy.rows[5] * sy.rows[j];
    }
  }
  if (sy.rows[5].z_bit(kOutputQubit)) sy.s(kOutputQubit);
  if (sy.rows[5].phase == 2) sy.z(kOutputQubit);
  if (!(sy.rows[5] == single_x(kOutputQubit))) {
    throw std::logic_error("logical X row did not reduce to X");
  }

  DecoderUnitary dec;
  dec.gates = sy.gates;

  // Output alignment: decode the pure fixed-point input and pick the
  // single-qubit Clifford that maps the raw output axis onto the magic
  // axis.
  DensityOperator probe = tensor_power(magic_target(), kNumQubits);
  for (const GateOp& g : dec.gates) probe = apply_unitary(probe, g);
  DistillationOutcome raw = decompose(probe.matrix());
  if (!raw.blochs[0]) throw std::logic_error("fixed point lost its support");
  AxisAlignment align = magic_axis_alignment(*raw.blochs[0]);
  dec.gates.push_back(GateOp(align.unitary, {kOutputQubit}, 0.0, "align"));

  Matrix u = Matrix::Identity(1 << kNumQubits, 1 << kNumQubits);
  for (const GateOp& g : dec.gates) {
    u = embed(g.matrix, g.targets, kNumQubits) * u;
  }
  dec.matrix = std::move(u);
  return dec;
}

}  // namespace

Matrix StabilizerSet::matrix(int i) const { return ops.at(i).to_matrix(); }

Matrix StabilizerSet::trivial_projector() const {
  const int dim = 1 << kNumQubits;
  Matrix p = Matrix::Identity(dim, dim);
  for (const auto& s : ops) {
    p = p * 0.5 * (Matrix::Identity(dim, dim) + s.to_matrix());
  }
  return p;
}

StabilizerSet stabilizers() {
  return StabilizerSet{{PauliString::from_label("XZZXI"),
                        PauliString::from_label("IXZZX"),
                        PauliString::from_label("XIXZZ"),
                        PauliString::from_label("ZXIXZ")}};
}

PauliString logical_x() { return PauliString::from_label("XXXXX"); }

PauliString logical_z() { return PauliString::from_label("ZZZZZ"); }

const DecoderUnitary& decoder() {
  static const DecoderUnitary dec = build_decoder();
  return dec;
}

std::pair<double, DensityOperator> distill_projective(
    const DensityOperator& rho_in) {
  if (rho_in.n_qubits() != kNumQubits) {
    throw std::invalid_argument("distillation input must be a 5-qubit state");
  }
  const Matrix proj = stabilizers().trivial_projector();
  Matrix projected = proj * rho_in.matrix() * proj;
  const double success = projected.trace().real();
  if (success < 1e-12) {
    throw std::runtime_error("no trivial-syndrome support in input state");
  }
  DensityOperator post(kNumQubits, projected / success);
  for (const GateOp& g : decoder().gates) post = apply_unitary(post, g);
  return {success, partial_trace(post, {kOutputQubit})};
}

DistillationOutcome distill_decode(const DensityOperator& rho_in) {
  if (rho_in.n_qubits() != kNumQubits) {
    throw std::invalid_argument("distillation input must be a 5-qubit state");
  }
  DensityOperator rho = rho_in;
  for (const GateOp& g : decoder().gates) rho = apply_unitary(rho, g);
  return decompose(rho.matrix());
}

DistillationOutcome decompose_decoded(const DensityOperator& rho_decoded) {
  if (rho_decoded.n_qubits() != kNumQubits) {
    throw std::invalid_argument("decoded state must be a 5-qubit state");
  }
  return decompose(rho_decoded.matrix());
}

namespace {

// Shared pieces of the analytic oracle.
struct OracleTables {
  std::vector<PauliString> group;  // the 16 stabilizer group elements
  PauliString lx, ly, lz;
  Eigen::Vector2cd t_state, t_perp;
  Eigen::Matrix3d alignment;
};

// Raw (theta0, logical Bloch) of the projected state, before alignment.
std::pair<double, Eigen::Vector3d> oracle_raw(double eps,
                                              const OracleTables& tab) {
  double theta0 = 0.0;
  Eigen::Vector3d numer = Eigen::Vector3d::Zero();
  std::vector<Eigen::Vector2cd> qubits(kNumQubits);
  for (int w = 0; w < (1 << kNumQubits); ++w) {
    double weight = 1.0;
    for (int q = 0; q < kNumQubits; ++q) {
      const bool flipped = (w >> q) & 1;
      weight *= flipped ? eps : (1.0 - eps);
      qubits[q] = flipped ? tab.t_perp : tab.t_state;
    }
    if (weight == 0.0) continue;
    double term = 0.0;
    Eigen::Vector3d lterm = Eigen::Vector3d::Zero();
    for (const PauliString& g : tab.group) {
      term += product_state_expectation(g, qubits).real();
      lterm(0) += product_state_expectation(tab.lx * g, qubits).real();
      lterm(1) += product_state_expectation(tab.ly * g, qubits).real();
      lterm(2) += product_state_expectation(tab.lz * g, qubits).real();
    }
    theta0 += weight * term / 16.0;
    numer += weight * lterm / 16.0;
  }
  return {theta0, numer / theta0};
}

const OracleTables& oracle_tables() {
  static const OracleTables tab = [] {
    OracleTables t;
    const StabilizerSet stab = stabilizers();
    for (int mask = 0; mask < 16; ++mask) {
      PauliString g = PauliString::identity(kNumQubits);
      for (int i = 0; i < 4; ++i) {
        if ((mask >> i) & 1) g = g * stab.ops[i];
      }
      t.group.push_back(g);
    }
    t.lx = logical_x();
    t.lz = logical_z();
    t.ly = t.lx * t.lz;
    t.ly.phase = (t.ly.phase + 1) % 4;  // Y_L = i X_L Z_L
    // Eigenvectors of (X+Y+Z)/sqrt(3).
    Matrix m = kInvSqrt3 * (sigma_x() + sigma_y() + sigma_z());
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    t.t_perp = es.eigenvectors().col(0);  // eigenvalue -1
    t.t_state = es.eigenvectors().col(1);
    auto raw = oracle_raw(0.0, t);
    t.alignment = magic_axis_alignment(
                      BlochVector{raw.second(0), raw.second(1), raw.second(2)})
                      .rotation;
    return t;
  }();
  return tab;
}

}  // namespace

OraclePoint distill_oracle(double p_in) {
  if (std::abs(p_in) > 1.0 + 1e-12) {
    throw std::invalid_argument("polarization must lie in [-1, 1]");
  }
  const OracleTables& tab = oracle_tables();
  const double eps = (1.0 - p_in) / 2.0;
  auto [theta0, bloch] = oracle_raw(eps, tab);
  const Eigen::Vector3d aligned = tab.alignment * bloch;
  const double p_out = (aligned(0) + aligned(1) + aligned(2)) * kInvSqrt3;
  return OraclePoint{p_out, theta0};
}

double threshold_locate() {
  double lo = 0.5;
  double hi = 0.9;
  auto f = [](double p) { return distill_oracle(p).p_out - p; };
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<OraclePoint> iterate_distillation(double p_start, int rounds) {
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be >= 1");
  }
  std::vector<OraclePoint> out;
  double p = p_start;
  for (int r = 0; r < rounds; ++r) {
    OraclePoint pt = distill_oracle(p);
    out.push_back(pt);
    p = pt.p_out;
  }
  return out;
}

}  // namespace magicdist
