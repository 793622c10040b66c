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

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace magicdist;

namespace {

constexpr double kPi = std::numbers::pi;

BlochVector conjugated_bloch(const BlochVector& b, const GateOp& g) {
  return bloch_from_density(apply_unitary(density_from_bloch(b), g));
}

}  // namespace

TEST_CASE("pauli gates") {
  CHECK((pauli('X').matrix * pauli('X').matrix - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // X Y = iZ
  Matrix xy = pauli('X').matrix * pauli('Y').matrix;
  CHECK((xy - complexd(0, 1) * sigma_z()).cwiseAbs().maxCoeff() < 1e-12);
  BlochVector b = conjugated_bloch({1, 0, 0}, pauli('Z'));
  CHECK(std::abs(b.x + 1.0) < 1e-12);
  CHECK_THROWS_AS(pauli('Q'), std::invalid_argument);
}

TEST_CASE("clifford generators") {
  GateOp h = clifford_generator("H");
  CHECK((h.matrix * h.matrix - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  GateOp s = clifford_generator("S_ph");
  CHECK((s.matrix * s.matrix - sigma_z()).cwiseAbs().maxCoeff() < 1e-12);
  GateOp cx = clifford_generator("CNOT");
  CHECK((cx.matrix * cx.matrix - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK_THROWS_AS(clifford_generator("T"), std::invalid_argument);
}

TEST_CASE("rotation gates") {
  CHECK((rotation({0, 0, 1}, 0).matrix - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // +X of the gate convention: exp(-i pi sigma_x / 4).
  Matrix px(2, 2);
  const double c = std::cos(kPi / 4);
  px << c, complexd(0, -c), complexd(0, -c), c;
  CHECK((rotation({1, 0, 0}, kPi / 2).matrix - px).cwiseAbs().maxCoeff() <
        1e-12);

  // The preparation axis rotation maps -z onto the negative magic axis.
  const double s = 1.0 / std::sqrt(2.0);
  GateOp prep = rotation({-s, s, 0}, std::acos(1.0 / std::sqrt(3.0)));
  BlochVector out = conjugated_bloch({0, 0, -0.8}, prep);
  CHECK(std::abs(out.x + 0.8 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(out.y + 0.8 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(out.z + 0.8 / std::sqrt(3.0)) < 1e-12);

  CHECK_THROWS_AS(rotation({1, 1, 0}, kPi), std::invalid_argument);
}

TEST_CASE("rotation group structure") {
  const std::array<double, 3> axis = {0.6, 0.0, 0.8};
  Matrix round_trip =
      rotation(axis, 1.3).matrix * rotation(axis, -1.3).matrix;
  CHECK((round_trip - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  // Spinor sign after a full turn.
  CHECK((rotation(axis, 2 * kPi).matrix + Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("z_alpha") {
  CHECK((z_alpha(0).matrix - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((z_alpha(kPi).matrix - complexd(0, -1) * sigma_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  BlochVector b = conjugated_bloch({1, 0, 0}, z_alpha(kPi / 2));
  CHECK(std::abs(b.x) < 1e-12);
  CHECK(std::abs(b.y - 1.0) < 1e-12);
}

TEST_CASE("conjugates_pauli_group") {
  CHECK(conjugates_pauli_group(clifford_generator("H")));
  CHECK(conjugates_pauli_group(clifford_generator("S_ph")));
  CHECK(conjugates_pauli_group(clifford_generator("CNOT")));
  CHECK(conjugates_pauli_group(rotation({1, 0, 0}, kPi / 2)));   // +X
  CHECK(conjugates_pauli_group(rotation({1, 0, 0}, -kPi / 2)));  // -X
  CHECK(conjugates_pauli_group(rotation({0, 1, 0}, kPi / 2)));   // +Y
  CHECK(conjugates_pauli_group(rotation({0, 1, 0}, -kPi / 2)));  // -Y
  CHECK(conjugates_pauli_group(z_alpha(kPi / 2)));
  CHECK_FALSE(conjugates_pauli_group(rotation({1, 0, 0}, kPi / 3)));
  CHECK_FALSE(conjugates_pauli_group(z_alpha(0.3)));
}

TEST_CASE("single-qubit clifford group") {
  const auto& group = single_qubit_cliffords();
  CHECK(group.size() == 24);
  for (const Matrix& u : group) {
    CHECK((u * u.adjoint() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK(conjugates_pauli_group(GateOp(u, {0})));
    Eigen::Matrix3d r = bloch_rotation(u);
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("magic axis alignment") {
  const double s = 1.0 / std::sqrt(3.0);
  AxisAlignment id = magic_axis_alignment({s, s, s});
  Eigen::Vector3d v(s, s, s);
  CHECK(((id.rotation * v) - v).cwiseAbs().maxCoeff() < 1e-10);

  AxisAlignment flip = magic_axis_alignment({-s, -s, s});
  Eigen::Vector3d w(-s, -s, s);
  CHECK(((flip.rotation * w) - v).cwiseAbs().maxCoeff() < 1e-10);
}
