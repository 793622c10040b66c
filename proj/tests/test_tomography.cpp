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

#include <doctest.h>

#include <cmath>

#include "magicdist/noise.hpp"
#include "test_util.hpp"

using namespace magicdist;

namespace {

DensityOperator decoded_input(double p) {
  DensityOperator rho = tensor_power(prepare_faulty_direct(p), kNumQubits);
  return apply_matrix(rho, decoder().matrix, {0, 1, 2, 3, 4});
}

}  // namespace

TEST_CASE("sign matrix structure") {
  const SignMatrix& a = sign_matrix();
  for (int k = 0; k < 16; ++k) {
    CHECK(a(0, k) == 1);
    CHECK(a(k, 0) == 1);
    for (int j = 0; j < 16; ++j) {
      CHECK(std::abs(a(k, j)) == 1);
      CHECK(a(k, j) == a(j, k));
    }
  }
  CHECK(a(1, 1) == -1);
  CHECK(a(3, 3) == 1);   // two shared bits
  CHECK(a(5, 12) == -1);  // 0101 & 1100 share one bit
  SignMatrix sq = a * a;
  CHECK((sq - 16 * SignMatrix::Identity()).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("reconstruction inverts the readout map") {
  for (double p : {0.95, 0.7, 0.4}) {
    DensityOperator decoded = decoded_input(p);
    ReconstructionResult rec = reconstruct(measure_coefficients(decoded));
    DistillationOutcome ref = decompose_decoded(decoded);
    for (int i = 0; i < 16; ++i) {
      CHECK(std::abs(rec.theta[i] - ref.theta[i]) < 1e-10);
      if (ref.blochs[i] && rec.blochs[i]) {
        CHECK(std::abs(rec.blochs[i]->x - ref.blochs[i]->x) < 1e-9);
        CHECK(std::abs(rec.blochs[i]->y - ref.blochs[i]->y) < 1e-9);
        CHECK(std::abs(rec.blochs[i]->z - ref.blochs[i]->z) < 1e-9);
      }
    }
    CHECK(rec.theta0 == doctest::Approx(ref.theta0).epsilon(1e-10));
    REQUIRE(rec.p_out.has_value());
    CHECK(*rec.p_out == doctest::Approx(*ref.p_out).epsilon(1e-9));
  }
}

TEST_CASE("ratio estimator matches the reconstructed polarization") {
  for (double p : {0.9, 0.75}) {
    CoefficientVector c = measure_coefficients(decoded_input(p));
    ReconstructionResult rec = reconstruct(c);
    CHECK(p_out_as_ratio(c) == doctest::Approx(*rec.p_out).epsilon(1e-10));
  }
}

TEST_CASE("reconstruction of a single-syndrome state") {
  // |1 0 0 0 0>: syndrome pattern M=1, output bit 0 -> outcome index 8.
  Matrix m = Matrix::Zero(32, 32);
  m(16, 16) = 1.0;
  ReconstructionResult rec =
      reconstruct(measure_coefficients(DensityOperator(kNumQubits, m)));
  for (int i = 0; i < 16; ++i) {
    if (i == 8) {
      CHECK(rec.theta[i] == doctest::Approx(1.0).epsilon(1e-12));
      REQUIRE(rec.blochs[i].has_value());
      CHECK(rec.blochs[i]->z == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(std::abs(rec.theta[i]) < 1e-12);
      CHECK_FALSE(rec.blochs[i].has_value());
    }
  }
  CHECK(std::abs(rec.theta0) < 1e-12);
  CHECK_FALSE(rec.p_out.has_value());
  CHECK_THROWS_AS(p_out_as_ratio(
                      measure_coefficients(DensityOperator(kNumQubits, m))),
                  std::runtime_error);
}

TEST_CASE("tomography reproduces the noisy pipeline") {
  NoiseConfig cfg = NoiseConfig::t2_preset();
  DensityOperator rho = tensor_power(prepare_faulty_direct(0.9), kNumQubits);
  const auto& gates = decoder().gates;
  const double slice_t = cfg.total_time_s / cfg.slices;
  size_t applied = 0;
  for (int j = 1; j <= cfg.slices; ++j) {
    const size_t upto = gates.size() * static_cast<size_t>(j) / cfg.slices;
    for (; applied < upto; ++applied) rho = apply_unitary(rho, gates[applied]);
    for (int q = 0; q < kNumQubits; ++q) {
      rho = dephase(rho, q, slice_t, cfg.t2_s[q]);
    }
  }
  ReconstructionResult rec = reconstruct(measure_coefficients(rho));
  DistillationOutcome ref = noisy_distill(0.9, cfg);
  CHECK(rec.theta0 == doctest::Approx(ref.theta0).epsilon(1e-10));
  CHECK(*rec.p_out == doctest::Approx(*ref.p_out).epsilon(1e-9));
}

TEST_CASE("tomography input validation") {
  CHECK_THROWS_AS(measure_coefficients(density_from_bloch({0, 0, 0})),
                  std::invalid_argument);
}
