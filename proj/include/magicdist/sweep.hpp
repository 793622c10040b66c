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

#include <string>

#include "magicdist/noise.hpp"
#include "magicdist/tomography.hpp"

namespace magicdist {

enum class Variant { Projective, Decode };
enum class OutputFormat { Csv, Json };

struct SweepSpec {
  double p_start{0.5};
  double p_end{1.0};
  int steps{51};
  Variant variant{Variant::Decode};
  NoiseConfig noise;
  int iterations{1};
  OutputFormat format{OutputFormat::Csv};
  std::string out_path;  // empty: stdout
  // Reserved for future stochastic extensions; the engine is
  // deterministic and never consumes it.
  uint64_t rng_seed{0};

  void validate() const;
};

struct SweepRow {
  double p_in;
  double p_out;
  double theta0;
  Variant variant;
  NoiseMode noise_mode;
};

std::string variant_name(Variant v);
std::string noise_mode_name(NoiseMode m);
Variant parse_variant(const std::string& s);
NoiseMode parse_noise_mode(const std::string& s);

/// Value formatted with 12 significant digits.
std::string format_number(double v);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_json(const SweepSpec& spec,
                        const std::vector<SweepRow>& rows);

/// Single run through the requested variant (decode supports noise).
DistillationOutcome run_single(double p_in, const NoiseConfig& cfg);

/// Full 16-outcome report as JSON (theta[16], bloch[16][3], p_out,
/// theta0, plus input metadata).
std::string outcome_json(double p_in, const DistillationOutcome& outcome);

/// key = value noise configuration file; '#' starts a comment.
NoiseConfig load_noise_config(const std::string& path);

}  // namespace magicdist
