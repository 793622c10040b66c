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

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "magicdist/sweep.hpp"

namespace {

using namespace magicdist;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + path);
  }
  out << content;
}

NoiseConfig resolve_noise(const std::string& mode, const std::string& config,
                          double total_time, int slices) {
  NoiseConfig cfg =
      config.empty() ? NoiseConfig::none() : load_noise_config(config);
  if (!mode.empty()) {
    const NoiseMode m = parse_noise_mode(mode);
    switch (m) {
      case NoiseMode::None:
        cfg.mode = NoiseMode::None;
        break;
      case NoiseMode::T2: {
        const double t = cfg.total_time_s;
        const int s = cfg.slices;
        cfg = NoiseConfig::t2_preset();
        cfg.total_time_s = t;
        cfg.slices = s;
        break;
      }
      case NoiseMode::T2Star: {
        const double t = cfg.total_time_s;
        const int s = cfg.slices;
        cfg = NoiseConfig::t2star_preset();
        cfg.total_time_s = t;
        cfg.slices = s;
        break;
      }
      case NoiseMode::Custom:
        cfg.mode = NoiseMode::Custom;
        break;
    }
  }
  if (total_time >= 0) cfg.total_time_s = total_time;
  if (slices > 0) cfg.slices = slices;
  return cfg;
}

int cmd_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows = run_sweep(spec);
  const std::string content = spec.format == OutputFormat::Csv
                                  ? format_csv(rows)
                                  : format_json(spec, rows);
  write_output(spec.out_path, content);
  return 0;
}

int cmd_run(double p_in, const NoiseConfig& cfg, bool as_json) {
  DistillationOutcome out = run_single(p_in, cfg);
  if (as_json) {
    std::cout << outcome_json(p_in, out);
    return 0;
  }
  const double p0 = threshold_locate();
  std::printf("p_in      = %s\n", format_number(p_in).c_str());
  std::printf("theta0    = %s\n", format_number(out.theta0).c_str());
  if (out.p_out) {
    std::printf("p_out     = %s\n", format_number(*out.p_out).c_str());
  } else {
    std::printf("p_out     = undefined\n");
  }
  std::printf("verdict   = %s (threshold p0 = %.10g)\n",
              p_in > p0 ? "distillable" : "below threshold", p0);
  std::printf("%-4s %-16s %s\n", "i", "theta_i", "bloch_i");
  for (int i = 0; i < 16; ++i) {
    if (out.blochs[i]) {
      std::printf("%-4d %-16s (%s, %s, %s)\n", i,
                  format_number(out.theta[i]).c_str(),
                  format_number(out.blochs[i]->x).c_str(),
                  format_number(out.blochs[i]->y).c_str(),
                  format_number(out.blochs[i]->z).c_str());
    } else {
      std::printf("%-4d %-16s undefined\n", i,
                  format_number(out.theta[i]).c_str());
    }
  }
  return 0;
}

int cmd_iterate(double p_start, int rounds) {
  auto trace = iterate_distillation(p_start, rounds);
  std::printf("round,p,theta0\n");
  for (size_t r = 0; r < trace.size(); ++r) {
    std::printf("%zu,%s,%s\n", r + 1, format_number(trace[r].p_out).c_str(),
                format_number(trace[r].theta0).c_str());
  }
  return 0;
}

int cmd_threshold() {
  std::printf("%.10g\n", threshold_locate());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five-qubit-code magic state distillation simulator"};
  app.require_subcommand(1);

  SweepSpec spec;
  std::string sweep_variant = "decode";
  std::string sweep_noise;
  std::string sweep_format = "csv";
  std::string sweep_config;
  double sweep_total_time = -1;
  int sweep_slices = 0;
  auto* sweep = app.add_subcommand("sweep", "Polarization sweep table");
  sweep->add_option("--p-start", spec.p_start, "Sweep start polarization");
  sweep->add_option("--p-end", spec.p_end, "Sweep end polarization");
  sweep->add_option("--steps", spec.steps, "Number of grid points");
  sweep->add_option("--variant", sweep_variant, "projective or decode");
  sweep->add_option("--noise", sweep_noise, "none, T2, T2star, or custom");
  sweep->add_option("--iterations", spec.iterations,
                    "Distillation rounds per grid point");
  sweep->add_option("--format", sweep_format, "csv or json");
  sweep->add_option("--out", spec.out_path, "Output path (default stdout)");
  sweep->add_option("--config", sweep_config, "Noise configuration file");
  sweep->add_option("--total-time", sweep_total_time,
                    "Total circuit time in seconds");
  sweep->add_option("--slices", sweep_slices, "Noise slices between layers");
  sweep->add_option("--seed", spec.rng_seed, "Reserved RNG seed");

  double run_p_in = 0.0;
  bool run_json = false;
  std::string run_noise;
  std::string run_config;
  auto* run = app.add_subcommand("run", "Full 16-outcome report");
  run->add_option("--p-in", run_p_in, "Input m-polarization")->required();
  run->add_flag("--json", run_json, "Emit JSON instead of a table");
  run->add_option("--noise", run_noise, "none, T2, T2star, or custom");
  run->add_option("--config", run_config, "Noise configuration file");

  double it_p_start = 0.9;
  int it_rounds = 6;
  auto* iterate = app.add_subcommand("iterate", "Iterated distillation trace");
  iterate->add_option("--p-start", it_p_start, "Starting m-polarization")
      ->required();
  iterate->add_option("--rounds", it_rounds, "Number of rounds")->required();

  auto* threshold =
      app.add_subcommand("threshold", "Print the distillation threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      spec.variant = parse_variant(sweep_variant);
      if (sweep_format == "csv") {
        spec.format = OutputFormat::Csv;
      } else if (sweep_format == "json") {
        spec.format = OutputFormat::Json;
      } else {
        throw std::invalid_argument("unknown format: " + sweep_format);
      }
      spec.noise = resolve_noise(sweep_noise, sweep_config, sweep_total_time,
                                 sweep_slices);
      return cmd_sweep(spec);
    }
    if (run->parsed()) {
      return cmd_run(run_p_in,
                     resolve_noise(run_noise, run_config, -1, 0), run_json);
    }
    if (iterate->parsed()) {
      return cmd_iterate(it_p_start, it_rounds);
    }
    if (threshold->parsed()) {
      return cmd_threshold();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
