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

#include "magicdist/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace magicdist {

namespace {

using ordered_json = nlohmann::ordered_json;

// Round through the 12-significant-digit representation so the JSON
// serializer emits exactly what the CSV writer would.
double rounded(double v) { return std::stod(format_number(v)); }

std::pair<double, double> evaluate_point(double p, const SweepSpec& spec) {
  double p_cur = p;
  double theta0 = 0.0;
  for (int round = 0; round < spec.iterations; ++round) {
    if (spec.variant == Variant::Decode) {
      DistillationOutcome out = noisy_distill(p_cur, spec.noise);
      if (!out.p_out) {
        throw std::runtime_error("trivial-syndrome outcome has no support");
      }
      p_cur = *out.p_out;
      theta0 = out.theta0;
    } else {
      auto [success, rho] = distill_projective(
          tensor_power(prepare_faulty_direct(p_cur), kNumQubits));
      p_cur = m_polarization(rho);
      theta0 = success;
    }
  }
  return {p_cur, theta0};
}

}  // namespace

void SweepSpec::validate() const {
  if (p_start > p_end) {
    throw std::invalid_argument("p_start must be <= p_end");
  }
  if (p_start < -1.0 || p_end > 1.0) {
    throw std::invalid_argument("sweep range must lie in [-1, 1]");
  }
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (variant == Variant::Projective && noise.mode != NoiseMode::None) {
    throw std::invalid_argument(
        "noise is only modeled for the decode variant");
  }
  noise.validate();
}

std::string variant_name(Variant v) {
  return v == Variant::Projective ? "projective" : "decode";
}

std::string noise_mode_name(NoiseMode m) {
  switch (m) {
    case NoiseMode::None:
      return "none";
    case NoiseMode::T2:
      return "T2";
    case NoiseMode::T2Star:
      return "T2star";
    case NoiseMode::Custom:
      return "custom";
  }
  throw std::logic_error("bad noise mode");
}

Variant parse_variant(const std::string& s) {
  if (s == "projective") return Variant::Projective;
  if (s == "decode") return Variant::Decode;
  throw std::invalid_argument("unknown variant: " + s);
}

NoiseMode parse_noise_mode(const std::string& s) {
  if (s == "none") return NoiseMode::None;
  if (s == "T2") return NoiseMode::T2;
  if (s == "T2star") return NoiseMode::T2Star;
  if (s == "custom") return NoiseMode::Custom;
  throw std::invalid_argument("unknown noise mode: " + s);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    const double p =
        spec.p_start + (spec.p_end - spec.p_start) * i / (spec.steps - 1);
    auto [p_out, theta0] = evaluate_point(p, spec);
    rows.push_back(SweepRow{p, p_out, theta0, spec.variant, spec.noise.mode});
  }
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p_in,p_out,theta0,variant,noise_mode\n";
  for (const SweepRow& r : rows) {
    out += format_number(r.p_in) + "," + format_number(r.p_out) + "," +
           format_number(r.theta0) + "," + variant_name(r.variant) + "," +
           noise_mode_name(r.noise_mode) + "\n";
  }
  return out;
}

std::string format_json(const SweepSpec& spec,
                        const std::vector<SweepRow>& rows) {
  ordered_json doc;
  doc["p_start"] = rounded(spec.p_start);
  doc["p_end"] = rounded(spec.p_end);
  doc["steps"] = spec.steps;
  doc["variant"] = variant_name(spec.variant);
  doc["noise_mode"] = noise_mode_name(spec.noise.mode);
  doc["iterations"] = spec.iterations;
  doc["rows"] = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json row;
    row["p_in"] = rounded(r.p_in);
    row["p_out"] = rounded(r.p_out);
    row["theta0"] = rounded(r.theta0);
    row["variant"] = variant_name(r.variant);
    row["noise_mode"] = noise_mode_name(r.noise_mode);
    doc["rows"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

DistillationOutcome run_single(double p_in, const NoiseConfig& cfg) {
  return noisy_distill(p_in, cfg);
}

std::string outcome_json(double p_in, const DistillationOutcome& outcome) {
  ordered_json doc;
  doc["p_in"] = rounded(p_in);
  doc["theta"] = ordered_json::array();
  for (double t : outcome.theta) doc["theta"].push_back(rounded(t));
  doc["bloch"] = ordered_json::array();
  for (const auto& b : outcome.blochs) {
    if (b) {
      doc["bloch"].push_back({rounded(b->x), rounded(b->y), rounded(b->z)});
    } else {
      doc["bloch"].push_back(nullptr);
    }
  }
  doc["p_out"] =
      outcome.p_out ? ordered_json(rounded(*outcome.p_out)) : ordered_json();
  doc["theta0"] = rounded(outcome.theta0);
  const double threshold = std::sqrt(3.0 / 7.0);
  doc["threshold"] = rounded(threshold);
  doc["distillable"] = p_in > threshold;
  return doc.dump(2) + "\n";
}

NoiseConfig load_noise_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  NoiseConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq, value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=") {
      throw std::runtime_error("config parse error at line " +
                               std::to_string(lineno));
    }
    if (key == "mode") {
      cfg.mode = parse_noise_mode(value);
    } else if (key == "total_time_s") {
      cfg.total_time_s = std::stod(value);
    } else if (key == "slices") {
      cfg.slices = std::stoi(value);
    } else if (key == "t2_M") {
      cfg.t2_s[0] = std::stod(value);
    } else if (key == "t2_C1") {
      cfg.t2_s[1] = std::stod(value);
    } else if (key == "t2_C2") {
      cfg.t2_s[2] = std::stod(value);
    } else if (key == "t2_C3") {
      cfg.t2_s[3] = std::stod(value);
    } else if (key == "t2_C4") {
      cfg.t2_s[4] = std::stod(value);
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
  // Preset modes carry their own relaxation times.
  if (cfg.mode == NoiseMode::T2) {
    auto preset = NoiseConfig::t2_preset();
    cfg.t2_s = preset.t2_s;
  } else if (cfg.mode == NoiseMode::T2Star) {
    auto preset = NoiseConfig::t2star_preset();
    cfg.t2_s = preset.t2_s;
  }
  cfg.validate();
  return cfg;
}

}  // namespace magicdist
