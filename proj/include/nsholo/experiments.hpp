// Copyright 2026 The nsholo authors
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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsholo/collective.hpp"
#include "nsholo/holonomy.hpp"
#include "nsholo/noise.hpp"

namespace nsholo {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::vector<double> g_values;           // strictly increasing, >= 0
  std::vector<double> nbar_values{0.0, 1.0};
  double gamma_ratio = 0.1;               // Gamma/Omega = gamma/Omega
  PulseSpec pulse = PulseSpec::square();
  std::string gate = "pauli-z";
  int nf_state = 1;                       // NF spectator index, 1..3
  int steps = 2000;
  std::string output;
  std::uint64_t seed = 20260808;          // seeds the SU(2) synthesis batch
  bool check_convergence = true;
  int threads = 0;                        // 0 = hardware concurrency
};

// 30 log-spaced points in [1e-3, 1].
std::vector<double> default_g_values();

ExperimentConfig default_experiment_config();

// Parses and validates a config file; unknown keys are rejected.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& json_text);

// Bloch axis of a named reflection gate (pauli-x / pauli-y / pauli-z /
// hadamard).
Eigen::Vector3d named_gate_axis(const std::string& name);

// The six axial Bloch states |1>, |2>, (|1> +- |2>)/sqrt2,
// (|1> +- i|2>)/sqrt2 on the NS factor, embedded with NF index nf_state.
std::vector<Vector> axial_input_states(const CodeBasis& basis, int nf_state);

struct FidelityPoint {
  double g;
  double nbar;
  double f_mean;
  std::array<double, 6> f_state;
  double leakage_mean;
};

struct FidelityCurve {
  std::vector<FidelityPoint> rows;  // sorted by (nbar, g)
};

// Gate fidelity versus g: integrates the master equation through the
// pulse for every (g, nbar, input), reduces to the NS, and compares
// against the collective-decoherence-only (g = 0) reference.
FidelityCurve gate_fidelity_experiment(const ExperimentConfig& cfg);

void write_curve_csv(const FidelityCurve& curve, const std::string& path);
FidelityCurve read_curve_csv(const std::string& path);

struct SlopeFit {
  double slope;
  double intercept;
  int points_used;
};

// Least-squares slope of log10(1 - F) against log10 g over [g_lo, g_hi],
// using points with F < 1 - 1e-9. Needs at least five such points.
SlopeFit fit_small_g_slope(const std::vector<std::pair<double, double>>& g_and_f,
                           double g_lo, double g_hi);

// Convenience: fit one nbar branch of a curve.
SlopeFit fit_small_g_slope(const FidelityCurve& curve, double nbar, double g_lo,
                           double g_hi);

struct VerificationCheck {
  std::string name;
  bool passed;
  double observed;
  double tolerance;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  std::string cycle_convention;
  bool all_passed;
};

struct BatteryOptions {
  std::uint64_t seed = 20260808;
  int steps = 2000;
};

// Structural verification battery: sector counting, code-basis checks,
// the permutation identities, gate extraction, and g = 0 protection.
VerificationReport run_verification_battery(const BatteryOptions& options = {});

std::string to_json_string(const VerificationReport& report, int indent = 2);

}  // namespace nsholo
