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
//
// Command line front end: verify / gate / sweep / slope.
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 integrator convergence failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsholo/experiments.hpp"

namespace {

using nlohmann::json;
using namespace nsholo;

constexpr double pi = std::numbers::pi;

// "pauli-z", "hadamard", ... or "euler:a,b,c" for Rz(a) Ry(b) Rz(c).
Matrix parse_gate_target(const std::string& spec) {
  if (spec.rfind("euler:", 0) == 0) {
    std::vector<double> angles;
    std::istringstream ss(spec.substr(6));
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        angles.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ConfigError("bad euler angle '" + field + "'");
      }
    }
    if (angles.size() != 3)
      throw ConfigError("euler target needs exactly three angles, e.g. euler:0.3,1.1,0.2");
    return hermitian_expm(sigma_z(), angles[0] / 2.0) *
           hermitian_expm(sigma_y(), angles[1] / 2.0) *
           hermitian_expm(sigma_z(), angles[2] / 2.0);
  }
  if (spec == "identity") return identity(2);
  return axis_gate(named_gate_axis(spec));
}

json vector3_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json couplings_json(const LambdaCouplings& c) {
  json j;
  j["j1"] = c.j1();
  j["j2"] = c.j2();
  j["j4"] = c.j4();
  j["theta"] = c.theta();
  j["phi"] = c.phi();
  return j;
}

int run_verify(const std::string& json_path, int steps, std::uint64_t seed) {
  BatteryOptions options;
  options.steps = steps;
  options.seed = seed;
  const VerificationReport report = run_verification_battery(options);
  const std::string text = to_json_string(report);
  if (json_path.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot open report file '" + json_path + "'");
    out << text << std::endl;
    std::cerr << (report.all_passed ? "all checks passed" : "verification FAILED")
              << "; report written to " << json_path << std::endl;
  }
  return report.all_passed ? 0 : 1;
}

int run_gate(const std::string& target_spec, int nf_state) {
  const CodeBasis basis = four_qubit_code_basis();
  const Matrix target = parse_gate_target(target_spec);
  const auto [n1, n2] = synthesize_su2(target);
  const LambdaCouplings c1 = LambdaCouplings::from_axis(n1);
  const LambdaCouplings c2 = LambdaCouplings::from_axis(n2);

  // Second listed axis is pulsed first; the first is the left factor.
  const Matrix u2 = evolve_pulse(one_qubit_hamiltonian(c2), PulseSpec::square());
  const Matrix u1 = evolve_pulse(one_qubit_hamiltonian(c1), PulseSpec::square());
  const std::vector<Vector> logical{basis.vector(1, nf_state),
                                    basis.vector(2, nf_state)};
  const GateResult result = extract_gate(u1 * u2, logical, target);

  json j;
  j["target"] = target_spec;
  j["pulses"] = json::array();
  j["pulses"].push_back({{"order", 1},
                         {"axis", vector3_json(n2)},
                         {"couplings", couplings_json(c2)}});
  j["pulses"].push_back({{"order", 2},
                         {"axis", vector3_json(n1)},
                         {"couplings", couplings_json(c1)}});
  j["leakage"] = result.leakage;
  j["distance"] = result.target_distance;
  j["nf_state"] = nf_state;
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
  ExperimentConfig cfg =
      config_path.empty() ? default_experiment_config() : load_experiment_config(config_path);
  if (!out_path.empty()) cfg.output = out_path;
  if (cfg.output.empty())
    throw ConfigError("no output path: pass --out or set \"output\" in the config");
  if (cfg.g_values.empty()) cfg.g_values = default_g_values();

  const FidelityCurve curve = gate_fidelity_experiment(cfg);
  write_curve_csv(curve, cfg.output);
  std::cerr << "wrote " << curve.rows.size() << " rows to " << cfg.output << std::endl;
  return 0;
}

int run_slope(const std::string& in_path, const std::string& window) {
  double lo = std::pow(10.0, -2.5), hi = 0.1;
  if (!window.empty()) {
    const auto comma = window.find(',');
    if (comma == std::string::npos)
      throw ConfigError("window must be 'lo,hi', e.g. 0.003,0.1");
    try {
      lo = std::stod(window.substr(0, comma));
      hi = std::stod(window.substr(comma + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad window '" + window + "'");
    }
  }
  const FidelityCurve curve = read_curve_csv(in_path);
  std::vector<double> nbars;
  for (const FidelityPoint& row : curve.rows)
    if (nbars.empty() || nbars.back() != row.nbar) nbars.push_back(row.nbar);

  json j;
  j["window"] = json::array({lo, hi});
  j["fits"] = json::array();
  for (double nbar : nbars) {
    const SlopeFit fit = fit_small_g_slope(curve, nbar, lo, hi);
    j["fits"].push_back({{"nbar", nbar},
                         {"slope", fit.slope},
                         {"intercept", fit.intercept},
                         {"points_used", fit.points_used}});
  }
  std::cout << j.dump(2) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic gates in the four-qubit noiseless subsystem"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the structural verification battery");
  std::string report_path;
  int verify_steps = 2000;
  std::uint64_t verify_seed = 20260808;
  verify->add_option("--json", report_path, "Write the JSON report to this file");
  verify->add_option("--steps", verify_steps, "Integrator steps for the g = 0 check")
      ->check(CLI::Range(100, 100000));
  verify->add_option("--seed", verify_seed, "Seed for the randomized checks");

  auto* gate = app.add_subcommand("gate", "Synthesize and simulate a logical gate");
  std::string target_spec;
  int nf_state = 1;
  gate->add_option("--target", target_spec,
                   "pauli-x|pauli-y|pauli-z|hadamard|identity or euler:a,b,c")
      ->required();
  gate->add_option("--nf-state", nf_state, "NF spectator index")->check(CLI::Range(1, 3));

  auto* sweep = app.add_subcommand("sweep", "Gate fidelity vs symmetry breaking");
  std::string config_path, out_path;
  sweep->add_option("--config", config_path, "JSON experiment config");
  sweep->add_option("--out", out_path, "Output CSV path (overrides the config)");

  auto* slope = app.add_subcommand("slope", "Fit log10(1-F) vs log10(g)");
  std::string in_path, window;
  slope->add_option("--in", in_path, "Input CSV from 'sweep'")->required();
  slope->add_option("--window", window, "g window 'lo,hi' (default 10^-2.5,0.1)");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(report_path, verify_steps, verify_seed);
    if (gate->parsed()) return run_gate(target_spec, nf_state);
    if (sweep->parsed()) return run_sweep(config_path, out_path);
    if (slope->parsed()) return run_slope(in_path, window);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << std::endl;
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
