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

#include "nsholo/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace nsholo {

namespace {

constexpr double pi = std::numbers::pi;

using nlohmann::json;

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace

std::vector<double> default_g_values() {
  std::vector<double> g(30);
  for (int k = 0; k < 30; ++k) g[k] = std::pow(10.0, -3.0 + 3.0 * k / 29.0);
  return g;
}

ExperimentConfig default_experiment_config() {
  ExperimentConfig cfg;
  cfg.g_values = default_g_values();
  return cfg;
}

Eigen::Vector3d named_gate_axis(const std::string& name) {
  if (name == "pauli-z") return {0.0, 0.0, 1.0};
  if (name == "pauli-x") return {1.0, 0.0, 0.0};
  if (name == "pauli-y") return {0.0, 1.0, 0.0};
  if (name == "hadamard") return {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)};
  throw ConfigError("unknown gate name '" + name +
                    "' (expected pauli-x, pauli-y, pauli-z or hadamard)");
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
  require(!cfg.g_values.empty(), "g_values must not be empty");
  for (std::size_t k = 0; k < cfg.g_values.size(); ++k) {
    require(std::isfinite(cfg.g_values[k]) && cfg.g_values[k] >= 0.0,
            "g_values must be finite and >= 0");
    if (k > 0)
      require(cfg.g_values[k] > cfg.g_values[k - 1], "g_values must be strictly increasing");
  }
  require(!cfg.nbar_values.empty(), "nbar_values must not be empty");
  for (double nbar : cfg.nbar_values)
    require(std::isfinite(nbar) && nbar >= 0.0, "nbar_values must be finite and >= 0");
  require(std::isfinite(cfg.gamma_ratio) && cfg.gamma_ratio >= 0.0,
          "gamma_ratio must be finite and >= 0");
  require(cfg.nf_state >= 1 && cfg.nf_state <= 3, "nf_state must be 1, 2 or 3");
  require(cfg.steps >= 100, "steps must be >= 100");
  require(cfg.threads >= 0, "threads must be >= 0");
  named_gate_axis(cfg.gate);
}

PulseSpec parse_pulse(const json& j) {
  require(j.is_object(), "pulse must be an object");
  std::string shape = "square";
  for (const auto& [key, value] : j.items()) {
    if (key == "shape") {
      require(value.is_string(), "pulse.shape must be a string");
      shape = value.get<std::string>();
    } else if (key != "omega" && key != "tau") {
      throw ConfigError("unknown key 'pulse." + key + "'");
    }
  }
  if (shape == "square") {
    double omega = 1.0;
    if (j.contains("omega")) {
      require(j["omega"].is_number(), "pulse.omega must be a number");
      omega = j["omega"].get<double>();
    }
    require(!j.contains("tau"), "pulse.tau applies to the truncated-gaussian shape only");
    require(std::isfinite(omega) && omega > 0.0, "pulse.omega must be positive");
    return PulseSpec::square(omega);
  }
  if (shape == "truncated-gaussian") {
    double tau = pi;
    if (j.contains("tau")) {
      require(j["tau"].is_number(), "pulse.tau must be a number");
      tau = j["tau"].get<double>();
    }
    require(!j.contains("omega"), "pulse.omega applies to the square shape only");
    require(std::isfinite(tau) && tau > 0.0, "pulse.tau must be positive");
    return PulseSpec::truncated_gaussian(tau);
  }
  throw ConfigError("pulse.shape must be 'square' or 'truncated-gaussian'");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), "config must be a JSON object");

  ExperimentConfig cfg = default_experiment_config();
  for (const auto& [key, value] : j.items()) {
    if (key == "g_values") {
      require(value.is_array(), "g_values must be an array of numbers");
      cfg.g_values.clear();
      for (const auto& v : value) {
        require(v.is_number(), "g_values must be an array of numbers");
        cfg.g_values.push_back(v.get<double>());
      }
    } else if (key == "nbar_values") {
      require(value.is_array(), "nbar_values must be an array of numbers");
      cfg.nbar_values.clear();
      for (const auto& v : value) {
        require(v.is_number(), "nbar_values must be an array of numbers");
        cfg.nbar_values.push_back(v.get<double>());
      }
    } else if (key == "gamma_ratio") {
      require(value.is_number(), "gamma_ratio must be a number");
      cfg.gamma_ratio = value.get<double>();
    } else if (key == "pulse") {
      cfg.pulse = parse_pulse(value);
    } else if (key == "gate") {
      require(value.is_string(), "gate must be a string");
      cfg.gate = value.get<std::string>();
    } else if (key == "nf_state") {
      require(value.is_number_integer(), "nf_state must be an integer");
      cfg.nf_state = value.get<int>();
    } else if (key == "steps") {
      require(value.is_number_integer(), "steps must be an integer");
      cfg.steps = value.get<int>();
    } else if (key == "output") {
      require(value.is_string(), "output must be a string");
      cfg.output = value.get<std::string>();
    } else if (key == "seed") {
      require(value.is_number_unsigned() || value.is_number_integer(),
              "seed must be an integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "check_convergence") {
      require(value.is_boolean(), "check_convergence must be a boolean");
      cfg.check_convergence = value.get<bool>();
    } else if (key == "threads") {
      require(value.is_number_integer(), "threads must be an integer");
      cfg.threads = value.get<int>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_experiment_config(text.str());
}

std::vector<Vector> axial_input_states(const CodeBasis& basis, int nf_state) {
  if (nf_state < 1 || nf_state > 3)
    throw std::invalid_argument("axial_input_states: nf_state must be 1, 2 or 3");
  const Vector one = basis.vector(1, nf_state);
  const Vector two = basis.vector(2, nf_state);
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Vector> states;
  states.push_back(one);
  states.push_back(two);
  states.push_back(r * (one + two));
  states.push_back(r * (one - two));
  states.push_back(r * (one + imag_unit * two));
  states.push_back(r * (one - imag_unit * two));
  return states;
}

namespace {

// NS-space axial states matching axial_input_states, for the ideal gate.
std::vector<Vector> axial_ns_states() {
  Vector one = Vector::Zero(3), two = Vector::Zero(3);
  one(0) = 1.0;
  two(1) = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  return {one,
          two,
          r * (one + two),
          r * (one - two),
          r * (one + imag_unit * two),
          r * (one - imag_unit * two)};
}

void check_end_state(const Matrix& rho, double g, double nbar) {
  std::ostringstream at;
  at << " at g = " << g << ", nbar = " << nbar;
  const double trace_drift = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (!(trace_drift <= 1e-7)) {
    std::ostringstream msg;
    msg << "integrator trace drift " << trace_drift << at.str();
    throw ConvergenceError(msg.str());
  }
  if (!(hermiticity_error(rho) <= 1e-9))
    throw ConvergenceError("integrator Hermiticity loss" + at.str());
  if (!(min_eigenvalue(rho) >= -1e-6))
    throw ConvergenceError("integrator positivity loss" + at.str());
}

// Runs tasks 0..count-1 on a small pool; exceptions are collected and the
// first (in task order) is rethrown.
template <typename Fn>
void run_parallel(std::size_t count, int threads, Fn&& task) {
  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, std::min<int>(n, static_cast<int>(count)));

  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
      try {
        task(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

FidelityCurve gate_fidelity_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);

  const CodeBasis basis = four_qubit_code_basis();
  const LambdaCouplings couplings = LambdaCouplings::from_axis(named_gate_axis(cfg.gate));
  const Matrix h = one_qubit_hamiltonian(couplings);
  const std::vector<Vector> inputs = axial_input_states(basis, cfg.nf_state);
  std::vector<Matrix> rho0;
  rho0.reserve(inputs.size());
  for (const Vector& v : inputs) rho0.push_back(v * v.adjoint());

  const double rate = cfg.gamma_ratio * cfg.pulse.amplitude();

  std::vector<double> nbars = cfg.nbar_values;
  std::sort(nbars.begin(), nbars.end());

  // Ideal references: the same evolution with collective noise only (g = 0).
  std::vector<std::vector<Matrix>> ideals(nbars.size());
  for (std::size_t ib = 0; ib < nbars.size(); ++ib) {
    const NoiseParams params{0.0, rate, rate, nbars[ib]};
    const std::vector<Matrix> evolved = integrate_batch(rho0, h, cfg.pulse, params, cfg.steps);
    ideals[ib].reserve(evolved.size());
    for (const Matrix& rho : evolved) ideals[ib].push_back(ns_reduce(rho, basis));
  }

  const std::size_t n_g = cfg.g_values.size();
  std::vector<FidelityPoint> rows(nbars.size() * n_g);

  run_parallel(rows.size(), cfg.threads, [&](std::size_t k) {
    const std::size_t ib = k / n_g;
    const std::size_t ig = k % n_g;
    const double g = cfg.g_values[ig];
    const double nbar = nbars[ib];
    const NoiseParams params{g, rate, rate, nbar};

    std::vector<Matrix> finals = integrate_batch(rho0, h, cfg.pulse, params, cfg.steps);
    if (cfg.check_convergence) {
      std::vector<Matrix> fine = integrate_batch(rho0, h, cfg.pulse, params, 2 * cfg.steps);
      for (std::size_t s = 0; s < finals.size(); ++s) {
        const double delta = (finals[s] - fine[s]).norm();
        if (!(delta <= tol::integrated)) {
          std::ostringstream msg;
          msg << "step-halving check failed (delta = " << delta << ") at g = " << g
              << ", nbar = " << nbar << "; increase steps";
          throw ConvergenceError(msg.str());
        }
      }
      finals = std::move(fine);
    }

    FidelityPoint& row = rows[k];
    row.g = g;
    row.nbar = nbar;
    double f_sum = 0.0, leak_sum = 0.0;
    for (std::size_t s = 0; s < finals.size(); ++s) {
      check_end_state(finals[s], g, nbar);
      const Matrix reduced = ns_reduce(finals[s], basis);
      const double f = bures_fidelity(ideals[ib][s], reduced);
      row.f_state[s] = f;
      f_sum += f;
      leak_sum += 1.0 - reduced.trace().real();
    }
    row.f_mean = f_sum / static_cast<double>(finals.size());
    row.leakage_mean = leak_sum / static_cast<double>(finals.size());
  });

  return FidelityCurve{std::move(rows)};
}

void write_curve_csv(const FidelityCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << "g,nbar,F_mean,F_state1,F_state2,F_state3,F_state4,F_state5,F_state6,"
         "leakage_mean\n";
  char buf[32];
  auto emit = [&](double v, char sep) {
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    out << buf << sep;
  };
  for (const FidelityPoint& row : curve.rows) {
    emit(row.g, ',');
    emit(row.nbar, ',');
    emit(row.f_mean, ',');
    for (double f : row.f_state) emit(f, ',');
    emit(row.leakage_mean, '\n');
  }
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

FidelityCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open curve file '" + path + "'");
  FidelityCurve curve;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'g') continue;  // header
    std::istringstream ss(line);
    std::string field;
    std::vector<double> values;
    while (std::getline(ss, field, ',')) {
      try {
        values.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ConfigError("malformed CSV field '" + field + "' in '" + path + "'");
      }
    }
    if (values.size() != 10)
      throw ConfigError("expected 10 CSV columns in '" + path + "'");
    FidelityPoint row;
    row.g = values[0];
    row.nbar = values[1];
    row.f_mean = values[2];
    for (int s = 0; s < 6; ++s) row.f_state[s] = values[3 + s];
    row.leakage_mean = values[9];
    curve.rows.push_back(row);
  }
  return curve;
}

SlopeFit fit_small_g_slope(const std::vector<std::pair<double, double>>& g_and_f,
                           double g_lo, double g_hi) {
  std::vector<double> x, y;
  for (const auto& [g, f] : g_and_f) {
    if (g <= 0.0 || g < g_lo || g > g_hi) continue;
    if (f >= 1.0 - 1e-9) continue;  // numerical F = 1 plateau carries no slope
    x.push_back(std::log10(g));
    y.push_back(std::log10(1.0 - f));
  }
  if (x.size() < 5)
    throw ConfigError("fit_small_g_slope: fewer than 5 usable points in the window");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw ConfigError("fit_small_g_slope: degenerate g window");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points_used = static_cast<int>(x.size());
  return fit;
}

SlopeFit fit_small_g_slope(const FidelityCurve& curve, double nbar, double g_lo,
                           double g_hi) {
  std::vector<std::pair<double, double>> points;
  for (const FidelityPoint& row : curve.rows)
    if (row.nbar == nbar) points.emplace_back(row.g, row.f_mean);
  return fit_small_g_slope(points, g_lo, g_hi);
}

namespace {

struct BatteryBuilder {
  VerificationReport report;

  void add(const std::string& name, double observed, double tolerance,
           const std::string& detail = "") {
    report.checks.push_back(
        VerificationCheck{name, observed <= tolerance, observed, tolerance, detail});
  }

  void add_flag(const std::string& name, bool passed, const std::string& detail = "") {
    report.checks.push_back(VerificationCheck{name, passed, passed ? 0.0 : 1.0, 0.5, detail});
  }
};

}  // namespace

VerificationReport run_verification_battery(const BatteryOptions& options) {
  BatteryBuilder b;
  const CodeBasis basis = four_qubit_code_basis();

  // Sector counting against the closed-form multiplicity.
  {
    bool ok = true;
    std::ostringstream detail;
    for (int n : {2, 4, 6}) {
      long total = 0;
      for (const IrrepSector& sector : decompose_total_spin(n)) {
        ok = ok && sector.ns_dim == multiplicity(n, sector.total_spin);
        ok = ok && sector.nf_dim == 2 * static_cast<int>(sector.total_spin) + 1;
        total += static_cast<long>(sector.ns_dim) * sector.nf_dim;
        if (n == 4)
          detail << "J=" << sector.total_spin << ":" << sector.ns_dim << "x"
                 << sector.nf_dim << " ";
      }
      ok = ok && total == (1L << n);
    }
    const auto four = decompose_total_spin(4);
    ok = ok && four.size() == 3 && four[0].ns_dim == 1 && four[1].ns_dim == 3 &&
         four[2].ns_dim == 2;
    b.add_flag("multiplicity-vs-brute-force", ok, detail.str());
  }

  // Code basis orthonormality: all 81 inner products.
  {
    const Matrix gram = basis.isometry().adjoint() * basis.isometry();
    b.add("code-basis-orthonormality", (gram - identity(9)).cwiseAbs().maxCoeff(),
          tol::structural);
  }

  // Collective operators factorize as identity x S_alpha on the code.
  {
    const auto ns = verify_ns_structure(basis, collective_error_ops(4));
    const double observed =
        std::max({ns.max_off_block, ns.max_block_spread, ns.max_subspace_leakage});
    b.add("error-operator-factorization", observed, tol::structural, ns.detail);
  }

  // The eight permutation identities under the resolved cycle convention.
  {
    const CycleConvention conv = resolve_cycle_convention(basis);
    b.report.cycle_convention = to_string(conv);
    double worst = 0.0;
    std::ostringstream detail;
    for (int i = 1; i <= 8; ++i) {
      const double r = gellmann_realization(i, basis, conv).residual;
      worst = std::max(worst, r);
      detail << "lambda_" << i << ": " << r << "; ";
    }
    detail << "convention: " << to_string(conv);
    b.add("gellmann-identities", worst, tol::structural, detail.str());
  }

  // Permutation form vs three-level form of the one-qubit generator.
  {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      double j1 = u(rng), j2 = u(rng), j4 = u(rng);
      if (std::hypot(j1, j2, j4) < 1e-3) { --rep; continue; }
      const LambdaCouplings c(j1, j2, j4);
      const Matrix restricted =
          basis.isometry().adjoint() * one_qubit_hamiltonian(c) * basis.isometry();
      worst = std::max(worst,
                       (restricted - kron(one_qubit_hamiltonian_ns(c), identity(3))).norm());
    }
    b.add("one-qubit-restriction", worst, tol::structural);
  }

  // Parallel transport: matrix elements of H(t) between evolved
  // computational states stay zero through the pulse.
  {
    const LambdaCouplings c = LambdaCouplings::from_angles(pi / 3.0, 1.1);
    const std::vector<Vector> logical{basis.vector(1, 1), basis.vector(2, 1)};
    const double observed = dynamical_phase_along_path(
        one_qubit_hamiltonian(c), PulseSpec::square(), logical, 50);
    b.add("parallel-transport", observed, tol::structural);
  }

  // Extracted gate equals n . sigma over a 12x12 (theta, phi) grid.
  {
    double worst_distance = 0.0, worst_trace = 0.0, worst_leakage = 0.0;
    const std::vector<Vector> logical{basis.vector(1, 1), basis.vector(2, 1)};
    for (int a = 0; a < 12; ++a) {
      for (int p = 0; p < 12; ++p) {
        const double theta = pi * a / 11.0;
        const double phi = 2.0 * pi * p / 12.0;
        const LambdaCouplings c = LambdaCouplings::from_angles(theta, phi);
        const Matrix u = evolve_pulse(one_qubit_hamiltonian(c), PulseSpec::square());
        const GateResult gate = extract_gate(u, logical, axis_gate(c.axis()));
        worst_distance = std::max(worst_distance, gate.target_distance);
        worst_trace = std::max(worst_trace, std::abs(gate.logical_block.trace()));
        worst_leakage = std::max(worst_leakage, gate.leakage);
      }
    }
    std::ostringstream detail;
    detail << "max |trace| = " << worst_trace << ", max leakage = " << worst_leakage;
    b.add("gate-grid", worst_distance, tol::integrated, detail.str());
    b.add("gate-grid-traceless", worst_trace, tol::integrated);
    b.add("gate-grid-leakage", worst_leakage, 1e-10);
  }

  // Two-reflection synthesis reproduces seeded random SU(2) targets.
  {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    const std::vector<Vector> logical{basis.vector(1, 1), basis.vector(2, 1)};
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const double a = angle(rng), beta = angle(rng) / 2.0, c = angle(rng);
      const Matrix target = hermitian_expm(sigma_z(), a / 2.0) *
                            hermitian_expm(sigma_y(), beta / 2.0) *
                            hermitian_expm(sigma_z(), c / 2.0);
      const auto [n1, n2] = synthesize_su2(target);
      const Matrix u2 = evolve_pulse(one_qubit_hamiltonian(LambdaCouplings::from_axis(n2)),
                                     PulseSpec::square());
      const Matrix u1 = evolve_pulse(one_qubit_hamiltonian(LambdaCouplings::from_axis(n1)),
                                     PulseSpec::square());
      const GateResult gate = extract_gate(u1 * u2, logical, target);
      worst = std::max(worst, gate.target_distance);
    }
    b.add("su2-synthesis", worst, 1e-7);
  }

  // Two-qubit generator: restriction, commutation, CNOT content.
  {
    const CnotVerification cnot = verify_cnot(basis);
    b.add("two-qubit-restriction", cnot.restriction_residual, tol::structural);
    b.add("h0-h1-commute", cnot.commutator_norm, tol::structural);
    std::ostringstream detail;
    detail << "leakage = " << cnot.gate.leakage
           << ", e^{-i pi H1} on M(0) vs identity = " << cnot.h1_identity_residual
           << ", factorization residual = " << cnot.factorization_residual;
    b.add("cnot-gate", cnot.gate.target_distance, tol::integrated, detail.str());
    b.add("cnot-h1-identity", cnot.h1_identity_residual, 1e-10);
    b.add("cnot-factorization", cnot.factorization_residual, 1e-10);
  }

  // g = 0 protection: the NS-reduced noisy evolution matches the
  // closed-form holonomic gate for both thermal occupations.
  {
    const LambdaCouplings c = LambdaCouplings::from_axis(named_gate_axis("pauli-z"));
    const Matrix h = one_qubit_hamiltonian(c);
    const Matrix gate_ns = hermitian_expm(one_qubit_hamiltonian_ns(c), pi);
    const std::vector<Vector> inputs = axial_input_states(basis, 1);
    const std::vector<Vector> ns_inputs = axial_ns_states();

    double worst = 0.0;
    for (double nbar : {0.0, 1.0}) {
      const NoiseParams params{0.0, 0.1, 0.1, nbar};
      std::vector<Matrix> rho0;
      for (const Vector& v : inputs) rho0.push_back(v * v.adjoint());
      const std::vector<Matrix> finals =
          integrate_batch(rho0, h, PulseSpec::square(), params, options.steps);
      for (std::size_t s = 0; s < finals.size(); ++s) {
        const Vector ideal = gate_ns * ns_inputs[s];
        const double f = bures_fidelity(ideal * ideal.adjoint(), ns_reduce(finals[s], basis));
        worst = std::max(worst, std::abs(1.0 - f));
      }
    }
    b.add("g0-protection", worst, 1e-6);
  }

  b.report.all_passed = true;
  for (const VerificationCheck& check : b.report.checks)
    b.report.all_passed = b.report.all_passed && check.passed;
  return b.report;
}

std::string to_json_string(const VerificationReport& report, int indent) {
  json j;
  j["all_passed"] = report.all_passed;
  j["cycle_convention"] = report.cycle_convention;
  j["checks"] = json::array();
  for (const VerificationCheck& check : report.checks) {
    json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    c["observed"] = check.observed;
    c["tolerance"] = check.tolerance;
    if (!check.detail.empty()) c["detail"] = check.detail;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(indent);
}

}  // namespace nsholo
