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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsholo/experiments.hpp"

namespace py = pybind11;
using namespace nsholo;

namespace {

PauliAxis axis_from_string(const std::string& axis) {
  if (axis == "x") return PauliAxis::X;
  if (axis == "y") return PauliAxis::Y;
  if (axis == "z") return PauliAxis::Z;
  if (axis == "+") return PauliAxis::Plus;
  if (axis == "-") return PauliAxis::Minus;
  throw std::invalid_argument("axis must be one of x, y, z, +, -");
}

CycleConvention convention_from_string(const std::string& name) {
  if (name == "left-to-right") return CycleConvention::LeftToRight;
  if (name == "right-to-left") return CycleConvention::RightToLeft;
  throw std::invalid_argument("convention must be left-to-right or right-to-left");
}

}  // namespace

PYBIND11_MODULE(_nsholo, m) {
  m.doc() = "Holonomic quantum gates in the four-qubit noiseless subsystem";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // Dense linear algebra.
  m.def("kron", py::overload_cast<const Matrix&, const Matrix&>(&kron),
        "Kronecker product of two matrices");
  m.def("hermitian_expm", &hermitian_expm, py::arg("h"), py::arg("angle"),
        "e^{-i angle h} for Hermitian h");
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def("bures_fidelity", &bures_fidelity, py::arg("rho_id"), py::arg("rho_f"));
  m.def("phase_invariant_distance", &phase_invariant_distance, py::arg("u"),
        py::arg("target"));

  // Collective structure and the four-qubit code.
  m.def("pauli_on_qubit",
        [](const std::string& axis, int p, int n) {
          return pauli_on_qubit(axis_from_string(axis), p, n);
        },
        py::arg("axis"), py::arg("p"), py::arg("n"));

  py::class_<CollectiveErrorOps>(m, "CollectiveErrorOps")
      .def_readonly("n_qubits", &CollectiveErrorOps::n_qubits)
      .def_readonly("e_plus", &CollectiveErrorOps::e_plus)
      .def_readonly("e_minus", &CollectiveErrorOps::e_minus)
      .def_readonly("e_z", &CollectiveErrorOps::e_z);
  m.def("collective_error_ops", &collective_error_ops, py::arg("n"));

  m.def("multiplicity", &multiplicity, py::arg("n"), py::arg("j"));

  py::class_<IrrepSector>(m, "IrrepSector")
      .def_readonly("total_spin", &IrrepSector::total_spin)
      .def_readonly("ns_dim", &IrrepSector::ns_dim)
      .def_readonly("nf_dim", &IrrepSector::nf_dim)
      .def_readonly("isometry", &IrrepSector::isometry);
  m.def("decompose_total_spin", &decompose_total_spin, py::arg("n"));

  py::class_<CodeBasis>(m, "CodeBasis")
      .def("vector", &CodeBasis::vector, py::arg("i"), py::arg("j"))
      .def("isometry", &CodeBasis::isometry);
  m.def("four_qubit_code_basis", &four_qubit_code_basis);

  py::class_<NsStructureReport>(m, "NsStructureReport")
      .def_readonly("passed", &NsStructureReport::passed)
      .def_readonly("max_off_block", &NsStructureReport::max_off_block)
      .def_readonly("max_block_spread", &NsStructureReport::max_block_spread)
      .def_readonly("max_subspace_leakage", &NsStructureReport::max_subspace_leakage)
      .def_readonly("s_plus", &NsStructureReport::s_plus)
      .def_readonly("s_minus", &NsStructureReport::s_minus)
      .def_readonly("s_z", &NsStructureReport::s_z)
      .def_readonly("detail", &NsStructureReport::detail);
  m.def("verify_ns_structure", &verify_ns_structure, py::arg("basis"), py::arg("ops"));
  m.def("ns_reduce", &ns_reduce, py::arg("rho"), py::arg("basis"));

  // Permutation algebra.
  m.def("transposition",
        [](int p, int q, int n) { return transposition(p, q, n).matrix; },
        py::arg("p"), py::arg("q"), py::arg("n"));
  m.def("cycle",
        [](const std::vector<int>& indices, int n, const std::string& convention) {
          return cycle(indices, n, convention_from_string(convention)).matrix;
        },
        py::arg("indices"), py::arg("n"), py::arg("convention") = "left-to-right");
  m.def("gellmann_matrix", &gellmann_matrix, py::arg("i"));
  m.def("gellmann_residual",
        [](int i, const CodeBasis& basis, const std::string& convention) {
          return gellmann_realization(i, basis, convention_from_string(convention))
              .residual;
        },
        py::arg("i"), py::arg("basis"), py::arg("convention") = "left-to-right");
  m.def("resolve_cycle_convention",
        [](const CodeBasis& basis) { return to_string(resolve_cycle_convention(basis)); },
        py::arg("basis"));

  // Holonomic gates.
  py::class_<LambdaCouplings>(m, "LambdaCouplings")
      .def(py::init<double, double, double>(), py::arg("j1"), py::arg("j2"),
           py::arg("j4"))
      .def_static("from_angles", &LambdaCouplings::from_angles, py::arg("theta"),
                  py::arg("phi"))
      .def_static("from_axis", &LambdaCouplings::from_axis, py::arg("n"))
      .def_property_readonly("j1", &LambdaCouplings::j1)
      .def_property_readonly("j2", &LambdaCouplings::j2)
      .def_property_readonly("j4", &LambdaCouplings::j4)
      .def_property_readonly("theta", &LambdaCouplings::theta)
      .def_property_readonly("phi", &LambdaCouplings::phi)
      .def_property_readonly("axis", &LambdaCouplings::axis);

  py::class_<PulseSpec>(m, "PulseSpec")
      .def_static("square", &PulseSpec::square, py::arg("omega") = 1.0)
      .def_static("truncated_gaussian", &PulseSpec::truncated_gaussian, py::arg("tau"))
      .def_property_readonly("amplitude", &PulseSpec::amplitude)
      .def_property_readonly("duration", &PulseSpec::duration)
      .def("envelope", &PulseSpec::envelope, py::arg("t"))
      .def("area", &PulseSpec::area);

  py::class_<GateResult>(m, "GateResult")
      .def_readonly("logical_block", &GateResult::logical_block)
      .def_readonly("leakage", &GateResult::leakage)
      .def_readonly("target_distance", &GateResult::target_distance);

  m.def("one_qubit_hamiltonian", &one_qubit_hamiltonian, py::arg("couplings"));
  m.def("one_qubit_hamiltonian_ns", &one_qubit_hamiltonian_ns, py::arg("couplings"));
  m.def("evolve_pulse", &evolve_pulse, py::arg("h_normalized"), py::arg("pulse"));
  m.def("evolve_pulse_sliced", &evolve_pulse_sliced, py::arg("h_normalized"),
        py::arg("pulse"), py::arg("slices"));
  m.def("extract_gate", &extract_gate, py::arg("u"), py::arg("computational_basis"),
        py::arg("target"));
  m.def("dynamical_phase_along_path", &dynamical_phase_along_path,
        py::arg("h_normalized"), py::arg("pulse"), py::arg("basis"), py::arg("samples"));
  m.def("synthesize_su2", &synthesize_su2, py::arg("target"));
  m.def("axis_gate", &axis_gate, py::arg("n"));
  m.def("two_qubit_hamiltonian", &two_qubit_hamiltonian);
  m.def("two_qubit_ns_h0", &two_qubit_ns_h0);
  m.def("two_qubit_ns_h1", &two_qubit_ns_h1);
  m.def("two_qubit_code_isometry", &two_qubit_code_isometry, py::arg("basis"));

  py::class_<CnotVerification>(m, "CnotVerification")
      .def_readonly("gate", &CnotVerification::gate)
      .def_readonly("commutator_norm", &CnotVerification::commutator_norm)
      .def_readonly("h1_identity_residual", &CnotVerification::h1_identity_residual)
      .def_readonly("factorization_residual", &CnotVerification::factorization_residual)
      .def_readonly("restriction_residual", &CnotVerification::restriction_residual)
      .def_readonly("passed", &CnotVerification::passed);
  m.def("verify_cnot", &verify_cnot, py::arg("basis"));

  // Open-system dynamics.
  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init([](double g, double gamma_phi, double gamma, double nbar) {
             return NoiseParams{g, gamma_phi, gamma, nbar};
           }),
           py::arg("g") = 0.0, py::arg("gamma_phi") = 0.0, py::arg("gamma") = 0.0,
           py::arg("nbar") = 0.0)
      .def_readwrite("g", &NoiseParams::g)
      .def_readwrite("gamma_phi", &NoiseParams::gamma_phi)
      .def_readwrite("gamma", &NoiseParams::gamma)
      .def_readwrite("nbar", &NoiseParams::nbar);

  py::class_<BrokenErrorOps>(m, "BrokenErrorOps")
      .def_readonly("e_plus", &BrokenErrorOps::e_plus)
      .def_readonly("e_minus", &BrokenErrorOps::e_minus)
      .def_readonly("e_z", &BrokenErrorOps::e_z);
  m.def("broken_error_ops", &broken_error_ops, py::arg("g"));

  m.def("lindblad_rhs", &lindblad_rhs, py::arg("rho"), py::arg("t"), py::arg("h_s"),
        py::arg("pulse"), py::arg("params"));
  m.def("integrate", &integrate, py::arg("rho0"), py::arg("h_normalized"),
        py::arg("pulse"), py::arg("params"), py::arg("steps"));

  // The figure experiment.
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("g_values", &ExperimentConfig::g_values)
      .def_readwrite("nbar_values", &ExperimentConfig::nbar_values)
      .def_readwrite("gamma_ratio", &ExperimentConfig::gamma_ratio)
      .def_readwrite("pulse", &ExperimentConfig::pulse)
      .def_readwrite("gate", &ExperimentConfig::gate)
      .def_readwrite("nf_state", &ExperimentConfig::nf_state)
      .def_readwrite("steps", &ExperimentConfig::steps)
      .def_readwrite("output", &ExperimentConfig::output)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("check_convergence", &ExperimentConfig::check_convergence)
      .def_readwrite("threads", &ExperimentConfig::threads);
  m.def("default_experiment_config", &default_experiment_config);
  m.def("default_g_values", &default_g_values);
  m.def("parse_experiment_config", &parse_experiment_config, py::arg("json_text"));
  m.def("named_gate_axis", &named_gate_axis, py::arg("name"));

  py::class_<FidelityPoint>(m, "FidelityPoint")
      .def_readonly("g", &FidelityPoint::g)
      .def_readonly("nbar", &FidelityPoint::nbar)
      .def_readonly("f_mean", &FidelityPoint::f_mean)
      .def_property_readonly(
          "f_state",
          [](const FidelityPoint& p) {
            return std::vector<double>(p.f_state.begin(), p.f_state.end());
          })
      .def_readonly("leakage_mean", &FidelityPoint::leakage_mean);

  py::class_<FidelityCurve>(m, "FidelityCurve")
      .def_readonly("rows", &FidelityCurve::rows);

  m.def("axial_input_states", &axial_input_states, py::arg("basis"), py::arg("nf_state"));
  m.def("gate_fidelity_experiment", &gate_fidelity_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("write_curve_csv", &write_curve_csv, py::arg("curve"), py::arg("path"));
  m.def("read_curve_csv", &read_curve_csv, py::arg("path"));
  m.def("fit_small_g_slope",
        py::overload_cast<const FidelityCurve&, double, double, double>(
            &fit_small_g_slope),
        py::arg("curve"), py::arg("nbar"), py::arg("g_lo"), py::arg("g_hi"));

  py::class_<SlopeFit>(m, "SlopeFit")
      .def_readonly("slope", &SlopeFit::slope)
      .def_readonly("intercept", &SlopeFit::intercept)
      .def_readonly("points_used", &SlopeFit::points_used);

  py::class_<BatteryOptions>(m, "BatteryOptions")
      .def(py::init<>())
      .def_readwrite("seed", &BatteryOptions::seed)
      .def_readwrite("steps", &BatteryOptions::steps);
  py::class_<VerificationCheck>(m, "VerificationCheck")
      .def_readonly("name", &VerificationCheck::name)
      .def_readonly("passed", &VerificationCheck::passed)
      .def_readonly("observed", &VerificationCheck::observed)
      .def_readonly("tolerance", &VerificationCheck::tolerance)
      .def_readonly("detail", &VerificationCheck::detail);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("cycle_convention", &VerificationReport::cycle_convention)
      .def_readonly("all_passed", &VerificationReport::all_passed);
  m.def("run_verification_battery", &run_verification_battery,
        py::arg("options") = BatteryOptions{}, py::call_guard<py::gil_scoped_release>());
  m.def("verification_report_json", &to_json_string, py::arg("report"),
        py::arg("indent") = 2);
}
