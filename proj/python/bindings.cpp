#include "spinchain/chain_model.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/full_space.hpp"
#include "spinchain/spectral.hpp"
#include "spinchain/transfer.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spinchain;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qubit transfer through ferromagnetic spin chains with power-law coupling";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init<>())
      .def_readwrite("n_sites", &ChainSpec::n_sites)
      .def_readwrite("nu", &ChainSpec::nu)
      .def_readwrite("holes", &ChainSpec::holes)
      .def_readwrite("sender", &ChainSpec::sender)
      .def_readwrite("receiver", &ChainSpec::receiver)
      .def_readwrite("lattice_spacing", &ChainSpec::lattice_spacing)
      .def_readwrite("nn_energy", &ChainSpec::nn_energy)
      .def("validate", &ChainSpec::validate)
      .def("occupied_sites", &ChainSpec::occupied_sites)
      .def("label", &ChainSpec::label)
      .def("__repr__", [](const ChainSpec& s) { return "<ChainSpec " + s.label() + ">"; });

  py::enum_<Variant>(m, "Variant")
      .value("complete", Variant::complete)
      .value("double_hole", Variant::double_hole)
      .value("custom", Variant::custom);

  py::enum_<HoleTreatment>(m, "HoleTreatment")
      .value("drop", HoleTreatment::drop)
      .value("keep", HoleTreatment::keep);

  py::class_<CouplingTable>(m, "CouplingTable")
      .def_readonly("n_sites", &CouplingTable::n_sites)
      .def_readonly("values", &CouplingTable::values)
      .def("at", &CouplingTable::at, py::arg("site_i"), py::arg("site_j"));

  py::class_<HamiltonianMatrix>(m, "HamiltonianMatrix")
      .def_readonly("entries", &HamiltonianMatrix::entries)
      .def_readonly("basis_sites", &HamiltonianMatrix::basis_sites)
      .def_property_readonly("dim", &HamiltonianMatrix::dim)
      .def("row_of_site", &HamiltonianMatrix::row_of_site, py::arg("site"));

  py::class_<SpectralData>(m, "SpectralData")
      .def_readonly("eigenvalues", &SpectralData::eigenvalues)
      .def_readonly("eigenvectors", &SpectralData::eigenvectors)
      .def_readonly("basis_sites", &SpectralData::basis_sites)
      .def_property_readonly("dim", &SpectralData::dim);

  py::class_<ProjectionSet>(m, "ProjectionSet")
      .def_readonly("sigma_abs", &ProjectionSet::sigma_abs)
      .def_readonly("sigma_phase", &ProjectionSet::sigma_phase)
      .def_readonly("rho_abs", &ProjectionSet::rho_abs)
      .def_readonly("rho_phase", &ProjectionSet::rho_phase)
      .def_readonly("gamma_sq", &ProjectionSet::gamma_sq);

  py::class_<FmFt>(m, "FmFt")
      .def_readonly("f_m", &FmFt::f_m)
      .def_readonly("f_t", &FmFt::f_t);

  py::class_<TransferReport>(m, "TransferReport")
      .def_readonly("t_ideal", &TransferReport::t_ideal)
      .def_readonly("t_estimate", &TransferReport::t_estimate)
      .def_readonly("t_measured", &TransferReport::t_measured)
      .def_readonly("f_max", &TransferReport::f_max)
      .def_readonly("fidelity_max", &TransferReport::fidelity_max)
      .def_readonly("ratio_ideal_over_measured", &TransferReport::ratio_ideal_over_measured);

  py::class_<FidelityTrace>(m, "FidelityTrace")
      .def_readonly("times", &FidelityTrace::times)
      .def_readonly("f_abs", &FidelityTrace::f_abs)
      .def_readonly("fidelity", &FidelityTrace::fidelity)
      .def_readonly("f_m", &FidelityTrace::f_m)
      .def_readonly("spec", &FidelityTrace::spec);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n_sites", &SweepRow::n_sites)
      .def_readonly("variant", &SweepRow::variant)
      .def_readonly("report", &SweepRow::report)
      .def_readonly("delta12", &SweepRow::delta12)
      .def_readonly("f_m", &SweepRow::f_m)
      .def_readonly("gamma1_sq", &SweepRow::gamma1_sq)
      .def_readonly("gamma2_sq", &SweepRow::gamma2_sq)
      .def_readonly("error", &SweepRow::error);

  py::class_<SweepRequest>(m, "SweepRequest")
      .def(py::init<>())
      .def_readwrite("n_values", &SweepRequest::n_values)
      .def_readwrite("nu", &SweepRequest::nu)
      .def_readwrite("variants", &SweepRequest::variants)
      .def_readwrite("custom_holes", &SweepRequest::custom_holes)
      .def_readwrite("window_factor", &SweepRequest::window_factor)
      .def_readwrite("coarse_steps", &SweepRequest::coarse_steps);

  py::class_<SweepResult>(m, "SweepResult").def_readonly("rows", &SweepResult::rows);

  py::class_<OracleComparison>(m, "OracleComparison")
      .def_readonly("shift", &OracleComparison::shift)
      .def_readonly("max_deviation", &OracleComparison::max_deviation)
      .def_readonly("site_row", &OracleComparison::site_row)
      .def_readonly("site_col", &OracleComparison::site_col);

  m.def("make_spec", &make_spec, py::arg("n_sites"), py::arg("nu"), py::arg("variant"),
        py::arg("custom_holes") = std::set<int>{});
  m.def("variant_label", &variant_label, py::arg("variant"));
  m.def("build_couplings", &build_couplings, py::arg("spec"));
  m.def("build_single_excitation_hamiltonian", &build_single_excitation_hamiltonian,
        py::arg("spec"), py::arg("holes") = HoleTreatment::drop);
  m.def("build_full_space_hamiltonian", &build_full_space_hamiltonian, py::arg("spec"));
  m.def("project_to_single_excitation", &project_to_single_excitation, py::arg("full"),
        py::arg("spec"), py::arg("holes") = HoleTreatment::drop);
  m.def("compare_to_oracle", &compare_to_oracle, py::arg("lhs"), py::arg("rhs"));
  m.def("eigendecompose", &eigendecompose, py::arg("h"));
  m.def("projections", &projections, py::arg("sd"), py::arg("sender"), py::arg("receiver"));
  m.def("gap_delta12", &gap_delta12, py::arg("sd"));
  m.def("propagator_amplitude", &propagator_amplitude, py::arg("sd"), py::arg("sender"),
        py::arg("receiver"), py::arg("t"));
  m.def("fidelity", &fidelity, py::arg("f_abs"));
  m.def("decompose_fm_ft", &decompose_fm_ft, py::arg("projections"), py::arg("eigenvalues"),
        py::arg("t"));
  m.def("ideal_transfer_time", &ideal_transfer_time, py::arg("distance_units"), py::arg("nu"));
  m.def("estimate_transfer_time", &estimate_transfer_time, py::arg("sd"));
  m.def("find_transfer_event", &find_transfer_event, py::arg("sd"), py::arg("sender"),
        py::arg("receiver"), py::arg("nu"), py::arg("t_max"), py::arg("coarse_steps") = 20000);
  m.def("run_fidelity_trace", &run_fidelity_trace, py::arg("spec"), py::arg("t_max"),
        py::arg("samples"));
  m.def("run_sweep", &run_sweep, py::arg("request"));
}
