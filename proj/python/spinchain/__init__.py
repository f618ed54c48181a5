"""Qubit-state transfer through ferromagnetic spin chains with power-law coupling."""

from ._core import (
    ChainSpec,
    ConsistencyError,
    CouplingTable,
    FidelityTrace,
    FmFt,
    HamiltonianMatrix,
    HoleTreatment,
    NumericalError,
    OracleComparison,
    ProjectionSet,
    SpectralData,
    SweepRequest,
    SweepResult,
    SweepRow,
    TransferReport,
    ValidationError,
    Variant,
    build_couplings,
    build_full_space_hamiltonian,
    build_single_excitation_hamiltonian,
    compare_to_oracle,
    decompose_fm_ft,
    eigendecompose,
    estimate_transfer_time,
    fidelity,
    find_transfer_event,
    gap_delta12,
    ideal_transfer_time,
    make_spec,
    project_to_single_excitation,
    projections,
    propagator_amplitude,
    run_fidelity_trace,
    run_sweep,
    variant_label,
)

__all__ = [
    "ChainSpec",
    "ConsistencyError",
    "CouplingTable",
    "FidelityTrace",
    "FmFt",
    "HamiltonianMatrix",
    "HoleTreatment",
    "NumericalError",
    "OracleComparison",
    "ProjectionSet",
    "SpectralData",
    "SweepRequest",
    "SweepResult",
    "SweepRow",
    "TransferReport",
    "ValidationError",
    "Variant",
    "build_couplings",
    "build_full_space_hamiltonian",
    "build_single_excitation_hamiltonian",
    "compare_to_oracle",
    "decompose_fm_ft",
    "eigendecompose",
    "estimate_transfer_time",
    "fidelity",
    "find_transfer_event",
    "gap_delta12",
    "ideal_transfer_time",
    "make_spec",
    "project_to_single_excitation",
    "projections",
    "propagator_amplitude",
    "run_fidelity_trace",
    "run_sweep",
    "variant_label",
]
