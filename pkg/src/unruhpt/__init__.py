"""Desk-scale study of a Bell pair under acceleration: entanglement
negativity and the nonlocal advantage of quantum coherence, their loss under
the acceleration channel, and recovery by local PT-symmetric operations."""

from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    IoError,
    NotHermitianError,
    SingularEvolutionError,
    UnknownPresetError,
)
from .linalg import (
    ID2,
    ID4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    Subsystem,
    dagger,
    hermitian_eigenvalues,
    kron,
    mat_mul,
    partial_trace,
    partial_transpose,
    trace,
)
from .measures import (
    NAQC_CONSTANTS,
    MeasurementOutcome,
    NaqcConstants,
    PauliAxis,
    l1_coherence,
    measure_on_a,
    naqc,
    naqc_sum,
    negativity,
)
from .presets import curve_filename, figure_preset, preset_names
from .ptsym import (
    PTParams,
    PTTarget,
    ResidualEntry,
    VerificationReport,
    evolve,
    h_pt,
    u_pt,
    verify_closed_forms,
)
from .sweep import MeasureRecord, SweepSpec, csv_text, emit_csv, run_sweep
from .unruh import (
    AccelerationSpec,
    KrausPair,
    R_MAX,
    Scenario,
    TwoQubitState,
    accelerate,
    apply_channel,
    bell_phi_plus,
    unruh_kraus,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationSpec",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "ID2",
    "ID4",
    "IoError",
    "KrausPair",
    "MeasureRecord",
    "MeasurementOutcome",
    "NAQC_CONSTANTS",
    "NaqcConstants",
    "NotHermitianError",
    "PTParams",
    "PTTarget",
    "PauliAxis",
    "R_MAX",
    "ResidualEntry",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "Scenario",
    "SingularEvolutionError",
    "Subsystem",
    "SweepSpec",
    "TwoQubitState",
    "UnknownPresetError",
    "VerificationReport",
    "accelerate",
    "apply_channel",
    "bell_phi_plus",
    "csv_text",
    "curve_filename",
    "dagger",
    "emit_csv",
    "evolve",
    "figure_preset",
    "h_pt",
    "hermitian_eigenvalues",
    "kron",
    "l1_coherence",
    "mat_mul",
    "measure_on_a",
    "naqc",
    "naqc_sum",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "preset_names",
    "run_sweep",
    "trace",
    "u_pt",
    "unruh_kraus",
    "verify_closed_forms",
    "__version__",
]
