"""Entanglement negativity, l1 coherence, and the nonlocal coherence advantage.

The advantage protocol: one party measures a Pauli observable on their
qubit and announces the observable and outcome; the other party evaluates
the l1 coherence of their conditioned qubit in the two complementary Pauli
eigenbases. Averaged over observables and outcomes, a value above sqrt(6)
cannot be reached by any single qubit alone, which is the nonlocality
criterion; the degree is that excess normalized by the two-qubit maximum 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .linalg import ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, Subsystem
from .unruh import TwoQubitState

PROBABILITY_TOL = 1e-12


class PauliAxis(Enum):
    X = "x"
    Y = "y"
    Z = "z"


@dataclass(frozen=True)
class NaqcConstants:
    """Critical single-qubit bound and two-qubit maximum of the advantage sum."""

    c_m: float = float(np.sqrt(6.0))
    c_max: float = 3.0


NAQC_CONSTANTS = NaqcConstants()

_PAULI = {PauliAxis.X: SIGMA_X, PauliAxis.Y: SIGMA_Y, PauliAxis.Z: SIGMA_Z}

# Columns are the +1 and -1 eigenvectors of each Pauli operator.
_EIGENBASIS = {
    PauliAxis.X: np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    PauliAxis.Y: np.array([[1, 1], [1j, -1j]], dtype=complex) / np.sqrt(2),
    PauliAxis.Z: ID2,
}

# Measurement operators (projector on A) tensor identity, built once.
_MEASUREMENT_OPS = {
    (axis, bit): np.kron((ID2 + (-1) ** bit * _PAULI[axis]) / 2, ID2)
    for axis in PauliAxis
    for bit in (0, 1)
}


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    """Outcome probability and the conditioned partner state.

    ``conditioned`` is None when the probability is numerically zero; such
    outcomes are defined to contribute nothing downstream.
    """

    probability: float
    conditioned: np.ndarray | None


def negativity(state: TwoQubitState) -> float:
    """max(0, -2 min eigenvalue) of the state partially transposed on the
    second subsystem. 1 for a Bell pair, 0 for separable two-qubit states."""
    spectrum = linalg.hermitian_eigenvalues(linalg.partial_transpose(state.rho, Subsystem.B))
    return max(0.0, -2.0 * float(spectrum[0]))


def l1_coherence(rho: np.ndarray, basis: PauliAxis) -> float:
    """Sum of absolute off-diagonal elements of a qubit state expressed in
    the chosen Pauli eigenbasis."""
    rho = linalg.as_matrix(rho, dims=(2,))
    v = _EIGENBASIS[basis]
    m = v.conj().T @ rho @ v
    return float(abs(m[0, 1]) + abs(m[1, 0]))


def measure_on_a(state: TwoQubitState, axis: PauliAxis, outcome_bit: int) -> MeasurementOutcome:
    """Project qubit A onto the outcome_bit eigenspace of the chosen Pauli.

    probability = tr[(P ox I) rho]; the conditioned state is the reduced B
    matrix of the projected state, renormalized. Below PROBABILITY_TOL the
    conditioned state is undefined (None), not an error.
    """
    if outcome_bit not in (0, 1):
        raise ValueError(f"outcome_bit must be 0 or 1, got {outcome_bit!r}")
    op = _MEASUREMENT_OPS[(axis, outcome_bit)]
    projected = op @ state.rho @ op
    p = float(np.trace(projected).real)
    if p < PROBABILITY_TOL:
        return MeasurementOutcome(max(p, 0.0), None)
    conditioned = linalg.hermitize(linalg.partial_trace(projected, Subsystem.B) / p)
    return MeasurementOutcome(p, conditioned)


def naqc_sum(state: TwoQubitState, measured_party: Subsystem = Subsystem.A) -> float:
    """Advantage sum (1/2) sum_{i,a,j != i} p(a|i) C_l1^j(conditioned state).

    i runs over the measured Pauli, a over outcomes, j over the two
    complementary coherence bases. Zero-probability outcomes carry weight 0.
    The measured party defaults to the first tensor factor; pass B to swap
    roles (the state is relabeled, the protocol is unchanged).
    """
    if measured_party is Subsystem.B:
        state = TwoQubitState(linalg.swap_subsystems(state.rho))
    total = 0.0
    for axis in PauliAxis:
        for bit in (0, 1):
            outcome = measure_on_a(state, axis, bit)
            if outcome.conditioned is None:
                continue
            for coherence_axis in PauliAxis:
                if coherence_axis is not axis:
                    total += outcome.probability * l1_coherence(outcome.conditioned, coherence_axis)
    return total / 2.0


def naqc(state: TwoQubitState, measured_party: Subsystem = Subsystem.A) -> float:
    """Normalized advantage degree max(0, (S - sqrt 6) / (3 - sqrt 6)) in [0, 1]."""
    s = naqc_sum(state, measured_party)
    c = NAQC_CONSTANTS
    return max(0.0, (s - c.c_m) / (c.c_max - c.c_m))
