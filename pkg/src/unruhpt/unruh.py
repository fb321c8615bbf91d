"""Bell-pair preparation and the single-mode acceleration channel.

A uniformly accelerated qubit mode splits into two causally disconnected
wedge modes; tracing the inaccessible wedge leaves a damping-like channel
on the accessible one, parameterized by an acceleration angle r in
[0, pi/4]. The channel is applied as a two-element Kraus map rather than by
constructing the enlarged wedge space; the two routes agree algebraically
after the partial trace, which the verify report checks against the
closed-form matrices below.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .errors import DomainError, NotHermitianError
from .linalg import ID2, Subsystem, hermitize

R_MAX = np.pi / 4

TRACE_TOL = 1e-10
PSD_TOL = 1e-9
KRAUS_TOL = 1e-12


class Scenario(Enum):
    NONE = "none"
    FIRST_ONLY = "first_only"
    BOTH = "both"


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """Validated 4x4 density matrix in the |00>,|01>,|10>,|11> basis.

    Construction checks Hermiticity and unit trace; positivity is
    guaranteed structurally by every producing map in this package and can
    be re-verified on demand with :meth:`validate`.
    """

    rho: np.ndarray

    def __post_init__(self) -> None:
        m = linalg.as_matrix(self.rho, dims=(4,))
        if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
            raise ValueError("density matrix contains non-finite entries")
        if float(np.max(np.abs(m - m.conj().T))) > linalg.HERMITICITY_TOL:
            raise NotHermitianError("density matrix is not Hermitian within 1e-10")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError("density matrix trace differs from 1 beyond 1e-10")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "rho", m)

    @classmethod
    def from_matrix(cls, rho: np.ndarray) -> "TwoQubitState":
        """Construct with the full invariant check, positivity included."""
        state = cls(rho)
        state.validate()
        return state

    def validate(self) -> "TwoQubitState":
        eig = linalg.hermitian_eigenvalues(self.rho)
        if eig[0] < -PSD_TOL:
            raise ValueError(f"density matrix has eigenvalue {eig[0]:.3e} below -{PSD_TOL}")
        return self


@dataclass(frozen=True)
class AccelerationSpec:
    """Acceleration angle r (radians) and which qubits undergo the channel."""

    r: float
    scenario: Scenario

    def __post_init__(self) -> None:
        if not np.isfinite(self.r) or not 0.0 <= self.r <= R_MAX:
            raise DomainError(f"acceleration r={self.r!r} outside [0, pi/4]")


@dataclass(frozen=True, eq=False)
class KrausPair:
    """Two-element Kraus map; k0'k0 + k1'k1 must resolve the identity."""

    k0: np.ndarray
    k1: np.ndarray

    def __post_init__(self) -> None:
        k0 = linalg.as_matrix(self.k0, dims=(2,))
        k1 = linalg.as_matrix(self.k1, dims=(2,))
        comp = k0.conj().T @ k0 + k1.conj().T @ k1
        if float(np.max(np.abs(comp - ID2))) > KRAUS_TOL:
            raise ValueError("Kraus pair does not satisfy the completeness relation")
        object.__setattr__(self, "k0", k0)
        object.__setattr__(self, "k1", k1)


def bell_phi_plus() -> TwoQubitState:
    """Maximally entangled pair (|00> + |11>)/sqrt(2) as a density matrix."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[0, 3] = rho[3, 0] = rho[3, 3] = 0.5
    return TwoQubitState(rho)


def unruh_kraus(r: float) -> KrausPair:
    """Kraus pair of the acceleration channel:
    K0 = diag(cos r, 1), K1 = sin(r) |1><0|."""
    if not np.isfinite(r) or not 0.0 <= r <= R_MAX:
        raise DomainError(f"acceleration r={r!r} outside [0, pi/4]")
    k0 = np.array([[np.cos(r), 0.0], [0.0, 1.0]], dtype=complex)
    k1 = np.array([[0.0, 0.0], [np.sin(r), 0.0]], dtype=complex)
    return KrausPair(k0, k1)


def apply_channel(state: TwoQubitState, kraus: KrausPair, target: Subsystem) -> TwoQubitState:
    """rho' = sum_m (K_m ox I) rho (K_m ox I)^dagger for target A, and with
    the factors swapped for target B. Trace and positivity are preserved."""
    out = np.zeros((4, 4), dtype=complex)
    for k in (kraus.k0, kraus.k1):
        m = linalg.kron(k, ID2) if target is Subsystem.A else linalg.kron(ID2, k)
        out += m @ state.rho @ m.conj().T
    return TwoQubitState(hermitize(out))


def accelerate(state: TwoQubitState, spec: AccelerationSpec) -> TwoQubitState:
    """Apply the acceleration channel per scenario. The two single-qubit
    channels act on disjoint subsystems and therefore commute."""
    if spec.scenario is Scenario.NONE:
        return state
    kraus = unruh_kraus(spec.r)
    out = apply_channel(state, kraus, Subsystem.A)
    if spec.scenario is Scenario.BOTH:
        out = apply_channel(out, kraus, Subsystem.B)
    return out


def reference_single_accelerated(r: float) -> np.ndarray:
    """Closed-form density matrix for a Bell pair with one accelerated qubit,
    transcribed for cross-checking.

    Note the damped population sits on the |01><01| slot here, whereas the
    channel acting on qubit A puts it on |10><10|; the verify report compares
    both placements instead of silently adopting one.
    """
    c, s = np.cos(r), np.sin(r)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = c * c / 2
    m[1, 1] = s * s / 2
    m[0, 3] = m[3, 0] = c / 2
    m[3, 3] = 0.5
    return m


def reference_both_accelerated(r: float) -> np.ndarray:
    """Closed-form density matrix for a Bell pair with both qubits
    accelerated: diag(cos^4 r, sin^2(2r)/4, sin^2(2r)/4, sin^4 r + 1)/2 with
    corner coherences cos^2(r)/2."""
    c = np.cos(r)
    mu = np.sin(r) ** 4 + 1.0
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = c**4 / 2
    m[1, 1] = m[2, 2] = np.sin(2 * r) ** 2 / 8
    m[0, 3] = m[3, 0] = c * c / 2
    m[3, 3] = mu / 2
    return m
