"""Dense complex matrix arithmetic and spectral routines for 2x2 and 4x4 operators.

Everything here is a pure function on immutable values: inputs are never
mutated and results are freshly allocated, so grid points can be evaluated
in parallel without locking.

Basis convention, fixed globally: two-qubit matrices are indexed in the
product order |00>, |01>, |10>, |11> with qubit A the left tensor factor.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import ConvergenceError, DimensionError, NotHermitianError

HERMITICITY_TOL = 1e-10
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Permutation that exchanges the two tensor slots, |ab> -> |ba>.
SWAP = np.zeros((4, 4), dtype=complex)
for _i, _j in enumerate((0, 2, 1, 3)):
    SWAP[_i, _j] = 1.0
del _i, _j


class Subsystem(Enum):
    A = "a"
    B = "b"


def as_matrix(a: np.ndarray, dims: tuple[int, ...] = (2, 4)) -> np.ndarray:
    """Coerce to a square complex array of an allowed dimension."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in dims:
        raise DimensionError(f"expected a square matrix with dim in {dims}, got shape {m.shape}")
    return m


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T.copy()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 blocks, subsystem A major:
    kron(A, B)[2i+k, 2j+l] == A[i, j] * B[k, l]."""
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    return np.kron(a, b)


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(as_matrix(a)))


def hermitize(a: np.ndarray) -> np.ndarray:
    """Hermitian part (A + A^dagger) / 2."""
    a = np.asarray(a, dtype=complex)
    return (a + a.conj().T) / 2


def partial_trace(rho: np.ndarray, keep: Subsystem) -> np.ndarray:
    """Reduced 2x2 matrix over the kept subsystem; preserves the trace."""
    rho = as_matrix(rho, dims=(4,))
    r4 = rho.reshape(2, 2, 2, 2)
    if keep is Subsystem.A:
        return np.trace(r4, axis1=1, axis2=3)
    return np.trace(r4, axis1=0, axis2=2)


def partial_transpose(rho: np.ndarray, on: Subsystem) -> np.ndarray:
    """Transpose the indices of one subsystem only. Involutive and
    trace-preserving for every input."""
    rho = as_matrix(rho, dims=(4,))
    r4 = rho.reshape(2, 2, 2, 2)
    if on is Subsystem.B:
        return r4.transpose(0, 3, 2, 1).reshape(4, 4)
    return r4.transpose(2, 1, 0, 3).reshape(4, 4)


def swap_subsystems(rho: np.ndarray) -> np.ndarray:
    """Exchange the roles of qubits A and B."""
    rho = as_matrix(rho, dims=(4,))
    return SWAP @ rho @ SWAP


def off_diagonal_norm(a: np.ndarray) -> float:
    d = np.diag(np.diag(a))
    return float(np.linalg.norm(a - d))


def hermitian_eigenvalues(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Eigenvalues of a 4x4 Hermitian matrix, ascending, by cyclic complex
    Jacobi rotations.

    Each rotation zeroes one off-diagonal pair (p, q) exactly: the pair is
    first rephased so the pivot is real, then annihilated with the standard
    symmetric Jacobi angle. Sweeps repeat until the off-diagonal Frobenius
    norm drops below JACOBI_OFF_TOL, with a hard cap of JACOBI_MAX_SWEEPS.

    Inputs within ``tol`` of Hermitian are symmetrized as (A + A^dagger)/2
    before solving; anything further away raises NotHermitianError.
    """
    a = as_matrix(a, dims=(4,))
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise NotHermitianError("matrix contains non-finite entries")
    if float(np.max(np.abs(a - a.conj().T))) > tol:
        raise NotHermitianError(f"matrix deviates from Hermitian by more than {tol}")
    m = hermitize(a)
    n = m.shape[0]
    # absolute 1e-13 for unit-scale inputs (density matrices), relative beyond
    scale = max(1.0, float(np.linalg.norm(m)))
    off_tol = JACOBI_OFF_TOL * scale
    pivot_floor = 2.3e-16 * scale  # at roundoff level, rotations cannot help
    for _ in range(JACOBI_MAX_SWEEPS):
        if off_diagonal_norm(m) < off_tol:
            return np.sort(m.diagonal().real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= pivot_floor:
                    continue
                phase = apq / abs(apq)
                tau = (m[q, q].real - m[p, p].real) / (2.0 * abs(apq))
                if tau >= 0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # m <- R^dagger m R with R the identity outside rows/cols p, q
                rp = m[p, :].copy()
                rq = m[q, :].copy()
                m[p, :] = c * rp - s * phase * rq
                m[q, :] = s * rp + c * phase * rq
                cp = m[:, p].copy()
                cq = m[:, q].copy()
                m[:, p] = c * cp - s * np.conj(phase) * cq
                m[:, q] = s * cp + c * np.conj(phase) * cq
    if off_diagonal_norm(m) < off_tol:
        return np.sort(m.diagonal().real)
    raise ConvergenceError(f"Jacobi sweeps exceeded {JACOBI_MAX_SWEEPS} without converging")
