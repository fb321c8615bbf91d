"""Independent oracle implementations used to cross-check the library.

Everything here deliberately avoids the library's own code paths: the
matrix exponential is a plain scaling-and-squaring Taylor series, the
advantage sum is a brute-force enumeration built from explicitly written
eigenvectors and loop-based partial traces, and the negativity route uses
LAPACK instead of the package's Jacobi solver.
"""

from __future__ import annotations

import numpy as np

_SQRT2 = np.sqrt(2.0)

# +1 / -1 eigenvectors of the three Pauli operators, written out.
PAULI_KETS = {
    "x": (np.array([1, 1], dtype=complex) / _SQRT2, np.array([1, -1], dtype=complex) / _SQRT2),
    "y": (np.array([1, 1j], dtype=complex) / _SQRT2, np.array([1, -1j], dtype=complex) / _SQRT2),
    "z": (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)),
}


def series_expm(m: np.ndarray) -> np.ndarray:
    """exp(m) by scaling-and-squaring on a plain Taylor series."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    norm = float(np.max(np.sum(np.abs(m), axis=1)))
    squarings = max(0, int(np.ceil(np.log2(norm)))) + 1 if norm > 0 else 0
    a = m / (2.0**squarings)
    term = np.eye(n, dtype=complex)
    out = np.eye(n, dtype=complex)
    for k in range(1, 60):
        term = term @ a / k
        out = out + term
        if float(np.max(np.abs(term))) < 1e-20:
            break
    for _ in range(squarings):
        out = out @ out
    return out


def partial_trace_over_a(rho4: np.ndarray) -> np.ndarray:
    """Explicit loop version of the reduced state on B."""
    out = np.zeros((2, 2), dtype=complex)
    for k in range(2):
        for l in range(2):
            for a in range(2):
                out[k, l] += rho4[2 * a + k, 2 * a + l]
    return out


def coherence_in_basis(rho2: np.ndarray, axis: str) -> float:
    """l1 coherence from explicit bra-ket sandwiches."""
    u0, u1 = PAULI_KETS[axis]
    return float(abs(u0.conj() @ rho2 @ u1) + abs(u1.conj() @ rho2 @ u0))


def naqc_sum_bruteforce(rho4: np.ndarray) -> float:
    """Advantage sum by enumerating all six projective outcomes directly."""
    total = 0.0
    for axis in "xyz":
        for bit in (0, 1):
            ket = PAULI_KETS[axis][bit]
            proj = np.kron(np.outer(ket, ket.conj()), np.eye(2, dtype=complex))
            sub = proj @ rho4 @ proj.conj().T
            p = float(np.trace(sub).real)
            if p < 1e-12:
                continue
            cond = partial_trace_over_a(sub) / p
            for coherence_axis in "xyz":
                if coherence_axis != axis:
                    total += p * coherence_in_basis(cond, coherence_axis)
    return total / 2.0


def partial_transpose_b_explicit(rho4: np.ndarray) -> np.ndarray:
    """Index-bookkeeping partial transpose on the second qubit."""
    out = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for k in range(2):
            for j in range(2):
                for l in range(2):
                    out[2 * i + l, 2 * j + k] = rho4[2 * i + k, 2 * j + l]
    return out


def negativity_lapack(rho4: np.ndarray) -> float:
    """Negativity with the partial transpose and LAPACK eigenvalues."""
    w = np.linalg.eigvalsh(partial_transpose_b_explicit(rho4))
    return max(0.0, -2.0 * float(w.min()))


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_hermitian(rng: np.random.Generator, dim: int = 4, scale: float = 1.0) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (g + g.conj().T) / 2
