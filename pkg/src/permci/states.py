"""Small helpers for qubit/qudit states: kets, density matrices, Bloch vectors."""

from __future__ import annotations

import numpy as np

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

HERM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_FLOOR = -1e-10


def ket(v) -> np.ndarray:
    """Normalized state vector."""
    v = np.asarray(v, dtype=complex).ravel()
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise ValueError("zero vector cannot be normalized")
    return v / nrm


def dm(v) -> np.ndarray:
    """Density matrix |v><v| of a (not necessarily normalized) vector."""
    v = ket(v)
    return np.outer(v, v.conj())


def bloch_to_dm(r) -> np.ndarray:
    """Qubit density matrix (I + r . sigma)/2; requires |r| <= 1."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise ValueError("Bloch vector must have 3 components")
    if np.linalg.norm(r) > 1.0 + 1e-9:
        raise ValueError(f"Bloch vector has norm {np.linalg.norm(r)} > 1")
    rho = (PAULI_I + r[0] * PAULI_X + r[1] * PAULI_Y + r[2] * PAULI_Z) / 2.0
    return rho


def dm_to_bloch(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return np.array([np.trace(rho @ p).real for p in (PAULI_X, PAULI_Y, PAULI_Z)])


def bloch_to_ket(r) -> np.ndarray:
    """Pure qubit state closest to the Bloch point r (top eigenvector).

    Accepts vectors of norm slightly off 1 (tabulated states rounded to a few
    decimals) and projects onto the surface of the sphere.
    """
    rho = bloch_to_dm(np.asarray(r, dtype=float) / max(1.0, np.linalg.norm(r)))
    w, v = np.linalg.eigh(rho)
    return v[:, -1]


def is_density_matrix(rho, herm_tol: float = HERM_TOL,
                      psd_floor: float = PSD_FLOOR,
                      trace_tol: float = TRACE_TOL) -> bool:
    """Hermitian within herm_tol, eigenvalues >= psd_floor, trace 1 within trace_tol."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - rho.conj().T)) > herm_tol:
        return False
    if abs(np.trace(rho) - 1.0) > trace_tol:
        return False
    return float(np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2.0))) >= psd_floor


def random_ket(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return ket(v)


def random_density_matrix(d: int, rng: np.random.Generator,
                          rank: int | None = None) -> np.ndarray:
    rank = d if rank is None else rank
    m = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = m @ m.conj().T
    return rho / np.trace(rho).real
