"""Parametrizations mapping real optimizer vectors to code ensembles.

Schemes for free k-state ensembles (Bloch ball, M^dag M, measurement of a
global pure state) and the constrained two-state ansatz of non-orthogonal
repetition codes: an equal mixture of U|0> and U(cos(phi)|0> +
e^{i theta} sin(phi)|1>) with U a qubit unitary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .ensembles import CodeEnsemble
from .states import PAULI_X, PAULI_Y, PAULI_Z, bloch_to_dm, ket

log = logging.getLogger("permci")

_REJECT_TOL = 1e-14


class DecodeError(ValueError):
    """Parameter vector does not decode to a valid ensemble (rejected particle)."""


@dataclass(frozen=True)
class AnsatzSpec:
    """Which parametrization to search over.

    kind: "bloch", "mtm" or "measurement" for free k-state ensembles, or
    "pair" for the non-orthogonal two-state ansatz.  ``phi`` fixes the pair
    angle (None leaves it free); ``theta`` likewise.  ``d`` is the component
    dimension (qubits for "bloch"/"pair").
    """

    kind: str
    k: int = 2
    d: int = 2
    phi: float | None = None
    theta: float | None = None

    def __post_init__(self):
        if self.kind not in ("bloch", "mtm", "measurement", "pair"):
            raise ValueError(f"unknown ansatz kind {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.kind == "pair" and self.k != 2:
            raise ValueError("the pair ansatz has exactly two states")
        if self.kind in ("bloch", "pair") and self.d != 2:
            raise ValueError(f"{self.kind} ansatz is for qubits")
        if self.phi is not None and not 0.0 <= self.phi <= np.pi / 2:
            raise ValueError("phi must lie in [0, pi/2]")

    @property
    def dims(self) -> int:
        if self.kind == "bloch":
            return self.k + 3 * self.k
        if self.kind == "mtm":
            return self.k + 2 * self.k * self.d * self.d
        if self.kind == "measurement":
            return 2 * self.k * self.d * self.d
        dims = 4  # unitary parameters
        if self.theta is None:
            dims += 1
        if self.phi is None:
            dims += 1
        return dims

    def bounds(self) -> np.ndarray:
        if self.kind == "bloch":
            b = [(0.0, 1.0)] * self.k + [(-20.0, 20.0)] * (3 * self.k)
        elif self.kind == "mtm":
            b = [(0.0, 1.0)] * self.k + [(-1.0, 1.0)] * (2 * self.k * self.d ** 2)
        elif self.kind == "measurement":
            b = [(-1.0, 1.0)] * (2 * self.k * self.d ** 2)
        else:
            b = [(-np.pi, np.pi)] * 4
            if self.theta is None:
                b.append((-np.pi, np.pi))
            if self.phi is None:
                b.append((0.0, np.pi / 2))
        return np.array(b, dtype=float)

    def decode(self, x, n: int) -> CodeEnsemble:
        x = np.asarray(x, dtype=float)
        if x.size != self.dims:
            raise DecodeError(f"expected {self.dims} parameters, got {x.size}")
        if self.kind == "bloch":
            return decode_bloch(x, self.k, n)
        if self.kind == "mtm":
            return decode_mtm(x, self.k, self.d, n)
        if self.kind == "measurement":
            return decode_measurement(x, self.k, self.d, n)
        theta = self.theta if self.theta is not None else x[4]
        phi = self.phi if self.phi is not None else x[-1]
        return pair_ensemble(n, phi, theta, unitary_from_params(x[:4]))


def _decode_probs(raw: np.ndarray) -> np.ndarray:
    # Normalized absolute values; an all-zero block falls back to uniform.
    w = np.abs(np.asarray(raw, dtype=float))
    tot = w.sum()
    if tot < _REJECT_TOL:
        return np.full(w.size, 1.0 / w.size)
    return w / tot


def decode_bloch(x, k: int, n: int) -> CodeEnsemble:
    """k weight parameters, then 3 per state mapped into the open Bloch ball.

    The raw 3-vector s becomes the Bloch vector s/(1 + |s|), so every decode
    is a strictly valid (possibly mixed) qubit state.
    """
    x = np.asarray(x, dtype=float)
    if x.size != 4 * k:
        raise DecodeError(f"expected {4 * k} parameters, got {x.size}")
    probs = _decode_probs(x[:k])
    states = []
    for j in range(k):
        s = x[k + 3 * j:k + 3 * (j + 1)]
        r = s / (1.0 + np.linalg.norm(s))
        states.append(bloch_to_dm(r))
    return CodeEnsemble(n=n, weights=probs, states=tuple(states))


def decode_mtm(x, k: int, d: int, n: int) -> CodeEnsemble:
    """k weights, then 2d^2 reals per state building rho = M^dag M / tr(M^dag M)."""
    x = np.asarray(x, dtype=float)
    if x.size != k + 2 * k * d * d:
        raise DecodeError(f"expected {k + 2 * k * d * d} parameters, got {x.size}")
    probs = _decode_probs(x[:k])
    states = []
    off = k
    for _ in range(k):
        block = x[off:off + 2 * d * d]
        off += 2 * d * d
        m = (block[:d * d] + 1j * block[d * d:]).reshape(d, d)
        gram = m.conj().T @ m
        tr = np.trace(gram).real
        if tr < _REJECT_TOL:
            raise DecodeError("zero matrix cannot be normalized to a state")
        states.append(gram / tr)
    return CodeEnsemble(n=n, weights=probs, states=tuple(states))


def decode_measurement(x, k: int, d: int, n: int) -> CodeEnsemble:
    """A global unit vector on C^k ox C^{d^2}, measured on the index register.

    Block j of the normalized vector yields probability p_j = <phi'_j|phi'_j>
    (summing to 1 exactly) and state rho_j by tracing out the second d-dim
    factor of the renormalized block.  Blocks of negligible weight are
    dropped and the rest renormalized (logged).
    """
    x = np.asarray(x, dtype=float)
    if x.size != 2 * k * d * d:
        raise DecodeError(f"expected {2 * k * d * d} parameters, got {x.size}")
    raw = x[:k * d * d] + 1j * x[k * d * d:]
    nrm = np.linalg.norm(raw)
    if nrm < _REJECT_TOL:
        raise DecodeError("zero vector cannot be normalized")
    psi = (raw / nrm).reshape(k, d, d)
    probs = []
    states = []
    dropped = 0.0
    for j in range(k):
        p = float(np.sum(np.abs(psi[j]) ** 2))
        if p < _REJECT_TOL:
            dropped += p
            continue
        block = psi[j] / np.sqrt(p)
        probs.append(p)
        states.append(block @ block.conj().T)
    if not states:
        raise DecodeError("all components have negligible weight")
    if dropped > 0.0 or len(states) < k:
        log.debug("dropped %d negligible components (weight %.3g)",
                  k - len(states), dropped)
    probs = np.array(probs)
    return CodeEnsemble(n=n, weights=probs / probs.sum(), states=tuple(states))


# ---------------------------------------------------------------------------
# Non-orthogonal pair ansatz
# ---------------------------------------------------------------------------

def unitary_from_params(params) -> np.ndarray:
    """U = exp(i (a . sigma + b I)) from 4 reals; smooth and onto U(2)."""
    a1, a2, a3, b = (float(v) for v in params)
    h = a1 * PAULI_X + a2 * PAULI_Y + a3 * PAULI_Z + b * np.eye(2)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def pair_kets(phi: float, theta: float, unitary=None) -> tuple[np.ndarray, np.ndarray]:
    """The two ansatz states U|0> and U(cos(phi)|0> + e^{i theta} sin(phi)|1>)."""
    k1 = np.array([1.0, 0.0], dtype=complex)
    k2 = np.array([np.cos(phi), np.exp(1j * theta) * np.sin(phi)], dtype=complex)
    if unitary is not None:
        u = np.asarray(unitary, dtype=complex)
        k1 = u @ k1
        k2 = u @ k2
    return k1, k2


def pair_ensemble(n: int, phi: float, theta: float, unitary=None) -> CodeEnsemble:
    """Equal mixture of the two ansatz states, each taken to the n-th tensor power."""
    k1, k2 = pair_kets(phi, theta, unitary)
    return CodeEnsemble.from_kets(n, [0.5, 0.5], [k1, k2])


def pair_params_for_states(psi1, psi2, theta: float = 0.0):
    """Recover (unitary, phi) so the ansatz at (phi, theta, U) hits two given states.

    phi = arccos |<psi1|psi2>|; U maps |0> onto psi1 (up to phase) and |1>
    onto the Gram-Schmidt complement with the phase absorbing e^{i theta}.
    Useful for pinning published code states inside the ansatz family.
    """
    psi1 = ket(psi1)
    psi2 = ket(psi2)
    overlap = np.vdot(psi1, psi2)
    phi = float(np.arccos(np.clip(abs(overlap), 0.0, 1.0)))
    rem = psi2 - overlap * psi1
    nrm = np.linalg.norm(rem)
    if nrm < 1e-12:
        # parallel states: any completion works
        b1 = np.array([-np.conj(psi1[1]), np.conj(psi1[0])])
    else:
        b1 = rem / nrm
    phase1 = overlap / abs(overlap) if abs(overlap) > 1e-12 else 1.0
    u = np.column_stack([phase1 * psi1, np.exp(-1j * theta) * b1])
    return u, phi
