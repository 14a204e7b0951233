"""Kraus-operator channels: named constructors, linear action, complementary channel.

The environment dimension equals the number of Kraus operators kept; named
constructors keep or drop zero-weight operators so that downstream block
structures have the intended environment dimension (the 2-Pauli channel keeps
3 operators, BB84 and the general Pauli channel keep all 4, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z

TRACE_PRESERVE_TOL = 1e-12
_PROB_TOL = 1e-12


@dataclass(eq=False, frozen=True)
class KrausChannel:
    """A CPTP map given by Kraus operators of shape (d_out, d_in).

    d_env equals the number of Kraus operators; sum_i K_i^dag K_i must be the
    identity on the input space within TRACE_PRESERVE_TOL.
    """

    kraus: tuple[np.ndarray, ...]
    name: str = "channel"

    def __post_init__(self):
        kraus = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not kraus:
            raise ValueError("need at least one Kraus operator")
        d_out, d_in = kraus[0].shape
        for k in kraus:
            if k.shape != (d_out, d_in):
                raise ValueError("Kraus operators must share one shape")
        object.__setattr__(self, "kraus", kraus)
        comp = sum(k.conj().T @ k for k in kraus)
        if np.max(np.abs(comp - np.eye(d_in))) > TRACE_PRESERVE_TOL:
            raise ValueError("Kraus operators do not preserve trace")

    @property
    def d_in(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def d_out(self) -> int:
        return self.kraus[0].shape[0]

    @property
    def d_env(self) -> int:
        return len(self.kraus)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """sum_i K_i x K_i^dag, the linear extension to arbitrary matrices."""
        x = np.asarray(x, dtype=complex)
        if x.shape != (self.d_in, self.d_in):
            raise ValueError(f"expected {self.d_in}x{self.d_in} input, got {x.shape}")
        return sum(k @ x @ k.conj().T for k in self.kraus)

    def complementary(self) -> "KrausChannel":
        """Channel to the environment of the Stinespring isometry V = sum_i |i> ox K_i.

        The environment basis is ordered like the Kraus list; Kraus operator
        b of the complementary channel stacks row b of every K_i.
        """
        t = np.stack(self.kraus)  # (env, out, in)
        comp = tuple(t[:, b, :] for b in range(self.d_out))
        return KrausChannel(comp, name=f"{self.name}_c")

    def choi(self) -> np.ndarray:
        """Choi matrix sum_{ij} |i><j| ox N(|i><j|); PSD iff the map is CP."""
        d = self.d_in
        out = np.zeros((d * self.d_out, d * self.d_out), dtype=complex)
        for i in range(d):
            for j in range(d):
                e = np.zeros((d, d), dtype=complex)
                e[i, j] = 1.0
                block = self.apply(e)
                out[i * self.d_out:(i + 1) * self.d_out,
                    j * self.d_out:(j + 1) * self.d_out] = block
        return out

    def __repr__(self):
        return (f"KrausChannel({self.name}, d_in={self.d_in}, "
                f"d_out={self.d_out}, d_env={self.d_env})")


def _check_unit_interval(name: str, value: float):
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def pauli(p0: float, p1: float, p2: float, p3: float,
          drop_zero: bool = False) -> KrausChannel:
    """Pauli channel p0 rho + p1 X rho X + p2 Y rho Y + p3 Z rho Z.

    Keeps all four Kraus operators sqrt(p_i) sigma_i by default (d_env = 4)
    so the environment block structure is the generic one; drop_zero=True
    removes zero-probability operators instead.
    """
    probs = (p0, p1, p2, p3)
    for p in probs:
        if p < -_PROB_TOL:
            raise ValueError(f"negative probability {p}")
    if abs(sum(probs) - 1.0) > _PROB_TOL:
        raise ValueError(f"probabilities must sum to 1, got {sum(probs)}")
    ops = []
    for p, sigma in zip(probs, (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z)):
        if drop_zero and p == 0.0:
            continue
        ops.append(np.sqrt(max(p, 0.0)) * sigma)
    return KrausChannel(tuple(ops), name="pauli")


def two_pauli(p: float) -> KrausChannel:
    """X and Z errors with probability p/2 each; d_env = 3 (no Y operator)."""
    _check_unit_interval("p", p)
    ops = (np.sqrt(1 - p) * PAULI_I, np.sqrt(p / 2) * PAULI_X,
           np.sqrt(p / 2) * PAULI_Z)
    return KrausChannel(ops, name="two_pauli")


def bb84(p: float) -> KrausChannel:
    """Independent bit and phase flips with probability p each; d_env = 4."""
    _check_unit_interval("p", p)
    ch = pauli((1 - p) ** 2, p - p * p, p * p, p - p * p)
    object.__setattr__(ch, "name", "bb84")
    return ch


def depolarizing(p: float) -> KrausChannel:
    """(1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z); d_env = 4."""
    _check_unit_interval("p", p)
    ch = pauli(1 - p, p / 3, p / 3, p / 3)
    object.__setattr__(ch, "name", "depolarizing")
    return ch


def dephrasure(p: float, q: float) -> KrausChannel:
    """Z-dephasing with probability p followed by erasure with probability q.

    The qubit embeds into the first two levels of a qutrit output whose third
    level |e> is the erasure flag; d_in = 2, d_out = 3, d_env = 4.
    """
    _check_unit_interval("p", p)
    _check_unit_interval("q", q)
    embed = np.array([[1, 0], [0, 1], [0, 0]], dtype=complex)
    embed_z = np.array([[1, 0], [0, -1], [0, 0]], dtype=complex)
    e0 = np.array([[0, 0], [0, 0], [1, 0]], dtype=complex)
    e1 = np.array([[0, 0], [0, 0], [0, 1]], dtype=complex)
    ops = (np.sqrt((1 - q) * (1 - p)) * embed, np.sqrt((1 - q) * p) * embed_z,
           np.sqrt(q) * e0, np.sqrt(q) * e1)
    return KrausChannel(ops, name="dephrasure")


def gadc(gamma: float, big_n: float) -> KrausChannel:
    """Generalized amplitude damping with damping gamma and thermal weight big_n.

    Four Kraus operators; big_n = 0 reduces to plain amplitude damping
    (the last two operators get zero weight but stay, keeping d_env = 4).
    """
    _check_unit_interval("gamma", gamma)
    _check_unit_interval("N", big_n)
    root = np.sqrt(1 - gamma)
    a1 = np.sqrt(1 - big_n) * np.array([[1, 0], [0, root]], dtype=complex)
    a2 = np.sqrt(gamma * (1 - big_n)) * np.array([[0, 1], [0, 0]], dtype=complex)
    a3 = np.sqrt(big_n) * np.array([[root, 0], [0, 1]], dtype=complex)
    a4 = np.sqrt(gamma * big_n) * np.array([[0, 0], [1, 0]], dtype=complex)
    return KrausChannel((a1, a2, a3, a4), name="gadc")


def damping_dephasing(p: float, g: float) -> KrausChannel:
    """Composition of Z-dephasing (probability p) and amplitude damping (g).

    Three Kraus operators (d_env = 3); the two factor channels commute.
    """
    _check_unit_interval("p", p)
    _check_unit_interval("g", g)
    root = np.sqrt(1 - g)
    o0 = np.sqrt(1 - p) * np.array([[1, 0], [0, root]], dtype=complex)
    o1 = np.sqrt(g) * np.array([[0, 1], [0, 0]], dtype=complex)
    o2 = np.sqrt(p) * np.array([[1, 0], [0, -root]], dtype=complex)
    return KrausChannel((o0, o1, o2), name="damping_dephasing")


def dephasing(p: float) -> KrausChannel:
    """Pure Z-dephasing as a Pauli channel with d_env = 2."""
    _check_unit_interval("p", p)
    ops = (np.sqrt(1 - p) * PAULI_I, np.sqrt(p) * PAULI_Z)
    return KrausChannel(ops, name="dephasing")


def from_kraus(kraus, name: str = "custom") -> KrausChannel:
    """Channel from user-supplied Kraus operators (validated)."""
    return KrausChannel(tuple(np.asarray(k, dtype=complex) for k in kraus), name=name)


# Named constructors for config files / the command line, with the parameter
# names each accepts.
CHANNEL_BUILDERS = {
    "pauli": (pauli, ("p0", "p1", "p2", "p3")),
    "two-pauli": (two_pauli, ("p",)),
    "bb84": (bb84, ("p",)),
    "depolarizing": (depolarizing, ("p",)),
    "dephrasure": (dephrasure, ("p", "q")),
    "gadc": (gadc, ("gamma", "N")),
    "damping-dephasing": (damping_dephasing, ("p", "g")),
    "dephasing": (dephasing, ("p",)),
}


def build_channel(name: str, params: dict) -> KrausChannel:
    """Look up a named constructor and call it with keyword parameters."""
    if name not in CHANNEL_BUILDERS:
        raise ValueError(f"unknown channel {name!r}; known: {sorted(CHANNEL_BUILDERS)}")
    builder, keys = CHANNEL_BUILDERS[name]
    missing = [k for k in keys if k not in params]
    if missing:
        raise ValueError(f"channel {name!r} needs parameters {missing}")
    extra = [k for k in params if k not in keys]
    if extra:
        raise ValueError(f"channel {name!r} got unknown parameters {extra}")
    kwargs = {("big_n" if k == "N" else k): params[k] for k in keys}
    return builder(**kwargs)
