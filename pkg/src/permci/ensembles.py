"""Code ensembles: convex mixtures of i.i.d. states used as channel inputs.

An ensemble (x_i, rho_i)_{i=1..k} with copy count n stands for the
permutation-invariant input sum_i x_i rho_i^(ox n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .states import bloch_to_dm, dm, is_density_matrix, ket

log = logging.getLogger("permci")

WEIGHT_TOL = 1e-12
PURITY_TOL = 1e-8


@dataclass(eq=False, frozen=True)
class CodeEnsemble:
    """Weights and component density matrices of sum_i x_i rho_i^(ox n)."""

    n: int
    weights: np.ndarray
    states: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("copy count n must be >= 1")
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("need at least one component")
        if np.any(w < -WEIGHT_TOL):
            raise ValueError("weights must be non-negative")
        if abs(w.sum() - 1.0) > WEIGHT_TOL:
            raise ValueError(f"weights must sum to 1, got {w.sum()}")
        states = tuple(np.asarray(s, dtype=complex) for s in self.states)
        if len(states) != w.size:
            raise ValueError("weights and states must have the same length")
        d = states[0].shape[0]
        for s in states:
            if s.shape != (d, d):
                raise ValueError("all component states must share one dimension")
            if not is_density_matrix(s):
                raise ValueError("component is not a valid density matrix")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "states", states)

    @property
    def k(self) -> int:
        return len(self.states)

    @property
    def d(self) -> int:
        return self.states[0].shape[0]

    def purities(self) -> np.ndarray:
        """Largest eigenvalue of each component."""
        return np.array([np.linalg.eigvalsh(s)[-1] for s in self.states])

    def is_pure(self, tol: float = PURITY_TOL) -> bool:
        return bool(np.all(self.purities() >= 1.0 - tol))

    def kets(self, tol: float = PURITY_TOL) -> list[np.ndarray]:
        """Top eigenvectors of the components; requires near-purity.

        Components within ``tol`` of purity are projected onto their top
        eigenvector (the projection distance is logged); anything more mixed
        raises.
        """
        out = []
        for i, s in enumerate(self.states):
            w, v = np.linalg.eigh(s)
            if w[-1] < 1.0 - tol:
                raise ValueError(
                    f"component {i} has top eigenvalue {w[-1]:.6g} < 1 - {tol:g}; "
                    "use a mixed-state evaluator")
            if w[-1] < 1.0 - 1e-14:
                log.debug("projecting component %d to its top eigenvector "
                          "(distance %.3g)", i, 1.0 - w[-1])
            out.append(v[:, -1])
        return out

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_kets(cls, n: int, weights, kets) -> "CodeEnsemble":
        return cls(n=n, weights=np.asarray(weights, dtype=float),
                   states=tuple(dm(ket(v)) for v in kets))

    @classmethod
    def from_bloch(cls, n: int, weights, vectors,
                   pure_snap: float = 1e-3) -> "CodeEnsemble":
        """Qubit components from Bloch vectors.

        Vectors within ``pure_snap`` of unit norm are rescaled onto the
        sphere: tabulated pure states are printed to a few decimals and would
        otherwise load as slightly mixed and miss the pure-path purity gate.
        Shorter vectors are kept as genuinely mixed states; ``pure_snap=0``
        disables the snapping.
        """
        states = []
        for r in vectors:
            r = np.asarray(r, dtype=float)
            nrm = np.linalg.norm(r)
            if nrm > 1.0 or nrm >= 1.0 - pure_snap:
                r = r / nrm
            states.append(bloch_to_dm(r))
        return cls(n=n, weights=np.asarray(weights, dtype=float),
                   states=tuple(states))

    @classmethod
    def repetition(cls, n: int, x: float = 0.5) -> "CodeEnsemble":
        """Weighted repetition code x |0><0|^n + (1-x) |1><1|^n."""
        return cls.from_kets(n, [x, 1.0 - x], [[1.0, 0.0], [0.0, 1.0]])

    def snapped_half(self, tol: float = 1e-3) -> "CodeEnsemble":
        """Copy with weights within ``tol`` of 1/2 snapped to exactly 1/2.

        Offered as an explicit cleanup for near-balanced optimizer output;
        never applied automatically.  The weights are renormalized after
        snapping.
        """
        w = self.weights.copy()
        mask = np.abs(w - 0.5) <= tol
        w[mask] = 0.5
        w = w / w.sum()
        return CodeEnsemble(n=self.n, weights=w, states=self.states)
