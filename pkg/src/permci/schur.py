"""Numerical evaluation of Schur polynomials.

Two routes: an exact sum over GT patterns (= semistandard tableaux) when the
irrep is small, and the bialternant determinant ratio for large irreps, with
a confluent (divided-difference) variant when evaluation points coincide.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .partitions import Partition, dim_gl_irrep, gt_patterns

# Above this many tableau terms the combinatorial sum gives way to the
# bialternant ratio.
GT_SUM_LIMIT = 10_000

# Points closer than this are merged into one node of higher multiplicity.
TIE_TOL = 1e-8


@lru_cache(maxsize=None)
def weight_matrix(parts: tuple[int, ...], d: int) -> np.ndarray:
    """Integer matrix of E_{k,k} weights, one row per GT pattern of (parts, d)."""
    pats = gt_patterns(Partition(parts), d)
    return np.array([p.weights() for p in pats], dtype=np.int64)


def schur_poly(lam, x) -> complex:
    """Schur polynomial s_lam(x_1, ..., x_f) for complex arguments.

    Defined as the sum over semistandard tableaux of shape lam with entries
    in {1..f} of the monomials prod x_{T(box)}.  Requires f >= rows(lam).
    """
    lam = Partition(lam)
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    f = x.size
    if lam.rows > f:
        raise ValueError(f"need at least {lam.rows} variables for {lam}")
    if lam.n == 0:
        return 1.0 + 0.0j
    if dim_gl_irrep(lam, f) <= GT_SUM_LIMIT:
        W = weight_matrix(lam.parts, f)
        return complex(np.sum(np.prod(x[None, :] ** W, axis=1)))
    return _bialternant(lam, x)


def _bialternant(lam: Partition, x: np.ndarray) -> complex:
    """s_lam as det(x_i^{lam_j + f - j}) / Vandermonde.

    Coinciding points are merged and the corresponding determinant rows are
    replaced by derivatives (the confluent limit); the same replacement in
    numerator and denominator leaves the ratio equal to the limit value.
    """
    f = x.size
    mu = np.array(lam.padded(f), dtype=np.int64) + np.arange(f - 1, -1, -1)
    nu = np.arange(f - 1, -1, -1)

    nodes, orders = _merge_nodes(x)
    num = _confluent_matrix(nodes, orders, mu)
    den = _confluent_matrix(nodes, orders, nu)
    return complex(np.linalg.det(num) / np.linalg.det(den))


def _merge_nodes(x: np.ndarray) -> tuple[list[complex], list[int]]:
    # Greedy clustering: each value joins the first established node within
    # TIE_TOL.  Returns one (node, derivative order) pair per original value.
    reps: list[complex] = []
    counts: list[int] = []
    nodes: list[complex] = []
    orders: list[int] = []
    for v in x:
        for i, r in enumerate(reps):
            if abs(v - r) <= TIE_TOL:
                nodes.append(r)
                orders.append(counts[i])
                counts[i] += 1
                break
        else:
            reps.append(complex(v))
            counts.append(1)
            nodes.append(complex(v))
            orders.append(0)
    return nodes, orders


def _confluent_matrix(nodes, orders, exps) -> np.ndarray:
    # Row for (node a, order r): d^r/da^r a^e = e(e-1)...(e-r+1) a^{e-r}.
    f = len(nodes)
    out = np.zeros((f, f), dtype=complex)
    for i, (a, r) in enumerate(zip(nodes, orders)):
        for j, e in enumerate(exps):
            e = int(e)
            if r > e:
                continue
            coeff = 1.0
            for t in range(r):
                coeff *= e - t
            out[i, j] = coeff * a ** (e - r)
    return out
