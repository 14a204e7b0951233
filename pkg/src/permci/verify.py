"""Self-checks: the brute-force oracle triangle and representation properties.

These are the dual-route checks behind the `oracle-check` command: every
block-decomposition evaluator is compared against the explicit
tensor-product oracle on random codes, and the irrep construction is probed
for its algebraic identities (dimension counts, homomorphism, traces).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import (KrausChannel, bb84, damping_dephasing, dephrasure,
                       depolarizing, gadc, pauli, two_pauli)
from .coherent import ci_brute, ci_mixed, ci_pure, ci_purified
from .ensembles import CodeEnsemble
from .irreps import gl2_matrix, gl_matrix, rep_builder
from .partitions import (Partition, dim_gl_irrep, dim_sym_irrep, gt_patterns,
                         partitions_of)
from .schur import schur_poly
from .states import random_ket

ORACLE_TOL = 1e-9
HOMOMORPHISM_TOL = 1e-9
GL2_AGREEMENT_TOL = 1e-10


def _named_channel(name: str, rng: np.random.Generator) -> KrausChannel:
    # Random parameters in regimes where every channel is genuinely noisy.
    if name == "pauli":
        return pauli(*rng.dirichlet(np.ones(4)))
    if name == "two-pauli":
        return two_pauli(float(rng.uniform(0.01, 0.5)))
    if name == "bb84":
        return bb84(float(rng.uniform(0.01, 0.4)))
    if name == "depolarizing":
        return depolarizing(float(rng.uniform(0.01, 0.5)))
    if name == "dephrasure":
        return dephrasure(float(rng.uniform(0.0, 0.5)), float(rng.uniform(0.0, 0.6)))
    if name == "gadc":
        return gadc(float(rng.uniform(0.0, 0.9)), float(rng.uniform(0.0, 1.0)))
    if name == "damping-dephasing":
        return damping_dephasing(float(rng.uniform(0.0, 0.6)),
                                 float(rng.uniform(0.0, 0.8)))
    raise ValueError(name)


ORACLE_CHANNELS = ("pauli", "two-pauli", "bb84", "depolarizing", "dephrasure",
                   "gadc", "damping-dephasing")


@dataclass(eq=False)
class OracleRow:
    channel: str
    trials: int
    max_mixed: float
    max_pure: float
    max_purified: float

    @property
    def worst(self) -> float:
        return max(self.max_mixed, self.max_pure, self.max_purified)

    def passed(self, tol: float = ORACLE_TOL) -> bool:
        return self.worst <= tol


def oracle_triangle(trials: int = 200, ns=(2, 3, 4, 5), seed: int = 0,
                    channels=ORACLE_CHANNELS) -> list[OracleRow]:
    """Max |evaluator - brute| per channel over random pure 2-state codes.

    Each trial draws a fresh channel parameter, two Haar-random kets, a
    random weight, and one copy count from ``ns``, then compares ci_mixed,
    ci_pure and ci_purified against ci_brute.
    """
    rows = []
    for name in channels:
        rng = np.random.default_rng(np.random.SeedSequence([seed, hash(name) % 2 ** 31]))
        worst = {"mixed": 0.0, "pure": 0.0, "purified": 0.0}
        for t in range(trials):
            ch = _named_channel(name, rng)
            n = int(ns[t % len(ns)])
            x = float(rng.uniform(0.05, 0.95))
            code = CodeEnsemble.from_kets(
                n, [x, 1.0 - x], [random_ket(2, rng), random_ket(2, rng)])
            ref = ci_brute(ch, code)
            worst["mixed"] = max(worst["mixed"],
                                 abs(ci_mixed(ch, code).total - ref))
            worst["pure"] = max(worst["pure"],
                                abs(ci_pure(ch, code).total - ref))
            worst["purified"] = max(worst["purified"],
                                    abs(ci_purified(ch, code).total - ref))
        rows.append(OracleRow(channel=name, trials=trials,
                              max_mixed=worst["mixed"], max_pure=worst["pure"],
                              max_purified=worst["purified"]))
    return rows


@dataclass(eq=False)
class RepCheck:
    name: str
    worst: float
    tol: float

    def passed(self) -> bool:
        return self.worst <= self.tol


def schur_weyl_dimension_defect(n_max: int = 12, d_max: int = 4) -> int:
    """Exact integer defect of sum_lam dim V * dim S = d^n over the range (0 if ok)."""
    defect = 0
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            total = sum(dim_gl_irrep(lam, d) * dim_sym_irrep(lam)
                        for lam in partitions_of(n, d))
            defect += abs(total - d ** n)
    return defect


def _random_unit_spectral(d: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return a / np.linalg.norm(a, 2)


def representation_checks(n_max: int = 8, seed: int = 0,
                          trials: int = 2) -> list[RepCheck]:
    """Homomorphism, trace-vs-Schur, GT counting, and d=2 route agreement."""
    rng = np.random.default_rng(seed)
    checks = []

    defect = schur_weyl_dimension_defect(12, 4)
    checks.append(RepCheck("schur-weyl dimension identity (exact)", float(defect), 0.0))

    worst_count = 0.0
    for d in (2, 3, 4):
        for n in range(1, min(n_max, 10) + 1):
            for lam in partitions_of(n, d):
                worst_count = max(worst_count,
                                  abs(len(gt_patterns(lam, d)) - dim_gl_irrep(lam, d)))
    checks.append(RepCheck("GT pattern count = Weyl dimension (exact)",
                           worst_count, 0.0))

    worst_bound = 0.0
    for d in (2, 3, 4):
        for n in range(1, n_max + 1):
            bound = (n + 1) ** (d * (d - 1) // 2)
            for lam in partitions_of(n, d):
                if dim_gl_irrep(lam, d) > bound:
                    worst_bound = 1.0
    checks.append(RepCheck("dim V <= (n+1)^(d(d-1)/2)", worst_bound, 0.0))

    worst_hom = 0.0
    worst_tr = 0.0
    for d in (2, 3, 4):
        for n in range(1, n_max + 1):
            for lam in partitions_of(n, d):
                for _ in range(trials):
                    a = _random_unit_spectral(d, rng)
                    b = _random_unit_spectral(d, rng)
                    qa = gl_matrix(lam, d, a)
                    qb = gl_matrix(lam, d, b)
                    qab = gl_matrix(lam, d, a @ b)
                    denom = max(np.linalg.norm(qa) * np.linalg.norm(qb), 1e-300)
                    worst_hom = max(worst_hom,
                                    float(np.linalg.norm(qab - qa @ qb) / denom))
                    tr = np.trace(qa)
                    sp = schur_poly(lam, np.linalg.eigvals(a))
                    worst_tr = max(worst_tr,
                                   abs(tr - sp) / max(1.0, abs(tr)))
    checks.append(RepCheck("homomorphism q(AB) = q(A) q(B)", worst_hom,
                           HOMOMORPHISM_TOL))
    checks.append(RepCheck("trace q(A) = schur(eig A)", worst_tr,
                           HOMOMORPHISM_TOL))

    worst_gl2 = 0.0
    for n in range(1, n_max + 1):
        for lam in partitions_of(n, 2):
            a = _random_unit_spectral(2, rng)
            explicit = gl2_matrix(lam, a)
            parts = Partition(lam).padded(2)
            # exponential/SVD route on the same argument (bypasses the d=2
            # dispatch): same rep up to a fixed basis change, so traces and
            # singular values must agree
            u, s, wh = np.linalg.svd(a)
            from .irreps import _diag_powers, _rep_unitary
            general = (_rep_unitary(parts, 2, u)
                       * _diag_powers(parts, 2, s)[None, :]) @ _rep_unitary(parts, 2, wh)
            worst_gl2 = max(worst_gl2,
                            abs(np.trace(explicit) - np.trace(general))
                            / max(1.0, abs(np.trace(explicit))))
            se = np.linalg.svd(explicit, compute_uv=False)
            sg = np.linalg.svd(general, compute_uv=False)
            worst_gl2 = max(worst_gl2,
                            float(np.max(np.abs(se - sg)) / max(1.0, se[0])))
    checks.append(RepCheck("d=2 GT route vs closed form (traces/singular values)",
                           worst_gl2, GL2_AGREEMENT_TOL))

    worst_psd = 0.0
    for d in (2, 3):
        for lam in partitions_of(4, d):
            m = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
            rho = m @ m.conj().T
            rho /= np.trace(rho).real
            q = gl_matrix(lam, d, rho)
            worst_psd = max(worst_psd,
                            float(np.max(np.abs(q - q.conj().T))),
                            float(max(0.0, -np.min(np.linalg.eigvalsh(
                                (q + q.conj().T) / 2.0)))))
    checks.append(RepCheck("Hermitian PSD arguments give Hermitian PSD blocks",
                           worst_psd, 1e-10))
    return checks


def max_gl_dimension(n: int, d: int) -> int:
    """max over lam of dim V_lam^d for partitions of n with at most d rows."""
    return max(dim_gl_irrep(lam, d) for lam in partitions_of(n, d))
