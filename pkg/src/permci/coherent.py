"""Coherent-information evaluators for permutation-invariant i.i.d. mixtures.

Three block-decomposition routes plus a brute-force tensor-product oracle:

* :func:`ci_mixed`     -- arbitrary (mixed) components; needs irrep blocks on
  both the receiver (d_B) and environment (d_E) sides.
* :func:`ci_pure`      -- pure components, d_B <= d_E; one partition family,
  receiver and environment weights coincide.
* :func:`ci_purified`  -- pure components, no environment blocks at all; per
  partition a k x k block matrix of irrep images of the cross operators
  N(|psi_i><psi_j|).
* :func:`ci_brute`     -- explicit tensor products and diagonalization, for
  small n; also accepts arbitrary pure inputs on reference (ox) input^n.

All entropies are base 2.  Per-partition work is independent; results are
reduced in the fixed partition order so totals do not depend on evaluation
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channels import KrausChannel
from .ensembles import PURITY_TOL, CodeEnsemble
from .irreps import rep_builder
from .partitions import Partition, dim_gl_irrep, dim_sym_irrep, partitions_of
from .schur import schur_poly

# Eigenvalues below this contribute zero entropy (0 log 0 = 0 convention).
ZERO_EIG = 1e-14
# Eigenvalues in [EIG_CLIP, 0) are rounded up to 0; anything more negative is
# a bug in the caller, not float noise, and raises.
EIG_CLIP = -1e-10
# Blocks with smaller weight are skipped; their worst-case contribution is
# accumulated into the error budget of the breakdown.
SKIP_WEIGHT = 1e-15
# Brute-force size guard: d_in^n * reference rank.
BRUTE_GUARD = 2 ** 14

_LOG2 = np.log(2.0)


def entropy_from_eigs(w: np.ndarray) -> float:
    """Base-2 entropy of an eigenvalue list with clipping rules applied."""
    w = np.asarray(w, dtype=float)
    low = float(w.min()) if w.size else 0.0
    if low < EIG_CLIP:
        raise ValueError(f"eigenvalue {low} below the clipping floor {EIG_CLIP}; "
                         "input is not close to positive semidefinite")
    w = w[w >= ZERO_EIG]
    if w.size == 0:
        return 0.0
    return float(-(w * np.log(w)).sum() / _LOG2)


def entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits; rejects non-Hermitian input."""
    rho = np.asarray(rho, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(rho))))
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12 * scale:
        raise ValueError("entropy of a non-Hermitian matrix is undefined")
    return entropy_from_eigs(np.linalg.eigvalsh(rho))


def _shannon(c: np.ndarray) -> float:
    c = np.asarray(c, dtype=float)
    c = c[c >= ZERO_EIG]
    return float(-(c * np.log(c)).sum() / _LOG2) if c.size else 0.0


@dataclass(eq=False)
class CIBreakdown:
    """Total coherent information plus per-partition weights and contributions.

    For the pure and purified formulas the weights sum to 1 and the
    contributions sum to the total.  For the mixed formula the receiver-side
    terms are in ``per_lambda`` and the environment-side terms in
    ``env_per_lambda``; the total is their difference.
    """

    total: float
    formula: str
    n: int = 1
    per_lambda: dict[Partition, tuple[float, float]] = field(default_factory=dict)
    env_per_lambda: dict[Partition, tuple[float, float]] | None = None
    skipped_weight: float = 0.0
    error_budget: float = 0.0

    @property
    def per_use(self) -> float:
        """Coherent information per channel use, total / n."""
        return self.total / self.n

    def weights(self) -> dict[Partition, float]:
        return {lam: c for lam, (c, _) in self.per_lambda.items()}


def _block_budget(c: float, lam: Partition, d: int, extra: int = 1) -> float:
    # Worst-case |contribution| of a dropped block: c * (log block dim - log c).
    dim = dim_sym_irrep(lam) * dim_gl_irrep(lam, d) * extra
    return c * (np.log2(max(dim, 2)) + 52.0)


def _hermitized_entropy(mat: np.ndarray) -> float:
    return entropy_from_eigs(np.linalg.eigvalsh((mat + mat.conj().T) / 2.0))


def _mixed_side(n: int, d: int, xs: np.ndarray, outs: list[np.ndarray]):
    """One side of the mixed formula: entropy terms of an i.i.d. mixture output.

    Returns (total side entropy, per-partition table, skipped weight, budget):
    S = H(c) + sum_lam c_lam (S(Qbar_lam) + log dim S_lam) split per lam as
    c_lam (-log c_lam + S + log dim S_lam).
    """
    eigs = [np.linalg.eigvalsh((t + t.conj().T) / 2.0) for t in outs]
    builders = [rep_builder(d, t) for t in outs]
    per: dict[Partition, tuple[float, float]] = {}
    skipped = 0.0
    budget = 0.0
    for lam in partitions_of(n, d):
        traces = np.array([schur_poly(lam, e).real for e in eigs])
        c = float(dim_sym_irrep(lam) * np.dot(xs, traces))
        if c < SKIP_WEIGHT:
            skipped += max(c, 0.0)
            budget += _block_budget(max(c, 0.0), lam, d)
            continue
        qbar = sum(x * b(lam) for x, b in zip(xs, builders))
        tr = np.trace(qbar).real
        s = _hermitized_entropy(qbar / tr)
        term = c * (-np.log2(c) + s + np.log2(dim_sym_irrep(lam)))
        per[lam] = (c, float(term))
    total = float(sum(t for _, t in per.values()))
    return total, per, skipped, budget


def ci_mixed(ch: KrausChannel, code: CodeEnsemble) -> CIBreakdown:
    """Coherent information of sum_i x_i rho_i^(ox n), components arbitrary.

    Evaluates S(N^n(rho)) - S(N_c^n(rho)) with each side expanded over its
    own partition family (receiver: at most d_out rows, environment: at most
    d_env rows).
    """
    if code.d != ch.d_in:
        raise ValueError(f"code dimension {code.d} != channel input {ch.d_in}")
    comp = ch.complementary()
    taus = [ch.apply(s) for s in code.states]
    omegas = [comp.apply(s) for s in code.states]
    tot_b, per_b, skip_b, bud_b = _mixed_side(code.n, ch.d_out, code.weights, taus)
    tot_e, per_e, skip_e, bud_e = _mixed_side(code.n, ch.d_env, code.weights, omegas)
    return CIBreakdown(total=tot_b - tot_e, formula="mixed", n=code.n, per_lambda=per_b,
                       env_per_lambda=per_e, skipped_weight=skip_b + skip_e,
                       error_budget=bud_b + bud_e)


def ci_pure(ch: KrausChannel, code: CodeEnsemble,
            purity_tol: float = PURITY_TOL) -> CIBreakdown:
    """Coherent information for pure components via matched partition blocks.

    Requires d_out <= d_env: then the environment output occupies only the
    partitions with at most d_out rows and carries the same weights c_lam as
    the receiver output, so I_c = sum_lam c_lam (S(sigma_lam^N) -
    S(sigma_lam^Nc)).
    """
    if code.d != ch.d_in:
        raise ValueError(f"code dimension {code.d} != channel input {ch.d_in}")
    if ch.d_out > ch.d_env:
        raise ValueError("pure-path formula needs d_out <= d_env; "
                         "use ci_purified instead")
    kets = code.kets(tol=purity_tol)
    comp = ch.complementary()
    taus = [ch.apply(np.outer(v, v.conj())) for v in kets]
    omegas = [comp.apply(np.outer(v, v.conj())) for v in kets]
    tau_eigs = [np.linalg.eigvalsh((t + t.conj().T) / 2.0) for t in taus]
    xs = code.weights
    builders_b = [rep_builder(ch.d_out, t) for t in taus]
    builders_e = [rep_builder(ch.d_env, w) for w in omegas]

    per: dict[Partition, tuple[float, float]] = {}
    skipped = 0.0
    budget = 0.0
    for lam in partitions_of(code.n, ch.d_out):
        traces = np.array([schur_poly(lam, e).real for e in tau_eigs])
        c = float(dim_sym_irrep(lam) * np.dot(xs, traces))
        if c < SKIP_WEIGHT:
            skipped += max(c, 0.0)
            budget += _block_budget(max(c, 0.0), lam, ch.d_env)
            continue
        sig_b = sum(x * b(lam) for x, b in zip(xs, builders_b))
        sig_e = sum(x * b(lam) for x, b in zip(xs, builders_e))
        s_b = _hermitized_entropy(sig_b / np.trace(sig_b).real)
        s_e = _hermitized_entropy(sig_e / np.trace(sig_e).real)
        per[lam] = (c, float(c * (s_b - s_e)))
    total = float(sum(t for _, t in per.values()))
    return CIBreakdown(total=total, formula="pure", n=code.n, per_lambda=per,
                       skipped_weight=skipped, error_budget=budget)


def ci_purified(ch: KrausChannel, code: CodeEnsemble,
                purity_tol: float = PURITY_TOL) -> CIBreakdown:
    """Coherent information for pure components in the purified picture.

    Avoids environment blocks entirely: per partition, the reference-entangled
    output is the k x k block matrix with blocks sqrt(x_i x_j)
    q_lam(N(|psi_i><psi_j|)), and I_c = sum_lam c_lam (S(sigma_lam) -
    S(omega_lam)).  Cross operators are generally non-Hermitian; q_lam of
    them goes through the polynomial (d=2) or SVD route.
    """
    if code.d != ch.d_in:
        raise ValueError(f"code dimension {code.d} != channel input {ch.d_in}")
    kets = code.kets(tol=purity_tol)
    k = len(kets)
    xs = code.weights
    d = ch.d_out

    sig = {}
    builders = {}
    for i in range(k):
        for j in range(i, k):
            sig[(i, j)] = ch.apply(np.outer(kets[i], kets[j].conj()))
            builders[(i, j)] = rep_builder(d, sig[(i, j)])
    diag_eigs = [np.linalg.eigvalsh((sig[(i, i)] + sig[(i, i)].conj().T) / 2.0)
                 for i in range(k)]

    per: dict[Partition, tuple[float, float]] = {}
    skipped = 0.0
    budget = 0.0
    for lam in partitions_of(code.n, d):
        traces = np.array([schur_poly(lam, e).real for e in diag_eigs])
        qbar = float(np.dot(xs, traces))
        c = qbar * dim_sym_irrep(lam)
        if c < SKIP_WEIGHT:
            skipped += max(c, 0.0)
            budget += _block_budget(max(c, 0.0), lam, d, extra=k)
            continue
        blocks = {}
        for i in range(k):
            for j in range(i, k):
                q = builders[(i, j)](lam)
                blocks[(i, j)] = q
                if i != j:
                    # q(sigma_ji) = q(sigma_ij)^dag: the rep commutes with dag
                    blocks[(j, i)] = q.conj().T
        dim = blocks[(0, 0)].shape[0]
        omega = np.zeros((k * dim, k * dim), dtype=complex)
        for i in range(k):
            for j in range(k):
                omega[i * dim:(i + 1) * dim, j * dim:(j + 1) * dim] = \
                    np.sqrt(xs[i] * xs[j]) * blocks[(i, j)]
        omega /= qbar
        sigma = sum(x * blocks[(i, i)] for i, x in enumerate(xs)) / qbar
        s_sig = _hermitized_entropy(sigma)
        s_om = _hermitized_entropy(omega)
        per[lam] = (c, float(c * (s_sig - s_om)))
    total = float(sum(t for _, t in per.values()))
    return CIBreakdown(total=total, formula="purified", n=code.n, per_lambda=per,
                       skipped_weight=skipped, error_budget=budget)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _apply_channel_leg(mat: np.ndarray, dims: list[int], leg: int,
                       ch: KrausChannel) -> tuple[np.ndarray, list[int]]:
    left = int(np.prod(dims[:leg], dtype=np.int64))
    right = int(np.prod(dims[leg + 1:], dtype=np.int64))
    di, do = ch.d_in, ch.d_out
    x = mat.reshape(left, di, right, left, di, right)
    kr = np.stack(ch.kraus)
    y = np.einsum("kab,ubvxcy,kdc->uavxdy", kr, x, kr.conj(), optimize=True)
    new_dims = dims.copy()
    new_dims[leg] = do
    total = left * do * right
    return y.reshape(total, total), new_dims


def _apply_iid_channel(mat: np.ndarray, dims: list[int], legs,
                       ch: KrausChannel) -> np.ndarray:
    for leg in legs:
        mat, dims = _apply_channel_leg(mat, dims, leg, ch)
    return mat


def _tensor_power(mat: np.ndarray, n: int) -> np.ndarray:
    out = np.array([[1.0 + 0.0j]])
    for _ in range(n):
        out = np.kron(out, mat)
    return out


def ci_brute(ch: KrausChannel, code, n: int | None = None,
             ref_dim: int | None = None) -> float:
    """Brute-force coherent information via explicit tensor products.

    ``code`` is either a :class:`CodeEnsemble` (its purification is built
    automatically) or an explicit pure state vector on reference (ox)
    input^n, in which case ``n`` and ``ref_dim`` identify the factors.
    Guarded to d_in^n * ref_dim <= 2^14.  This route accepts inputs with no
    permutation symmetry at all.
    """
    if isinstance(code, CodeEnsemble):
        return _ci_brute_ensemble(ch, code)
    psi = np.asarray(code, dtype=complex).ravel()
    if n is None or ref_dim is None:
        raise ValueError("explicit state input needs n and ref_dim")
    dn = ch.d_in ** n
    if psi.size != ref_dim * dn:
        raise ValueError(f"state has length {psi.size}, expected "
                         f"ref_dim * d_in^n = {ref_dim * dn}")
    if dn * ref_dim > BRUTE_GUARD:
        raise ValueError(f"brute-force size {dn * ref_dim} exceeds {BRUTE_GUARD}")
    psi = psi / np.linalg.norm(psi)
    psi_mat = psi.reshape(ref_dim, dn)
    rho_a = np.einsum("ra,rb->ab", psi_mat, psi_mat.conj())
    out_b = _apply_iid_channel(rho_a, [ch.d_in] * n, range(n), ch)
    full = np.outer(psi, psi.conj())
    out_rb = _apply_iid_channel(full, [ref_dim] + [ch.d_in] * n,
                                range(1, n + 1), ch)
    return entropy(out_b) - entropy(out_rb)


def _ci_brute_ensemble(ch: KrausChannel, code: CodeEnsemble) -> float:
    n, d = code.n, code.d
    dn = d ** n
    powers = [_tensor_power(s, n) for s in code.states]
    rho_n = sum(x * p for x, p in zip(code.weights, powers))

    if code.is_pure():
        kets = code.kets()
        ref = code.k
        if dn * ref > BRUTE_GUARD:
            raise ValueError(f"brute-force size {dn * ref} exceeds {BRUTE_GUARD}")
        phi = np.zeros(ref * dn, dtype=complex)
        for i, (x, v) in enumerate(zip(code.weights, kets)):
            vec = np.array([1.0 + 0.0j])
            for _ in range(n):
                vec = np.kron(vec, v)
            phi[i * dn:(i + 1) * dn] = np.sqrt(x) * vec
    else:
        w, vecs = np.linalg.eigh((rho_n + rho_n.conj().T) / 2.0)
        keep = w > ZERO_EIG
        w, vecs = w[keep], vecs[:, keep]
        ref = int(w.size)
        if dn * ref > BRUTE_GUARD:
            raise ValueError(f"brute-force size {dn * ref} exceeds {BRUTE_GUARD}")
        phi = (vecs * np.sqrt(w)[None, :]).T.reshape(ref * dn)

    out_b = _apply_iid_channel(rho_n, [d] * n, range(n), ch)
    full = np.outer(phi, phi.conj())
    out_rb = _apply_iid_channel(full, [ref] + [d] * n, range(1, n + 1), ch)
    return entropy(out_b) - entropy(out_rb)


def select_formula(ch: KrausChannel, code: CodeEnsemble) -> str:
    """Default evaluator choice: purified for pure ensembles, else mixed."""
    return "purified" if code.is_pure() else "mixed"


def evaluate_ci(ch: KrausChannel, code: CodeEnsemble,
                formula: str = "auto") -> CIBreakdown:
    """Dispatch to one of the evaluators by name (auto/mixed/pure/purified/brute)."""
    if formula == "auto":
        formula = select_formula(ch, code)
    if formula == "mixed":
        return ci_mixed(ch, code)
    if formula == "pure":
        return ci_pure(ch, code)
    if formula == "purified":
        return ci_purified(ch, code)
    if formula == "brute":
        return CIBreakdown(total=ci_brute(ch, code), formula="brute", n=code.n)
    raise ValueError(f"unknown formula {formula!r}")
