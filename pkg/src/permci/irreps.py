"""Numeric irreducible representations of GL(d) in the Gelfand-Tsetlin basis.

The generators E_{k,k}, E_{k,k+1}, E_{k+1,k} act on GT patterns by the
classical raising/lowering formulas; dividing each basis vector by the norm
of the invariant inner product makes the representation unitary on U(d), so
q_lambda extends to arbitrary complex matrices through polar/SVD factors:

* Hermitian A:   A = U diag(s) U^dag, q(A) = q(U) q(diag) q(U)^dag
* general A:     A = U diag(s) W^dag (SVD), same product route
* diagonal s:    q(diag) is diagonal with entries prod_k s_k^{w_k(pattern)}

For d = 2 a closed polynomial formula is used instead, which needs no matrix
logarithm and stays exact on rank-deficient arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
from scipy.linalg import schur

from .partitions import GTPattern, Partition, dim_gl_irrep, gt_patterns

_HERM_TOL = 1e-12
# Below this irrep dimension the generator set is also cached as one dense
# stack, turning phi(X) into a single tensordot.
_DENSE_GEN_LIMIT = 800


@dataclass(eq=False, frozen=True)
class IrrepMatrix:
    """Dense matrix of q_lambda(A) of size dim V_lambda^d."""

    lam: Partition
    d: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))


@dataclass(eq=False, frozen=True)
class LieGenerators:
    """Matrices of E_{k,k}, E_{k,k+1} and E_{k+1,k} in the orthonormal GT basis.

    diagonal[k] is E_{k+1,k+1} (k = 0..d-1); raising[k] is E_{k+1,k+2} and
    lowering[k] its conjugate transpose (k = 0..d-2).
    """

    lam: Partition
    d: int
    diagonal: tuple[np.ndarray, ...]
    raising: tuple[np.ndarray, ...]
    lowering: tuple[np.ndarray, ...]


# ---------------------------------------------------------------------------
# GT basis bookkeeping
# ---------------------------------------------------------------------------

def _l_value(row: tuple[int, ...], i: int) -> int:
    # l_{k,i} = lambda_{k,i} - i + 1 with 1-based i
    return row[i - 1] - i + 1


def _log_norm(pat: GTPattern) -> float:
    """log of the squared GT-basis norm <xi, xi> for the invariant form.

    Chosen so that the highest-weight pattern has norm 1 and the rescaled
    generators satisfy E_{k+1,k} = E_{k,k+1}^dag.
    """
    total = 0.0
    for k in range(2, pat.d + 1):
        rk = pat.row(k)
        rkm = pat.row(k - 1)
        for i in range(1, k):
            for j in range(i, k):
                total += math.lgamma(_l_value(rk, i) - _l_value(rkm, j) + 1)
                total += math.lgamma(_l_value(rk, i) - _l_value(rk, j + 1))
                total -= math.lgamma(_l_value(rkm, i) - _l_value(rkm, j) + 1)
                total -= math.lgamma(_l_value(rkm, i) - _l_value(rk, j + 1))
    return total


@lru_cache(maxsize=None)
def _gt_data(parts: tuple[int, ...], d: int):
    pats = gt_patterns(Partition(parts), d)
    index = {p.rows: i for i, p in enumerate(pats)}
    weights = np.array([p.weights() for p in pats], dtype=np.int64)
    lognorm = np.array([_log_norm(p) for p in pats])
    return pats, index, weights, lognorm


def _shifted(pat: GTPattern, k: int, i: int, delta: int) -> GTPattern | None:
    # Pattern with entry i of row k shifted by delta, or None if invalid.
    rows = [list(r) for r in pat.rows]
    rows[pat.d - k][i - 1] += delta
    try:
        return GTPattern(rows)
    except ValueError:
        return None


def _molev_entries(pats, index, lognorm, d: int, k: int, delta: int):
    """Sparse entries of E_{k,k+1} (delta=+1) or E_{k+1,k} (delta=-1)."""
    rows_out, cols_out, vals = [], [], []
    for s, pat in enumerate(pats):
        rk = pat.row(k)
        for i in range(1, k + 1):
            target = _shifted(pat, k, i, delta)
            if target is None:
                continue
            li = _l_value(rk, i)
            if delta == +1:
                upper = pat.row(k + 1)
                num = math.prod(li - _l_value(upper, j) for j in range(1, k + 2))
                sign = -1.0
            else:
                lower = pat.row(k - 1) if k > 1 else ()
                num = math.prod(li - _l_value(lower, j) for j in range(1, k))
                sign = 1.0
            den = math.prod(li - _l_value(rk, j) for j in range(1, k + 1) if j != i)
            t = index[target.rows]
            coeff = sign * (num / den) * math.exp(0.5 * (lognorm[t] - lognorm[s]))
            if coeff != 0.0:
                rows_out.append(t)
                cols_out.append(s)
                vals.append(coeff)
    return rows_out, cols_out, vals


@lru_cache(maxsize=None)
def _generators_sparse(parts: tuple[int, ...], d: int):
    """All d*d basis generators E_{i,j} as sparse matrices (1-based keys)."""
    pats, index, weights, lognorm = _gt_data(parts, d)
    dim = len(pats)
    gens: dict[tuple[int, int], sp.csr_matrix] = {}
    for k in range(1, d + 1):
        gens[(k, k)] = sp.diags(weights[:, k - 1].astype(float)).tocsr()
    for k in range(1, d):
        r, c, v = _molev_entries(pats, index, lognorm, d, k, +1)
        gens[(k, k + 1)] = sp.csr_matrix((v, (r, c)), shape=(dim, dim))
        r, c, v = _molev_entries(pats, index, lognorm, d, k, -1)
        gens[(k + 1, k)] = sp.csr_matrix((v, (r, c)), shape=(dim, dim))
    # Longer-range generators from commutators: E_{i,j} = [E_{i,m}, E_{m,j}]
    for span in range(2, d):
        for i in range(1, d + 1 - span):
            j = i + span
            gens[(i, j)] = (gens[(i, j - 1)] @ gens[(j - 1, j)]
                            - gens[(j - 1, j)] @ gens[(i, j - 1)]).tocsr()
            gens[(j, i)] = (gens[(j, j - 1)] @ gens[(j - 1, i)]
                            - gens[(j - 1, i)] @ gens[(j, j - 1)]).tocsr()
    return gens


def lie_generators(lam, d: int) -> LieGenerators:
    """Generator matrices for (lam, d), orthonormalized so the rep is unitary.

    The lowering matrices are the conjugate transposes of the raising ones,
    and the first basis vector is the highest-weight vector with
    E_{k,k} xi = lam_k xi.
    """
    lam = Partition(lam)
    gens = _generators_sparse(lam.padded(d), d)
    diag = tuple(gens[(k, k)].toarray().astype(complex) for k in range(1, d + 1))
    raising = tuple(gens[(k, k + 1)].toarray().astype(complex) for k in range(1, d))
    lowering = tuple(gens[(k + 1, k)].toarray().astype(complex) for k in range(1, d))
    return LieGenerators(lam=lam, d=d, diagonal=diag, raising=raising,
                         lowering=lowering)


# ---------------------------------------------------------------------------
# Representation matrices
# ---------------------------------------------------------------------------

def _log_unitary(u: np.ndarray) -> np.ndarray:
    """A matrix logarithm of a unitary, branch cut rotated away from the spectrum.

    Rotates so the cut falls in the middle of the largest circular gap between
    eigenvalue phases; any branch X with exp(X) = u is equally valid for
    building q(u) = exp(phi(X)), and this choice is deterministic and keeps
    the cut at distance >= (largest gap)/2 from every eigenvalue.  Uses the
    complex Schur form, which is diagonal for these (normal) inputs.
    """
    t, z = schur(u, output="complex")
    ang = np.sort(np.angle(np.diagonal(t)))
    gaps = np.diff(ang, append=ang[0] + 2.0 * np.pi)
    i = int(np.argmax(gaps))
    alpha = np.pi - (ang[i] + gaps[i] / 2.0)
    logdiag = np.log(np.diagonal(t) * np.exp(1j * alpha))
    x = (z * logdiag[None, :]) @ z.conj().T
    return x - 1j * alpha * np.eye(u.shape[0])


@lru_cache(maxsize=None)
def _generators_dense(parts: tuple[int, ...], d: int) -> np.ndarray | None:
    # Stack of all E_{i,j} as one (d, d, dim, dim) array; None above the limit.
    gens = _generators_sparse(parts, d)
    dim = gens[(1, 1)].shape[0]
    if dim > _DENSE_GEN_LIMIT:
        return None
    stack = np.zeros((d, d, dim, dim), dtype=complex)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            stack[i - 1, j - 1] = gens[(i, j)].toarray()
    return stack


def _phi(parts: tuple[int, ...], d: int, h: np.ndarray) -> np.ndarray:
    # Lie-algebra representation of an arbitrary d x d matrix h.
    stack = _generators_dense(parts, d)
    if stack is not None:
        return np.tensordot(h, stack, axes=2)
    gens = _generators_sparse(parts, d)
    dim = gens[(1, 1)].shape[0]
    out = sp.csr_matrix((dim, dim), dtype=complex)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if h[i - 1, j - 1] != 0.0:
                out = out + h[i - 1, j - 1] * gens[(i, j)]
    return np.asarray(out.todense(), dtype=complex)


def _rep_unitary_from_log(parts: tuple[int, ...], d: int,
                          x: np.ndarray) -> np.ndarray:
    # q(exp(x)) = exp(phi(x)) for anti-Hermitian x.
    h = x / 1j
    h = (h + h.conj().T) / 2.0
    g = _phi(parts, d, h)
    g = (g + g.conj().T) / 2.0
    w, v = np.linalg.eigh(g)
    return (v * np.exp(1j * w)) @ v.conj().T


def _rep_unitary(parts: tuple[int, ...], d: int, u: np.ndarray) -> np.ndarray:
    """q(u) for unitary u via exp(phi(log u)); unitary by construction."""
    return _rep_unitary_from_log(parts, d, _log_unitary(u))


def _diag_powers(parts: tuple[int, ...], d: int, s: np.ndarray) -> np.ndarray:
    # q(diag(s)) is diagonal in the GT basis: prod_k s_k^{weight_k}.
    _, _, weights, _ = _gt_data(parts, d)
    base = np.asarray(s, dtype=complex if np.iscomplexobj(s) else float)
    return np.prod(base[None, :] ** weights, axis=1)


@lru_cache(maxsize=None)
def _lgamma_table(m: int) -> np.ndarray:
    return np.array([math.lgamma(t + 1.0) for t in range(m + 1)])


def gl2_matrix(lam, a: np.ndarray) -> np.ndarray:
    """Closed-form irrep matrix of GL(2) for a 2-row partition.

    Column for the source basis vector e_j collects the coefficients of the
    image of the degree-m monomial basis (ordered e_m, ..., e_0) under the
    substitution action of ``a``, scaled by sqrt(k!(m-k)!/(j!(m-j)!)); the
    result carries the extra factor det(a)^{lam_2}.  Polynomial in the
    entries of ``a``: singular arguments are fine.
    """
    lam = Partition(lam)
    if lam.rows > 2:
        raise ValueError(f"{lam} has more than 2 parts")
    l1, l2 = lam.padded(2)
    m = l1 - l2
    a = np.asarray(a, dtype=complex)
    (a11, a12), (a21, a22) = a
    det = a11 * a22 - a12 * a21

    lf = _lgamma_table(m)
    ks = np.arange(m + 1)
    out = np.zeros((m + 1, m + 1), dtype=complex)
    for j in range(m, -1, -1):
        # coefficients of (a11 x1 + a21 x2)^j and (a12 x1 + a22 x2)^{m-j},
        # both by ascending x1-degree
        pj = np.arange(j + 1)
        ca = np.array([math.comb(j, int(p)) for p in pj], dtype=complex)
        ca *= a11 ** pj * a21 ** (j - pj)
        qj = np.arange(m - j + 1)
        cb = np.array([math.comb(m - j, int(q)) for q in qj], dtype=complex)
        cb *= a12 ** qj * a22 ** (m - j - qj)
        col = np.convolve(ca, cb)  # x1-degree k, ascending
        norm = np.exp(0.5 * (lf[ks] + lf[m - ks] - lf[j] - lf[m - j]))
        out[m - ks, m - j] = col * norm
    if l2:
        out *= det ** l2
    return out


def _is_hermitian(a: np.ndarray) -> bool:
    scale = max(1.0, float(np.max(np.abs(a))))
    return float(np.max(np.abs(a - a.conj().T))) <= _HERM_TOL * scale


def rep_builder(d: int, a: np.ndarray):
    """Factor ``a`` once and return a callable mapping lam -> q_lambda(a).

    The evaluators call q_lambda(A) for every partition of n, so the
    eigen/SVD factorization of the d x d argument is hoisted out of that
    loop.  d = 2 needs no factorization at all.
    """
    a = np.asarray(a, dtype=complex)
    if a.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} matrix, got {a.shape}")
    if d == 2:
        return lambda lam: gl2_matrix(lam, a)
    if _is_hermitian(a):
        s, u = np.linalg.eigh(a)
        logu = _log_unitary(u)

        def build_hermitian(lam):
            parts = Partition(lam).padded(d)
            qu = _rep_unitary_from_log(parts, d, logu)
            return (qu * _diag_powers(parts, d, s)[None, :]) @ qu.conj().T

        return build_hermitian
    u, s, wh = np.linalg.svd(a)
    logu = _log_unitary(u)
    logw = _log_unitary(wh)

    def build_general(lam):
        parts = Partition(lam).padded(d)
        qu = _rep_unitary_from_log(parts, d, logu)
        qw = _rep_unitary_from_log(parts, d, logw)
        return (qu * _diag_powers(parts, d, s)[None, :]) @ qw

    return build_general


def gl_matrix(lam, d: int, a: np.ndarray) -> np.ndarray:
    """Dense q_lambda(a) for an arbitrary complex d x d matrix ``a``.

    d = 2 always goes through the closed polynomial formula; d >= 3 uses the
    eigen/SVD factor route, which is exact on singular inputs by polynomial
    continuity and multiplicative on invertible ones.
    """
    lam = Partition(lam)
    if lam.rows > d:
        raise ValueError(f"{lam} has more than {d} parts")
    return rep_builder(d, a)(lam)


def gl_irrep(lam, d: int, a: np.ndarray) -> IrrepMatrix:
    """q_lambda(a) wrapped with its partition and group dimension."""
    lam = Partition(lam)
    return IrrepMatrix(lam=lam, d=d, matrix=gl_matrix(lam, d, a))


def gl2_irrep(lam, a: np.ndarray) -> IrrepMatrix:
    """Closed-form GL(2) irrep matrix (see :func:`gl2_matrix`)."""
    lam = Partition(lam)
    return IrrepMatrix(lam=lam, d=2, matrix=gl2_matrix(lam, a))
