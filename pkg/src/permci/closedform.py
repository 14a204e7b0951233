"""Closed-form coherent-information expressions used as oracles and benchmarks.

Exact formulas for weighted repetition codes x |0><0|^n + (1-x) |1><1|^n
under Pauli noise and under damping-dephasing noise, the single-letter
hashing bound for Pauli channels, the antidegradability test, and the
hashing-bound threshold along a noise ray.
"""

from __future__ import annotations

import math

import numpy as np

_LOG2 = math.log(2.0)


def _xlog2x(y: float) -> float:
    return y * math.log(y) / _LOG2 if y > 0.0 else 0.0


def shannon(p) -> float:
    """Shannon entropy in bits with the 0 log 0 = 0 convention."""
    return -sum(_xlog2x(float(v)) for v in p)


def _check_distribution(p):
    p = [float(v) for v in p]
    if any(v < -1e-12 for v in p):
        raise ValueError(f"negative probability in {p}")
    if abs(sum(p) - 1.0) > 1e-9:
        raise ValueError(f"probabilities must sum to 1, got {sum(p)}")
    return [max(v, 0.0) for v in p]


def pauli_repcode_ci(p, n: int, x: float) -> float:
    """Coherent information of n Pauli-channel copies on the weighted repetition code.

    Exact Hamming-weight sum: the output is diagonal with weight-w eigenvalue
    y1(w), and the reference-entangled output splits into 2x2 blocks with
    eigenvalues y_pm(w); each weight carries multiplicity binom(n, w).
    """
    p0, p1, p2, p3 = _check_distribution(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    sp, sm = p0 + p3, p1 + p2
    dp, dm = p0 - p3, p1 - p2
    total = 0.0
    for w in range(n + 1):
        mult = float(math.comb(n, w))
        a = sp ** (n - w) * sm ** w
        a_rev = sp ** w * sm ** (n - w)
        y1 = x * a + (1.0 - x) * a_rev
        total -= mult * _xlog2x(y1)
        if a > 0.0:
            # scaled discriminant: (2x-1)^2 + 4x(1-x)(b/a)^2 with |b/a| <= 1,
            # so y_pm = a (1 +- g)/2 with g in [0, 1]; float noise can push
            # g just past 1, clamp the small root at 0
            ratio = 1.0
            if n - w > 0:
                ratio *= (dp / sp) ** (n - w)
            if w > 0:
                ratio *= (dm / sm) ** w
            g = math.sqrt((2.0 * x - 1.0) ** 2 + 4.0 * x * (1.0 - x) * ratio ** 2)
            y_plus = a * (1.0 + g) / 2.0
            y_minus = max(a * (1.0 - g) / 2.0, 0.0)
            total += mult * (_xlog2x(y_plus) + _xlog2x(y_minus))
        # a = 0 forces the off-diagonal |p0-p3|^{n-w}|p1-p2|^w to vanish too
        # (it is bounded by a), so the whole 2x2 block is zero
    return total


def dampdeph_repcode_ci(p: float, g: float, n: int, x: float) -> float:
    """Coherent information of n damping-dephasing copies on the weighted repetition code.

    Five-term closed form; eta_pm are the eigenvalues of the single 2x2 block
    coupling |0...0> and |1...1> on the reference, with alpha their sum and
    beta their product.
    """
    for name, v in (("p", p), ("g", g), ("x", x)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be >= 1")
    gn = g ** n
    cgn = (1.0 - g) ** n
    alpha = x + (1.0 - x) * cgn
    beta = x * (1.0 - x) * (cgn - ((1.0 - 2.0 * p) ** 2 * (1.0 - g)) ** n)
    disc = alpha * alpha - 4.0 * beta
    if disc < -1e-14:
        raise ValueError(f"discriminant {disc} unexpectedly negative")
    root = math.sqrt(max(disc, 0.0))
    eta_plus = (alpha + root) / 2.0
    eta_minus = max((alpha - root) / 2.0, 0.0)
    return (-_xlog2x(x + (1.0 - x) * gn)
            - _xlog2x((1.0 - x) * cgn)
            + _xlog2x((1.0 - x) * gn)
            + _xlog2x(eta_plus) + _xlog2x(eta_minus))


def hashing_bound(p) -> float:
    """Single-letter coherent information 1 - H(p) of a Pauli channel (may be < 0)."""
    p = _check_distribution(p)
    return 1.0 - shannon(p)


def pauli_antidegradable(p) -> bool:
    """Whether the Pauli channel with distribution p is antidegradable.

    Exactly the channels with 1 >= 2 sum p_i^2 - 8 sqrt(p0 p1 p2 p3);
    antidegradable channels have zero quantum capacity.
    """
    p0, p1, p2, p3 = _check_distribution(p)
    rhs = 2.0 * (p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3)
    rhs -= 8.0 * math.sqrt(max(p0 * p1 * p2 * p3, 0.0))
    return 1.0 >= rhs


def ray_distribution(ray, x: float) -> tuple[float, float, float, float]:
    """Pauli distribution (1-x, x q1, x q2, x q3) along a noise ray."""
    q1, q2, q3 = (float(v) for v in ray)
    if min(q1, q2, q3) < -1e-12 or abs(q1 + q2 + q3 - 1.0) > 1e-9:
        raise ValueError(f"ray must be a 3-outcome distribution, got {ray}")
    return (1.0 - x, x * q1, x * q2, x * q3)


def hashing_threshold(ray, hi: float = 1.0, tol: float = 1e-10,
                      scan: int = 1024) -> float | None:
    """Smallest root of 1 - H((1-x, x q1, x q2, x q3)) for x in (0, hi].

    Scans for the first sign change and bisects it to ``tol``; returns None
    when the hashing bound stays positive on the whole segment (no
    single-letter threshold there).
    """
    def f(x):
        return hashing_bound(ray_distribution(ray, x))

    xs = np.linspace(0.0, hi, scan + 1)
    lo = 0.0
    f_lo = f(0.0)
    hi_x = None
    for x in xs[1:]:
        f_x = f(float(x))
        if f_lo > 0.0 >= f_x:
            hi_x = float(x)
            break
        lo, f_lo = float(x), f_x
    if hi_x is None:
        return None
    a, b = lo, hi_x
    while b - a > tol:
        m = (a + b) / 2.0
        if f(m) > 0.0:
            a = m
        else:
            b = m
    return (a + b) / 2.0
