"""Partitions, Young-diagram dimension formulas, and Gelfand-Tsetlin patterns.

Everything here is exact integer combinatorics; the numerical linear algebra
lives in :mod:`permci.irreps`.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


class Partition:
    """A partition of n: non-increasing non-negative parts.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare equal and hash identically.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @property
    def n(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    @property
    def rows(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def padded(self, d: int) -> tuple[int, ...]:
        """Parts padded with zeros to length d."""
        if self.rows > d:
            raise ValueError(f"{self} has more than {d} parts")
        return self.parts + (0,) * (d - self.rows)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(cols)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def partitions_of(n: int, d: int) -> list[Partition]:
    """All partitions of n into at most d parts, in decreasing lexicographic order.

    partitions_of(6, 2) -> [(6,), (5, 1), (4, 2), (3, 3)].
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if d < 1:
        raise ValueError("d must be positive")

    def rec(remaining, max_part, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        top = min(remaining, max_part)
        for first in range(top, 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    return [Partition(p) for p in rec(n, n, d)]


def dim_sym_irrep(lam) -> int:
    """Dimension of the symmetric-group irrep for ``lam``: n!/prod(hook lengths)."""
    lam = Partition(lam)
    if not lam.parts:
        return 1
    conj = lam.conjugate().parts
    num = math.factorial(lam.n)
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            num //= hook
    return num


def dim_gl_irrep(lam, d: int) -> int:
    """Dimension of the GL(d) irrep for ``lam`` via Weyl's dimension formula.

    Equals the number of semistandard Young tableaux of shape lam with entries
    in {1..d}, and the number of GT patterns with top row lam.
    """
    lam = Partition(lam)
    mu = lam.padded(d)
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    return num // den


class GTPattern:
    """Gelfand-Tsetlin pattern: triangular integer array with interlacing rows.

    ``rows[0]`` is the top row of length d, ``rows[d-1]`` the single bottom
    entry.  Row k (length k, counted from the bottom) is ``rows[d-k]``.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        d = len(rows)
        for k, row in enumerate(rows):
            if len(row) != d - k:
                raise ValueError("rows must have lengths d, d-1, ..., 1")
        if not _interlaces_all(rows):
            raise ValueError(f"rows violate interlacing: {rows}")
        self.rows = rows

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0]

    def row(self, k: int) -> tuple[int, ...]:
        """Row of length k, k = 1..d (bottom row has k = 1)."""
        return self.rows[self.d - k]

    def weight(self, k: int) -> int:
        """Eigenvalue of E_{k,k} on this basis vector: rowsum(k) - rowsum(k-1)."""
        upper = sum(self.row(k))
        lower = sum(self.row(k - 1)) if k > 1 else 0
        return upper - lower

    def weights(self) -> tuple[int, ...]:
        return tuple(self.weight(k) for k in range(1, self.d + 1))

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.rows))

    def __eq__(self, other):
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GTPattern{self.rows}"


def _interlaces(upper, lower) -> bool:
    # upper has length k, lower length k-1: upper[i] >= lower[i] >= upper[i+1]
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))


def _interlaces_all(rows) -> bool:
    return all(_interlaces(rows[k], rows[k + 1]) for k in range(len(rows) - 1))


@lru_cache(maxsize=None)
def _gt_rows(top: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # All completions below a given top row, each returned top row included,
    # in decreasing lexicographic order of the flattened pattern.
    if len(top) == 1:
        return ((top,),)
    out = []
    ranges = [range(top[i], top[i + 1] - 1, -1) for i in range(len(top) - 1)]
    for nxt in itertools.product(*ranges):
        for tail in _gt_rows(nxt):
            out.append((top,) + tail)
    return tuple(out)


def gt_patterns(lam, d: int) -> list[GTPattern]:
    """All GT patterns with top row ``lam`` padded to d parts.

    Deterministic order: decreasing lexicographic on the flattened rows
    (top row first), so the highest-weight pattern comes first.  The count
    equals ``dim_gl_irrep(lam, d)``.
    """
    lam = Partition(lam)
    top = lam.padded(d)
    return [GTPattern(rows) for rows in _gt_rows(top)]
