import itertools

import numpy as np
import pytest

from permci.partitions import Partition, dim_gl_irrep, partitions_of
from permci.schur import _bialternant, schur_poly


def brute_schur(parts, x):
    """Direct sum over semistandard tableaux, built column-insertion style."""
    parts = Partition(parts).parts
    f = len(x)
    if not parts:
        return 1.0 + 0.0j
    rows = []

    def fill(row_idx, prev_row, acc):
        # enumerate weakly increasing rows, strictly larger than prev_row
        if row_idx == len(parts):
            rows.append(acc)
            return
        width = parts[row_idx]
        for combo in itertools.combinations_with_replacement(range(1, f + 1), width):
            if prev_row is not None and any(combo[j] <= prev_row[j] for j in range(width)):
                continue
            fill(row_idx + 1, combo, acc + list(combo))

    fill(0, None, [])
    total = 0.0 + 0.0j
    for filling in rows:
        term = 1.0 + 0.0j
        for v in filling:
            term *= x[v - 1]
        total += term
    return total


def test_defining_case():
    assert schur_poly((1,), [2.0, 3.0]) == pytest.approx(5.0)


def test_two_ssyt_case():
    x1, x2 = 0.7, 0.2
    assert schur_poly((2, 1), [x1, x2]) == pytest.approx(x1 * x2 * (x1 + x2))


def test_three_row_shapes_vanish_on_rank_two_spectra():
    for lam in [(1, 1, 1), (2, 2, 1), (3, 1, 1)]:
        assert schur_poly(lam, [0.4, 0.6, 0.0]) == pytest.approx(0.0, abs=1e-15)


def test_all_ones_gives_dimension():
    for d in (2, 3, 4):
        for lam in partitions_of(5, d):
            got = schur_poly(lam, np.ones(d))
            assert got == pytest.approx(dim_gl_irrep(lam, d))


def test_matches_brute_tableau_sum():
    rng = np.random.default_rng(2)
    for lam in [(2,), (2, 1), (3, 2), (2, 2, 1), (4, 1)]:
        f = max(len(lam), 2) + 1
        x = rng.normal(size=f) + 1j * rng.normal(size=f)
        assert schur_poly(lam, x) == pytest.approx(brute_schur(lam, x), rel=1e-12)


def test_requires_enough_variables():
    with pytest.raises(ValueError):
        schur_poly((2, 1, 1), [1.0, 2.0])


def test_bialternant_agrees_with_gt_sum():
    rng = np.random.default_rng(3)
    for lam in [(3, 1), (4, 2), (5, 2, 1)]:
        f = 3
        x = rng.uniform(0.1, 1.0, size=f).astype(complex)
        direct = schur_poly(lam, x)
        via_det = _bialternant(Partition(lam), x)
        assert via_det == pytest.approx(direct, rel=1e-10)


def test_bialternant_confluent_limit():
    # exactly repeated points exercise the derivative rows
    for lam in [(3, 1), (2, 2), (4, 2, 1)]:
        x = np.array([0.5, 0.5, 0.3], dtype=complex)
        direct = schur_poly(lam, x)
        via_det = _bialternant(Partition(lam), x)
        assert via_det == pytest.approx(direct, rel=1e-9)
    x = np.array([0.4, 0.4, 0.4], dtype=complex)
    assert _bialternant(Partition((2, 1)), x) == pytest.approx(
        schur_poly((2, 1), x), rel=1e-9)
