import numpy as np
import pytest

from permci.channels import damping_dephasing, pauli
from permci.closedform import (dampdeph_repcode_ci, hashing_bound,
                               hashing_threshold, pauli_antidegradable,
                               pauli_repcode_ci, ray_distribution, shannon)
from permci.coherent import ci_mixed
from permci.ensembles import CodeEnsemble

rng = np.random.default_rng(11)


def test_shannon_conventions():
    assert shannon([1.0, 0.0]) == pytest.approx(0.0)
    assert shannon([0.5, 0.5]) == pytest.approx(1.0)
    assert shannon([0.25] * 4) == pytest.approx(2.0)


def test_pauli_repcode_product_input_gives_zero():
    for _ in range(10):
        p = rng.dirichlet(np.ones(4))
        assert pauli_repcode_ci(p, int(rng.integers(1, 8)), 1.0) == \
            pytest.approx(0.0, abs=1e-14)
        assert pauli_repcode_ci(p, 3, 0.0) == pytest.approx(0.0, abs=1e-14)


def test_pauli_repcode_hashing_identity():
    for _ in range(200):
        p = rng.dirichlet(np.ones(4))
        assert pauli_repcode_ci(p, 1, 0.5) == pytest.approx(
            hashing_bound(p), abs=1e-12)


def test_pauli_repcode_matches_engine():
    for _ in range(25):
        p = rng.dirichlet(np.ones(4))
        n = int(rng.integers(1, 7))
        x = float(rng.uniform())
        code = CodeEnsemble.repetition(n, x)
        engine = ci_mixed(pauli(*p), code).total
        assert pauli_repcode_ci(p, n, x) == pytest.approx(engine, abs=1e-10)


def test_pauli_repcode_continuity_in_x():
    # no NaN across the whole x range, including degenerate channels
    for p in ([0.5, 0.5, 0.0, 0.0], [0.5, 0.0, 0.0, 0.5], [1, 0, 0, 0]):
        vals = [pauli_repcode_ci(p, 5, x) for x in np.linspace(0, 1, 101)]
        assert np.all(np.isfinite(vals))


def test_dampdeph_repcode_edges():
    assert dampdeph_repcode_ci(0.3, 0.4, 5, 1.0) == pytest.approx(0.0, abs=1e-14)
    assert dampdeph_repcode_ci(0.0, 0.0, 3, 0.5) == pytest.approx(1.0)
    vals = [dampdeph_repcode_ci(0.16, 0.2, 6, x) for x in np.linspace(0, 1, 101)]
    assert np.all(np.isfinite(vals))


def test_dampdeph_repcode_matches_engine():
    for _ in range(25):
        p, g = rng.uniform(size=2)
        n = int(rng.integers(1, 7))
        x = float(rng.uniform())
        code = CodeEnsemble.repetition(n, x)
        engine = ci_mixed(damping_dephasing(p, g), code).total
        assert dampdeph_repcode_ci(p, g, n, x) == pytest.approx(engine,
                                                                abs=1e-10)


def test_hashing_bound_values():
    assert hashing_bound([1, 0, 0, 0]) == pytest.approx(1.0)
    assert hashing_bound([0.25] * 4) == pytest.approx(-1.0)


def test_antidegradability():
    assert not pauli_antidegradable([1, 0, 0, 0])
    assert pauli_antidegradable([0.25, 0.25, 0.25, 0.25])
    for _ in range(1000):
        p = rng.dirichlet(np.ones(4))
        if pauli_antidegradable(p):
            assert hashing_bound(p) <= 1e-12


def test_ray_distribution():
    assert ray_distribution((0.5, 0.0, 0.5), 0.2) == pytest.approx(
        (0.8, 0.1, 0.0, 0.1))
    with pytest.raises(ValueError):
        ray_distribution((0.5, 0.5, 0.5), 0.1)


def test_hashing_threshold_depolarizing_ray():
    # root of 1 - H((1-p, p/3, p/3, p/3)); the same channel family written
    # as (1-q) rho + q I/2 has its root at 4/3 of this value
    t = hashing_threshold((1 / 3, 1 / 3, 1 / 3))
    assert t == pytest.approx(0.18928922, abs=1e-6)
    assert 4 * t / 3 == pytest.approx(0.25238, abs=1e-4)
    res = 1.0 - shannon(ray_distribution((1 / 3, 1 / 3, 1 / 3), t))
    assert res == pytest.approx(0.0, abs=1e-9)


def test_hashing_threshold_two_pauli_ray():
    t = hashing_threshold((0.5, 0.0, 0.5))
    assert t == pytest.approx(0.22709, abs=1e-4)
    assert t < 0.2271  # the non-orthogonal codes reach beyond this point


def test_hashing_threshold_segment_without_root():
    assert hashing_threshold((1.0, 0.0, 0.0), hi=0.4) is None
    # dephasing-like rays have their root exactly at 1/2
    assert hashing_threshold((1.0, 0.0, 0.0), hi=0.5) == pytest.approx(
        0.5, abs=1e-6)


def test_hashing_threshold_ray_permutation_exploratory():
    # unasserted symmetry probe: report only gross asymmetries
    base = hashing_threshold((0.6, 0.3, 0.1))
    for perm in ((0.3, 0.6, 0.1), (0.1, 0.3, 0.6)):
        other = hashing_threshold(perm)
        # the hashing bound is symmetric in (p1, p2, p3), so these must agree
        assert other == pytest.approx(base, abs=1e-9)
