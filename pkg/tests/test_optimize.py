import numpy as np
import pytest

from permci.ansatz import AnsatzSpec, pair_params_for_states
from permci.channels import dephasing, depolarizing, pauli, two_pauli
from permci.closedform import hashing_threshold, ray_distribution
from permci.coherent import ci_purified, evaluate_ci
from permci.ensembles import CodeEnsemble
from permci.optimize import (NoBracketError, irrep_contributions, optimize_ci,
                             scan_ray, simplex_rays, threshold)
from permci.pso import SwarmConfig
from permci.states import bloch_to_ket

SMALL = SwarmConfig(swarm_size=25, max_iterations=60, stall_iterations=20,
                    seed=0)


def test_optimize_ci_objective_matches_reevaluation():
    ch = two_pauli(0.1)
    res = optimize_ci(ch, 3, AnsatzSpec("pair"), SMALL)
    again = evaluate_ci(ch, res.code, "purified").total
    assert res.objective == pytest.approx(again, abs=1e-12)
    assert res.objective == pytest.approx(res.breakdown.total, abs=1e-15)


def test_optimize_ci_single_letter_dephasing():
    # k = 1 on a degradable dephasing channel: optimal single-state input is
    # on the z axis; compare against a dense 1-parameter sweep
    p = 0.1
    ch = dephasing(p)
    res = optimize_ci(ch, 1, AnsatzSpec("bloch", k=1),
                      SwarmConfig(swarm_size=40, max_iterations=120, seed=2))
    zs = np.linspace(-0.999, 0.999, 4001)
    best = -np.inf
    for z in zs:
        code = CodeEnsemble(n=1, weights=np.array([1.0]),
                            states=(np.diag([(1 + z) / 2, (1 - z) / 2]),))
        best = max(best, evaluate_ci(ch, code, "mixed").total)
    assert res.objective >= best - 2e-4
    # additivity of the degradable channel: n copies scale linearly
    res3 = optimize_ci(ch, 3, AnsatzSpec("bloch", k=1),
                       SwarmConfig(swarm_size=40, max_iterations=120, seed=2))
    assert res3.objective == pytest.approx(3 * res.objective, abs=2e-3)


def test_optimize_ci_seed_determinism():
    ch = two_pauli(0.15)
    a = optimize_ci(ch, 2, AnsatzSpec("pair"), SMALL)
    b = optimize_ci(ch, 2, AnsatzSpec("pair"), SMALL)
    assert a.objective == b.objective
    assert np.array_equal(a.params, b.params)


def test_threshold_fixed_code_dephasing():
    code = CodeEnsemble(n=1, weights=np.array([1.0]), states=(np.eye(2) / 2,))
    t = threshold(lambda p: dephasing(p), 1, code=code, bracket=(1e-6, 0.5),
                  formula="mixed")
    assert t == pytest.approx(0.5, abs=1e-5)


def test_threshold_monotone_bracket_property():
    code = CodeEnsemble(n=1, weights=np.array([1.0]), states=(np.eye(2) / 2,))
    fam = lambda p: depolarizing(p)
    t = threshold(fam, 1, code=code, bracket=(1e-3, 0.4), formula="mixed")
    lo = evaluate_ci(fam(t - 1e-4), code, "mixed").total
    hi = evaluate_ci(fam(t + 1e-4), code, "mixed").total
    assert lo > 0 >= hi - 1e-12
    assert t == pytest.approx(0.18928922, abs=1e-4)


def test_threshold_requires_bracket():
    code = CodeEnsemble(n=1, weights=np.array([1.0]), states=(np.eye(2) / 2,))
    with pytest.raises(NoBracketError):
        threshold(lambda p: dephasing(p), 1, code=code, bracket=(1e-6, 0.2),
                  formula="mixed")
    with pytest.raises(NoBracketError):
        threshold(lambda p: dephasing(p), 1, code=code, bracket=(0.5, 0.5001),
                  formula="mixed")
    with pytest.raises(ValueError):
        threshold(lambda p: dephasing(p), 1, code=code, optimize={})


def test_irrep_contributions_fixed_unitary():
    # pinned to the published 2-Pauli code: the profile sums to ci_pure and
    # the explicit angles recover the tabulated total
    k1 = bloch_to_ket((-0.0597, 0.7647, -0.6416))
    k2 = bloch_to_ket((0.0624, 0.7643, 0.6418))
    theta = -1.5249
    u, phi = pair_params_for_states(k1, k2, theta)
    rows = irrep_contributions(two_pauli(0.2271), 9, [phi], theta, unitary=u)
    prof = rows[0]
    assert sum(t for _, t in prof.per_lambda.values()) == pytest.approx(
        prof.total, abs=1e-12)
    assert prof.total / 9 == pytest.approx(1.2475e-4, rel=1e-4)
    labels = [lam.parts for lam in prof.per_lambda]
    assert labels == [(9,), (8, 1), (7, 2), (6, 3), (5, 4)]


def test_irrep_contributions_orthogonal_angle_is_repetition_profile():
    # phi = pi/2 reproduces the orthogonal repetition code
    ch = two_pauli(0.2271)
    rows = irrep_contributions(ch, 5, [np.pi / 2], 0.0, unitary=np.eye(2))
    rep = CodeEnsemble.repetition(5, 0.5)
    from permci.coherent import ci_pure
    assert rows[0].total == pytest.approx(ci_pure(ch, rep).total, abs=1e-10)


def test_simplex_rays_grid():
    rays = simplex_rays(3)  # 4 x 4
    assert len(rays) == 16
    for _, _, ray in rays:
        assert sum(ray) == pytest.approx(1.0)
    # theta = pi/4 (i = 2 at exponent 3), phi = 0: the two-axis symmetric ray
    ray = dict(((i, j), r) for i, j, r in rays)[(2, 0)]
    assert ray[0] == pytest.approx(0.5)
    assert ray[1] == pytest.approx(0.0, abs=1e-15)
    assert ray[2] == pytest.approx(0.5)


def test_scan_ray_orthogonal_code_no_superadditivity():
    # phi = pi/2 on the two-axis ray: orthogonal repetition codes do not
    # beat the hashing threshold at these copy counts
    pt = scan_ray((0.5, 0.0, 0.5), 5, np.pi / 2, SMALL, restarts=1)
    assert pt.status == "ok"
    assert pt.hashing_x == pytest.approx(hashing_threshold((0.5, 0.0, 0.5)),
                                         abs=1e-6)
    assert pt.difference <= 1e-6


def test_scan_ray_emits_signed_difference():
    pt = scan_ray((1 / 3, 1 / 3, 1 / 3), 3, np.pi / 2, SMALL, restarts=1)
    assert pt.status in ("ok", "exceeds-segment", "no-positive-ci")
    if pt.status == "ok":
        assert pt.threshold_x is not None
        assert pt.difference == pytest.approx(pt.threshold_x - pt.hashing_x)
