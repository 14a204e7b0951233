import json

import numpy as np
import pytest

from permci.channels import build_channel
from permci.codefile import (CodeFile, REFERENCE_CODES, nn_benchmark_state,
                             reference_code, reference_names)
from permci.coherent import ci_brute
from permci.ensembles import CodeEnsemble
from permci.states import random_density_matrix, random_ket


def test_roundtrip_bloch(tmp_path):
    cf = reference_code("two-pauli-n9")
    path = tmp_path / "code.json"
    cf.save(path)
    back = CodeFile.load(path)
    assert back.to_dict() == cf.to_dict()
    # bytes stable across a second save
    cf.save(tmp_path / "again.json")
    assert (tmp_path / "code.json").read_bytes() == \
        (tmp_path / "again.json").read_bytes()


def test_roundtrip_matrix_states(tmp_path):
    rng = np.random.default_rng(0)
    code = CodeEnsemble(n=3, weights=np.array([0.25, 0.75]),
                        states=(random_density_matrix(3, rng),
                                random_density_matrix(3, rng)))
    cf = CodeFile.from_ensemble(code)
    path = tmp_path / "m.json"
    cf.save(path)
    back = CodeFile.load(path).to_ensemble()
    for a, b in zip(code.states, back.states):
        assert np.array_equal(a, b)
    assert np.array_equal(code.weights, back.weights)


def test_bloch_export_of_qubit_codes():
    rng = np.random.default_rng(1)
    code = CodeEnsemble.from_kets(2, [0.4, 0.6],
                                  [random_ket(2, rng), random_ket(2, rng)])
    cf = CodeFile.from_ensemble(code)
    assert all("bloch" in s for s in cf.states)
    back = cf.to_ensemble()
    for a, b in zip(code.states, back.states):
        assert np.max(np.abs(a - b)) < 1e-12


def test_format_validation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "other", "n": 1, "weights": [1.0],
                                "states": []}))
    with pytest.raises(ValueError):
        CodeFile.load(path)
    path.write_text(json.dumps({"format": "permci-code-v1", "n": 1,
                                "weights": [0.7, 0.7], "states": []}))
    with pytest.raises(ValueError):
        CodeFile.load(path)


def test_reference_registry():
    names = reference_names()
    assert "two-pauli-n9" in names
    assert "nn-damping-dephasing-k3" in names
    assert len(names) == 13
    with pytest.raises(KeyError):
        reference_code("missing")
    for name, cf in REFERENCE_CODES.items():
        assert abs(sum(cf.weights) - 1.0) < 1e-12
        code = cf.to_ensemble()
        assert code.n == cf.n and code.k == cf.k


def test_pure_metadata_controls_snapping():
    pure_cf = reference_code("two-pauli-n9")
    assert pure_cf.to_ensemble().is_pure()
    mixture_cf = reference_code("damping-dephasing-n5-k4")
    assert not mixture_cf.to_ensemble().is_pure()
    # explicit override wins
    assert mixture_cf.to_ensemble(pure_snap=1e-3).is_pure()


def test_nn_benchmark_state_shape_and_value():
    psi, n, ref_dim = nn_benchmark_state()
    assert (n, ref_dim) == (3, 8)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    ch = build_channel("damping-dephasing", {"p": 0.16, "g": 0.2})
    ci = ci_brute(ch, psi, n=n, ref_dim=ref_dim)
    assert ci / n == pytest.approx(2.0046e-2, rel=1e-4)
