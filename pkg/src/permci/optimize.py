"""Coherent-information optimization, noise thresholds, and the Pauli-simplex scan."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ansatz import AnsatzSpec, DecodeError, pair_ensemble, unitary_from_params
from .channels import KrausChannel, pauli
from .closedform import hashing_threshold, pauli_antidegradable, ray_distribution
from .coherent import CIBreakdown, ci_pure, evaluate_ci
from .ensembles import CodeEnsemble
from .partitions import Partition
from .pso import PsoResult, SwarmConfig, pso

CI_POSITIVITY_CUT = 1e-12
NOISE_TOL = 1e-6


class NoBracketError(RuntimeError):
    """The requested sign change does not exist on the given interval."""


@dataclass(eq=False)
class OptResult:
    """Best decoded code found by the swarm, with its re-evaluated objective."""

    params: np.ndarray
    code: CodeEnsemble
    objective: float
    breakdown: CIBreakdown
    ansatz: AnsatzSpec
    evaluations: int
    iterations: int
    seed: int

    @property
    def per_use(self) -> float:
        return self.objective / self.code.n


def _formula_for(ansatz: AnsatzSpec) -> str:
    # Pure two-state ansatz goes through the purified picture; the free
    # schemes can decode mixed states and need the general formula.
    return "purified" if ansatz.kind == "pair" else "mixed"


def optimize_ci(ch: KrausChannel, n: int, ansatz: AnsatzSpec,
                config: SwarmConfig = SwarmConfig(),
                restarts: int = 1) -> OptResult:
    """Maximize the coherent information of the ansatz family over n copies.

    Runs ``restarts`` independent swarms (seeds config.seed, config.seed+1,
    ...) and returns the best.  The reported objective is a fresh evaluation
    of the decoded code, so it always matches ``breakdown.total``.
    """
    formula = _formula_for(ansatz)

    def objective(x: np.ndarray) -> float:
        try:
            code = ansatz.decode(x, n)
        except DecodeError:
            return np.inf
        return -evaluate_ci(ch, code, formula).total

    best: PsoResult | None = None
    evals = 0
    iters = 0
    for r in range(restarts):
        res = pso(objective, ansatz.bounds(), config.with_seed(config.seed + r))
        evals += res.evaluations
        iters += res.iterations
        if best is None or res.value < best.value:
            best = res
    code = ansatz.decode(best.x, n)
    breakdown = evaluate_ci(ch, code, formula)
    return OptResult(params=best.x, code=code, objective=breakdown.total,
                     breakdown=breakdown, ansatz=ansatz, evaluations=evals,
                     iterations=iters, seed=config.seed)


def threshold(channel_family, n: int, code: CodeEnsemble | None = None,
              optimize: dict | None = None, bracket=(1e-6, 0.5),
              noise_tol: float = NOISE_TOL, ci_cut: float = CI_POSITIVITY_CUT,
              formula: str = "auto") -> float:
    """Zero crossing of the coherent information along a one-parameter family.

    ``channel_family`` maps a noise value to a channel.  Exactly one code
    source is given: ``code`` evaluates a fixed code at every noise value
    (the default mode: the code found at the scan anchor is kept fixed),
    while ``optimize=dict(ansatz=..., config=..., restarts=...)`` re-runs
    the optimizer at every bisection point.  Requires CI > ci_cut at the low
    end of the bracket and <= ci_cut at the high end.
    """
    if (code is None) == (optimize is None):
        raise ValueError("give exactly one of code= or optimize=")

    def ci(noise: float) -> float:
        ch = channel_family(noise)
        if code is not None:
            return evaluate_ci(ch, code, formula).total
        return optimize_ci(ch, n, **optimize).objective

    lo, hi = float(bracket[0]), float(bracket[1])
    if ci(lo) <= ci_cut:
        raise NoBracketError(f"coherent information not positive at noise {lo}")
    if ci(hi) > ci_cut:
        raise NoBracketError(f"coherent information still positive at noise {hi}")
    while hi - lo > noise_tol:
        mid = (lo + hi) / 2.0
        if ci(mid) > ci_cut:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


# ---------------------------------------------------------------------------
# Per-irrep contribution profiles of the pair ansatz
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class AngleProfile:
    """Total CI and per-partition contributions of the ansatz at one angle."""

    phi: float
    theta: float
    unitary: np.ndarray
    total: float
    per_lambda: dict[Partition, tuple[float, float]]


def irrep_contributions(ch: KrausChannel, n: int, phis, theta: float,
                        unitary=None, config: SwarmConfig = SwarmConfig(),
                        restarts: int = 1) -> list[AngleProfile]:
    """Per-partition CI contributions c_lam (S_B - S_E) across ansatz angles.

    With ``unitary=None`` the qubit unitary is optimized (total CI as the
    objective) separately at each phi; otherwise the given unitary is used
    as is.  Contributions sum to the total at every angle.
    """
    rows = []
    for phi in phis:
        phi = float(phi)
        if unitary is None:
            spec = AnsatzSpec("pair", phi=phi, theta=theta)
            res = optimize_ci(ch, n, spec, config, restarts)
            u = unitary_from_params(res.params[:4])
        else:
            u = np.asarray(unitary, dtype=complex)
        code = pair_ensemble(n, phi, theta, u)
        bd = ci_pure(ch, code)
        rows.append(AngleProfile(phi=phi, theta=theta, unitary=u,
                                 total=bd.total, per_lambda=bd.per_lambda))
    return rows


# ---------------------------------------------------------------------------
# Pauli-simplex threshold scan
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class SimplexPoint:
    """One ray of the scan: anchor, code threshold, and their signed difference."""

    i_theta: int
    i_phi: int
    ray: tuple[float, float, float]
    n: int
    phi_ansatz: float
    hashing_x: float | None
    threshold_x: float | None
    difference: float | None
    status: str


def simplex_rays(delta_exponent: int):
    """Spherical-coordinate rays covering the Pauli simplex.

    Angles run over {0, delta, ..., pi/2 - delta} with delta = 2^-e pi, so
    exponent 6 gives the 32 x 32 covering.  Returns (i, j, ray) triples.
    """
    steps = 2 ** (delta_exponent - 1)
    delta = np.pi * 2.0 ** (-delta_exponent)
    out = []
    for i in range(steps):
        th = i * delta
        for j in range(steps):
            ph = j * delta
            ray = (float(np.sin(th) ** 2 * np.cos(ph) ** 2),
                   float(np.sin(th) ** 2 * np.sin(ph) ** 2),
                   float(np.cos(th) ** 2))
            out.append((i, j, ray))
    return out


def _positivity_threshold(ci, hi: float, ci_cut: float,
                          noise_tol: float) -> tuple[float | None, str]:
    # Threshold of a fixed code on (0, hi]: walk down from hi to find a
    # positive start, then bisect the crossing.
    if ci(hi) > ci_cut:
        return hi, "exceeds-segment"
    lo = hi
    for _ in range(24):
        lo /= 2.0
        if ci(lo) > ci_cut:
            break
    else:
        return None, "no-positive-ci"
    a, b = lo, hi
    while b - a > noise_tol:
        mid = (a + b) / 2.0
        if ci(mid) > ci_cut:
            a = mid
        else:
            b = mid
    return (a + b) / 2.0, "ok"


def scan_ray(ray, n: int, phi_ansatz: float,
             config: SwarmConfig = SwarmConfig(), restarts: int = 1,
             segment: float = 0.5, noise_tol: float = NOISE_TOL,
             ci_cut: float = CI_POSITIVITY_CUT,
             i_theta: int = -1, i_phi: int = -1) -> SimplexPoint:
    """One ray of the simplex scan.

    Finds the hashing-bound anchor on the segment, optimizes the pair ansatz
    (unitary and theta free, phi fixed) at that noise, then bisects the
    threshold of the resulting fixed code along the same ray.
    """
    if all(pauli_antidegradable(ray_distribution(ray, x))
           for x in np.linspace(1e-3, segment, 16)):
        return SimplexPoint(i_theta, i_phi, tuple(ray), n, phi_ansatz, None,
                            None, None, "skipped-antidegradable")
    x_h = hashing_threshold(ray, hi=segment)
    if x_h is None:
        return SimplexPoint(i_theta, i_phi, tuple(ray), n, phi_ansatz, None,
                            None, None, "no-hashing-root")
    spec = AnsatzSpec("pair", phi=phi_ansatz)
    anchor = pauli(*ray_distribution(ray, x_h))
    res = optimize_ci(anchor, n, spec, config, restarts)
    code = res.code

    def ci(noise: float) -> float:
        return evaluate_ci(pauli(*ray_distribution(ray, noise)), code,
                           "purified").total

    thr, status = _positivity_threshold(ci, segment, ci_cut, noise_tol)
    diff = (thr - x_h) if thr is not None else None
    return SimplexPoint(i_theta, i_phi, tuple(ray), n, phi_ansatz, x_h, thr,
                        diff, status)


def simplex_scan(delta_exponent: int, n_list, phi_list,
                 config: SwarmConfig = SwarmConfig(), restarts: int = 1,
                 segment: float = 0.5) -> list[SimplexPoint]:
    """Threshold-vs-hashing differences over the ray grid, for each (n, phi)."""
    points = []
    for n in n_list:
        for phi_ansatz in phi_list:
            for i, j, ray in simplex_rays(delta_exponent):
                points.append(scan_ray(ray, int(n), float(phi_ansatz), config,
                                       restarts, segment,
                                       i_theta=i, i_phi=j))
    return points
