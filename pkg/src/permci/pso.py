"""Seeded global-best particle swarm optimization with box bounds.

Minimizes a callable over a rectangle.  Velocities are clamped to the box
width and positions clipped to the bounds.  Randomness comes from
per-particle generator streams spawned from the master seed, so results are
reproducible bit-for-bit no matter how particle evaluations are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np


@dataclass(frozen=True)
class SwarmConfig:
    """Hyperparameters of the swarm.

    The inertia/cognitive/social defaults are the standard constriction
    values; stalling means the best value improved by less than
    ``stall_tolerance`` over ``stall_iterations`` consecutive iterations.
    """

    swarm_size: int = 100
    max_iterations: int = 500
    inertia: float = 0.7298
    cognitive: float = 1.49618
    social: float = 1.49618
    stall_iterations: int = 50
    stall_tolerance: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.swarm_size < 2:
            raise ValueError("swarm_size must be >= 2")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")

    def with_seed(self, seed: int) -> "SwarmConfig":
        return replace(self, seed=seed)


@dataclass(eq=False)
class PsoResult:
    x: np.ndarray
    value: float
    evaluations: int
    iterations: int
    seed: int


def pso(objective, bounds, config: SwarmConfig = SwarmConfig()) -> PsoResult:
    """Minimize ``objective`` over the box ``bounds`` (shape (dims, 2)).

    Returns the best-ever particle.  Objective values of +inf mark rejected
    particles (infeasible decodes); they never become bests but keep moving.
    """
    bounds = np.asarray(bounds, dtype=float)
    if bounds.ndim != 2 or bounds.shape[1] != 2:
        raise ValueError("bounds must have shape (dims, 2)")
    if not np.all(np.isfinite(bounds)) or np.any(bounds[:, 1] <= bounds[:, 0]):
        raise ValueError("bounds must be finite with high > low")
    dims = bounds.shape[0]
    lo, hi = bounds[:, 0], bounds[:, 1]
    span = hi - lo

    streams = [np.random.Generator(np.random.PCG64(s))
               for s in np.random.SeedSequence(config.seed).spawn(config.swarm_size)]

    pos = np.empty((config.swarm_size, dims))
    vel = np.empty_like(pos)
    for i, rng in enumerate(streams):
        pos[i] = lo + rng.random(dims) * span
        vel[i] = (rng.random(dims) * 2.0 - 1.0) * span

    fvals = np.array([float(objective(p)) for p in pos])
    best_pos = pos.copy()
    best_vals = fvals.copy()
    g = int(np.argmin(best_vals))
    gbest_x = best_pos[g].copy()
    gbest_f = float(best_vals[g])
    evals = config.swarm_size

    stall = 0
    iters = 0
    for iters in range(1, config.max_iterations + 1):
        improved = False
        for i, rng in enumerate(streams):
            r1 = rng.random(dims)
            r2 = rng.random(dims)
            vel[i] = (config.inertia * vel[i]
                      + config.cognitive * r1 * (best_pos[i] - pos[i])
                      + config.social * r2 * (gbest_x - pos[i]))
            np.clip(vel[i], -span, span, out=vel[i])
            pos[i] = np.clip(pos[i] + vel[i], lo, hi)
            f = float(objective(pos[i]))
            evals += 1
            if f < best_vals[i]:
                best_vals[i] = f
                best_pos[i] = pos[i].copy()
                if f < gbest_f - config.stall_tolerance:
                    improved = True
                if f < gbest_f:
                    gbest_f = f
                    gbest_x = pos[i].copy()
        stall = 0 if improved else stall + 1
        if stall >= config.stall_iterations:
            break

    return PsoResult(x=gbest_x, value=gbest_f, evaluations=evals,
                     iterations=iters, seed=config.seed)
