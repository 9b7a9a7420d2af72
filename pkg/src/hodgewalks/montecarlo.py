"""Monte Carlo simulation of walk matrices, checked against exact marginals.

Chains advance in lockstep from one seeded stream, so results are
reproducible bit for bit. The deviation bound is the 4-sigma envelope of a
binomial proportion, 4 * sqrt(0.25 / chains), which every per-state marginal
estimate must respect with overwhelming probability.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import OperatorMatrix

__all__ = ["MonteCarloResult", "run_monte_carlo", "oriented_marginal_difference"]


@dataclass
class MonteCarloResult:
    steps: int
    chains: int
    seed: int
    checkpoints: tuple[int, ...]
    empirical: np.ndarray  # (len(checkpoints), n_states)
    exact: np.ndarray  # matching exact marginals
    max_abs_deviation: float
    sigma_bound: float

    @property
    def within_bound(self) -> bool:
        return self.max_abs_deviation <= self.sigma_bound


def run_monte_carlo(
    P: OperatorMatrix,
    start_index: int,
    steps: int,
    seed: int = 0,
    chains: int = 100_000,
    checkpoints: tuple[int, ...] | None = None,
) -> MonteCarloResult:
    """Simulate `chains` trajectories of the row-stochastic matrix P and
    compare empirical state frequencies with the exact marginals.
    """
    A = P.array
    n = A.shape[0]
    if not 0 <= start_index < n:
        raise ValueError("start index out of range")
    if checkpoints is None:
        checkpoints = (steps,)
    if any(t < 0 or t > steps for t in checkpoints):
        raise ValueError("checkpoints must lie in [0, steps]")
    rowsums = A.sum(axis=1)
    if np.max(np.abs(rowsums - 1.0)) > 1e-9 or A.min() < -1e-12:
        raise ValueError("matrix is not row stochastic")
    cum = np.cumsum(A, axis=1)
    cum[:, -1] = 1.0  # guard against rounding drift at the right edge
    # chain-major uniforms: row c is chain c's substream, a pure function of
    # (seed, c), so any partition of chains over workers reproduces the run
    uniforms = np.random.default_rng(seed).random((chains, steps))
    state = np.full(chains, start_index, dtype=np.int64)
    wanted = set(checkpoints)
    empirical = np.zeros((len(checkpoints), n))
    order = {t: k for k, t in enumerate(checkpoints)}
    if 0 in wanted:
        empirical[order[0]] = np.bincount(state, minlength=n) / chains
    for t in range(1, steps + 1):
        r = uniforms[:, t - 1]
        state = np.sum(cum[state] <= r[:, None], axis=1)
        np.clip(state, 0, n - 1, out=state)
        if t in wanted:
            empirical[order[t]] = np.bincount(state, minlength=n) / chains
    exact = np.zeros((len(checkpoints), n))
    e = np.zeros(n)
    e[start_index] = 1.0
    if 0 in wanted:
        exact[order[0]] = e
    for t in range(1, steps + 1):
        e = e @ A
        if t in wanted:
            exact[order[t]] = e
    deviation = float(np.max(np.abs(empirical - exact)))
    bound = 4.0 * float(np.sqrt(0.25 / chains))
    return MonteCarloResult(
        steps, chains, seed, tuple(checkpoints), empirical, exact, deviation, bound
    )


def oriented_marginal_difference(dist: np.ndarray, m: int) -> np.ndarray:
    """Collapse a distribution over oriented states (canonical block first,
    reversed block second, optional death state last) to the per-simplex
    difference of orientation masses.
    """
    if dist.shape[0] not in (2 * m, 2 * m + 1):
        raise ValueError("distribution does not cover an oriented state space")
    return dist[:m] - dist[m : 2 * m]
