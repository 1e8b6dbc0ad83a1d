"""State transition algorithm: an individual-based search driven by four
geometric moves (rotation, translation, expansion, axesion) under greedy
acceptance, with a periodically resetting rotation factor.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .benchmarks import Problem
from .core import (POPULATION_SIZE, Budget, Candidate, Evaluator, RandomStream,
                   RunRecord, clip_to_bounds, uniform_init)

__all__ = [
    "StaParams",
    "StaState",
    "rotate",
    "translate",
    "expand",
    "axesion",
    "rotation_factor_schedule",
    "sta_run",
]


@dataclass(frozen=True)
class StaParams:
    """Move scales and sampling width.

    The rotation factor decays from ``alpha_max`` by ``fc`` each iteration
    and resets once it falls below ``alpha_min``; ``se`` candidates are
    sampled per move application.
    """

    alpha_max: float = 1.0
    alpha_min: float = 1e-4
    fc: float = 2.0
    beta: float = 1.0
    gamma: float = 1.0
    delta: float = 1.0
    se: int = 10

    def __post_init__(self):
        if not (self.alpha_max >= self.alpha_min > 0):
            raise ValueError("need alpha_max >= alpha_min > 0")
        if self.fc <= 1:
            raise ValueError("fc must be > 1")
        if self.se < 1:
            raise ValueError("se must be >= 1")
        if min(self.beta, self.gamma, self.delta) <= 0:
            raise ValueError("beta, gamma, delta must be positive")


@dataclass
class StaState:
    best: Candidate
    previous_best: Candidate
    alpha: float


# ---------------------------------------------------------------------------
# Geometric moves. Each batch helper returns a (count, n) array and is the
# single source of truth; the public single-candidate form is batch size 1.
# ---------------------------------------------------------------------------

def _rotate_batch(x: np.ndarray, alpha: float, rng: RandomStream,
                  count: int) -> np.ndarray:
    n = x.size
    norm = float(np.linalg.norm(x))
    if norm == 0.0 or not np.isfinite(norm):
        return np.tile(x, (count, 1))
    r = rng.symmetric((count, n, n))
    return x + (alpha / (n * norm)) * (r @ x)


def _translate_batch(x_new: np.ndarray, x_old: np.ndarray, beta: float,
                     rng: RandomStream, count: int) -> np.ndarray:
    d = x_new - x_old
    norm = float(np.linalg.norm(d))
    if norm == 0.0:
        return np.tile(x_new, (count, 1))
    r = rng.uniform01(count)
    return x_new + (beta / norm) * r[:, None] * d


def _expand_batch(x: np.ndarray, gamma: float, rng: RandomStream,
                  count: int) -> np.ndarray:
    g = rng.normal((count, x.size))
    return x * (1.0 + gamma * g)


def _axesion_batch(x: np.ndarray, delta: float, rng: RandomStream,
                   count: int) -> np.ndarray:
    idx = rng.integers(x.size, size=count)
    g = rng.normal(count)
    out = np.tile(x, (count, 1))
    rows = np.arange(count)
    out[rows, idx] = x[idx] * (1.0 + delta * g)
    return out


def rotate(x: np.ndarray, alpha: float, rng: RandomStream) -> np.ndarray:
    """Random step inside a ball of radius ~alpha around ``x``; the origin is
    a fixed point (the move is undefined there and returns ``x``)."""
    return _rotate_batch(np.asarray(x, dtype=float), alpha, rng, 1)[0]


def translate(x_new: np.ndarray, x_old: np.ndarray, beta: float,
              rng: RandomStream) -> np.ndarray:
    """Step along the ray from ``x_old`` through ``x_new``, at most ``beta``
    beyond ``x_new``; coincident inputs return ``x_new``."""
    return _translate_batch(np.asarray(x_new, dtype=float),
                            np.asarray(x_old, dtype=float), beta, rng, 1)[0]


def expand(x: np.ndarray, gamma: float, rng: RandomStream) -> np.ndarray:
    """Scale each coordinate by an independent 1 + gamma*N(0,1) factor."""
    return _expand_batch(np.asarray(x, dtype=float), gamma, rng, 1)[0]


def axesion(x: np.ndarray, delta: float, rng: RandomStream) -> np.ndarray:
    """Scale one uniformly chosen coordinate by 1 + delta*N(0,1)."""
    return _axesion_batch(np.asarray(x, dtype=float), delta, rng, 1)[0]


def rotation_factor_schedule(params: StaParams):
    """Infinite alpha sequence: alpha_max, /fc, ... , reset below alpha_min."""
    alpha = params.alpha_max
    while True:
        if alpha < params.alpha_min:
            alpha = params.alpha_max
        yield alpha
        alpha = alpha / params.fc


def _sample_round(state: StaState, batch, params: StaParams,
                  problem: Problem, evaluator: Evaluator,
                  rng: RandomStream) -> StaState:
    """One move application: sample up to ``se`` candidates from the current
    best, greedily adopt the best of them, and on improvement follow up with
    a translation round between the new and old bests."""
    m = min(params.se, evaluator.remaining)
    if m == 0:
        return state
    cands = clip_to_bounds(batch(state.best.x, rng, m), problem)
    values = np.array([evaluator(cands[i]) for i in range(m)])
    k = int(np.argmin(values))
    if values[k] < state.best.value:
        old = state.best
        state.best = Candidate(cands[k].copy(), float(values[k]))
        state.previous_best = old
        m2 = min(params.se, evaluator.remaining)
        if m2 > 0:
            tr = clip_to_bounds(
                _translate_batch(state.best.x, old.x, params.beta, rng, m2),
                problem)
            tvalues = np.array([evaluator(tr[i]) for i in range(m2)])
            j = int(np.argmin(tvalues))
            if tvalues[j] < state.best.value:
                state.best = Candidate(tr[j].copy(), float(tvalues[j]))
    return state


def sta_run(problem: Problem, params: StaParams, budget: Budget,
            seed: int) -> RunRecord:
    """Run to budget exhaustion from the best of a shared 10-point init.

    Each iteration applies expansion, rotation and axesion rounds in that
    order at the current rotation factor, then decays the factor.
    """
    rng = RandomStream(seed)
    evaluator = Evaluator(problem, budget)
    population = uniform_init(problem, POPULATION_SIZE, evaluator, rng.derive("init"))
    walk = rng.derive("sta")

    start = min(population, key=lambda c: c.value)
    best = Candidate(np.array(start.x), start.value)
    state = StaState(best=best, previous_best=best, alpha=params.alpha_max)

    expand_b = lambda x, r, m: _expand_batch(x, params.gamma, r, m)
    rotate_b = lambda x, r, m: _rotate_batch(x, state.alpha, r, m)
    axesion_b = lambda x, r, m: _axesion_batch(x, params.delta, r, m)

    schedule = rotation_factor_schedule(params)
    while evaluator.remaining > 0:
        state.alpha = next(schedule)
        for batch in (expand_b, rotate_b, axesion_b):
            state = _sample_round(state, batch, params, problem, evaluator, walk)
    return evaluator.finish("sta", seed, population)
