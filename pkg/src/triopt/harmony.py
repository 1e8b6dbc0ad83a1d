"""Harmony search: per-coordinate memory consideration, pitch adjustment and
random composition, with worst-member replacement.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .benchmarks import Problem
from .core import (Budget, Candidate, Evaluator, RandomStream, RunRecord,
                   uniform_init)

__all__ = ["HsParams", "HarmonyMemory", "pitch_adjust", "improvise", "hs_run"]


@dataclass(frozen=True)
class HsParams:
    """hms: memory size; hmcr: memory consideration probability; par: pitch
    adjustment probability; bw_scale: pitch bandwidth as a fraction of each
    coordinate's range."""

    hms: int = 10
    hmcr: float = 0.85
    par: float = 0.05
    bw_scale: float = 0.1

    def __post_init__(self):
        if self.hms < 1:
            raise ValueError("hms must be >= 1")
        if not (0.0 <= self.hmcr <= 1.0 and 0.0 <= self.par <= 1.0):
            raise ValueError("hmcr and par must be in [0, 1]")
        if self.bw_scale <= 0:
            raise ValueError("bw_scale must be positive")

    def bandwidth(self, problem: Problem) -> np.ndarray:
        return self.bw_scale * (problem.upper - problem.lower)


class HarmonyMemory:
    """Fixed-size store of candidates with a tracked worst slot."""

    def __init__(self, candidates: list[Candidate]):
        self.x = np.array([c.x for c in candidates])
        self.values = np.array([c.value for c in candidates], dtype=float)
        self._worst = int(np.argmax(self.values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def worst_value(self) -> float:
        return float(self.values[self._worst])

    def best(self) -> Candidate:
        k = int(np.argmin(self.values))
        return Candidate(np.array(self.x[k]), float(self.values[k]))

    def replace_worst_if_better(self, x: np.ndarray, value: float) -> bool:
        """Swap out the worst member when strictly improved on."""
        if value >= self.values[self._worst]:
            return False
        self.x[self._worst] = x
        self.values[self._worst] = value
        self._worst = int(np.argmax(self.values))
        return True


def pitch_adjust(value: float, bw: float, rng: RandomStream) -> float:
    """Perturb by at most ``bw`` either way: value + (2r - 1) * bw."""
    return value + (2.0 * float(rng.uniform01()) - 1.0) * bw


def improvise(memory: HarmonyMemory, params: HsParams, problem: Problem,
              rng: RandomStream, bw: np.ndarray | None = None) -> np.ndarray:
    """Compose one new vector, coordinate by coordinate.

    Each coordinate copies a uniformly chosen member's value with
    probability hmcr (then shifts it by (2r-1)*bw with probability par) and
    is otherwise drawn uniformly from the box. One (5, n) uniform block is
    consumed per call regardless of branch outcomes, which keeps the stream
    layout independent of the draws' values.
    """
    n = problem.n
    if bw is None:
        bw = params.bandwidth(problem)
    u = rng.uniform01((5, n))
    consider = u[0] < params.hmcr
    donors = (u[1] * len(memory)).astype(np.intp)
    pitched = (u[2] < params.par) & consider
    shift = (2.0 * u[3] - 1.0) * bw
    fresh = problem.lower + u[4] * (problem.upper - problem.lower)

    picked = memory.x[donors, np.arange(n)]
    x = np.where(consider, picked + shift * pitched, fresh)
    return np.clip(x, problem.lower, problem.upper)


def hs_run(problem: Problem, params: HsParams, budget: Budget,
           seed: int) -> RunRecord:
    """Improvise-and-replace until the budget is gone; traces the best member."""
    rng = RandomStream(seed)
    evaluator = Evaluator(problem, budget)
    population = uniform_init(problem, params.hms, evaluator, rng.derive("init"))
    walk = rng.derive("hs")

    memory = HarmonyMemory(population)
    bw = params.bandwidth(problem)
    while evaluator.remaining > 0:
        x = improvise(memory, params, problem, walk, bw)
        value = evaluator(x)
        memory.replace_worst_if_better(x, value)
    return evaluator.finish("hs", seed, population)
