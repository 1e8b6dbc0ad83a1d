"""Artificial bee colony: employed-bee neighborhood moves, fitness-weighted
onlooker reinforcement, and scout replacement of stagnant sources.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .benchmarks import Problem
from .core import (POPULATION_SIZE, Budget, Evaluator, RandomStream,
                   RunRecord, uniform_init)

__all__ = [
    "AbcParams",
    "fitness_of",
    "selection_probabilities",
    "neighbor_move",
    "roulette_pick",
    "abc_run",
]


@dataclass(frozen=True)
class AbcParams:
    """sn: number of food sources; limit: stagnation count after which a
    source is abandoned to a scout.

    The default sn=5 is the classic even split of a 10-bee colony into
    employed and onlooker halves; one cycle then costs 10 evaluations plus
    any scout.
    """

    sn: int = POPULATION_SIZE // 2
    limit: int = 100

    def __post_init__(self):
        if self.sn < 2:
            raise ValueError("sn must be >= 2 (neighbor moves need a partner)")
        if self.sn > POPULATION_SIZE:
            raise ValueError(f"sn cannot exceed the shared population size {POPULATION_SIZE}")
        if self.limit < 1:
            raise ValueError("limit must be >= 1")


def fitness_of(value: float) -> float:
    """Standardized fitness: 1/(1+f) for f >= 0, else 1+|f|; always positive."""
    return 1.0 / (1.0 + value) if value >= 0.0 else 1.0 + abs(value)


def selection_probabilities(values: np.ndarray) -> np.ndarray:
    """Fitness-proportional probabilities over current source values."""
    values = np.asarray(values, dtype=float)
    fits = np.where(values >= 0.0, 1.0 / (1.0 + np.abs(values)), 1.0 + np.abs(values))
    return fits / fits.sum()


def _apply_move(positions: np.ndarray, i: int, j: int, k: int, phi: float,
                problem: Problem) -> np.ndarray:
    v = positions[i].copy()
    moved = v[j] + phi * (v[j] - positions[k, j])
    v[j] = min(max(moved, problem.lower[j]), problem.upper[j])
    return v


def neighbor_move(positions: np.ndarray, i: int, problem: Problem,
                  rng: RandomStream) -> np.ndarray:
    """Perturb one random coordinate of source i toward/away from a random
    other source k: x_ij + phi*(x_ij - x_kj), phi uniform on [-1,1]."""
    sn = len(positions)
    j = int(rng.integers(problem.n))
    k = int(rng.integers(sn - 1))
    if k >= i:
        k += 1
    phi = float(rng.symmetric())
    return _apply_move(positions, i, j, k, phi, problem)


def roulette_pick(cumulative: np.ndarray, draw: float) -> int:
    """Index selected by one uniform draw on a cumulative-probability wheel.
    The wheel's last entry may round a hair below 1, so the index is clamped."""
    return min(int(np.searchsorted(cumulative, draw, side="right")),
               len(cumulative) - 1)


def abc_run(problem: Problem, params: AbcParams, budget: Budget,
            seed: int) -> RunRecord:
    """Cycle employed / onlooker / scout phases until the budget is gone.

    Each phase truncates cleanly when the budget runs out mid-phase; the
    trace follows the best value ever evaluated, so scout replacement never
    loses the global best.
    """
    rng = RandomStream(seed)
    evaluator = Evaluator(problem, budget)
    # the full shared population is drawn and evaluated; the colony keeps the
    # first sn points as food sources
    population = uniform_init(problem, POPULATION_SIZE, evaluator, rng.derive("init"))
    walk = rng.derive("abc")

    sn = params.sn
    positions = np.array([c.x for c in population[:sn]])
    values = np.array([c.value for c in population[:sn]], dtype=float)
    trials = np.zeros(sn, dtype=np.int64)
    box_span = problem.upper - problem.lower

    def try_move(i: int, j: int, k: int, phi: float) -> None:
        v = _apply_move(positions, i, j, k, phi, problem)
        value = evaluator(v)
        if value < values[i]:
            positions[i] = v
            values[i] = value
            trials[i] = 0
        else:
            trials[i] += 1

    n = problem.n
    while evaluator.remaining > 0:
        # employed phase: one move per source, in index order
        m = min(sn, evaluator.remaining)
        u = walk.uniform01((3, m))
        js = (u[0] * n).astype(np.intp)
        ks = (u[1] * (sn - 1)).astype(np.intp)
        phis = 2.0 * u[2] - 1.0
        for i in range(m):
            k = int(ks[i]) + (1 if ks[i] >= i else 0)
            try_move(i, int(js[i]), k, float(phis[i]))

        # onlooker phase: sn fitness-weighted picks, each one move
        m = min(sn, evaluator.remaining)
        if m > 0:
            wheel = np.cumsum(selection_probabilities(values))
            u = walk.uniform01((4, m))
            js = (u[1] * n).astype(np.intp)
            ks = (u[2] * (sn - 1)).astype(np.intp)
            phis = 2.0 * u[3] - 1.0
            for t in range(m):
                i = roulette_pick(wheel, float(u[0, t]))
                k = int(ks[t]) + (1 if ks[t] >= i else 0)
                try_move(i, int(js[t]), k, float(phis[t]))

        # scout phase: abandon the most stagnant source, if any qualifies
        if evaluator.remaining > 0:
            i = int(np.argmax(trials))
            if trials[i] >= params.limit:
                fresh = problem.lower + walk.uniform01(problem.n) * box_span
                positions[i] = fresh
                values[i] = evaluator(fresh)
                trials[i] = 0

    return evaluator.finish("abc", seed, population)
