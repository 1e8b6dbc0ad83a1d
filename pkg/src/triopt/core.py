"""Shared optimizer plumbing: seeded streams, budget accounting, tracing.

Every objective evaluation in every algorithm goes through an ``Evaluator``,
which owns the budget counter and the best-so-far trace. This is what makes
evaluation counts comparable across algorithms.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .benchmarks import Problem, evaluate

__all__ = [
    "RandomStream",
    "Budget",
    "BudgetExhausted",
    "Candidate",
    "Evaluator",
    "RunRecord",
    "POPULATION_SIZE",
    "TRACE_CADENCE",
    "uniform_init",
    "clip_to_bounds",
    "greedy_accept",
    "format_run_record",
]

# Protocol constants: all algorithms start from the same 10-point population
# and record the running best every 10 evaluations.
POPULATION_SIZE = 10
TRACE_CADENCE = 10


class BudgetExhausted(RuntimeError):
    """Raised when an evaluation is requested past the budget cap."""


def _label_key(label: str) -> tuple[int, ...]:
    # sha256 keeps substream derivation stable across platforms and runs
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return tuple(int.from_bytes(digest[i:i + 4], "little") for i in range(0, 16, 4))


class RandomStream:
    """Deterministic random source; same seed, same draws, any platform.

    ``derive(label)`` yields an independent stream keyed by the label, so
    separate concerns (initialization vs. search moves) never share draws.
    """

    __slots__ = ("seed", "_key", "_gen")

    def __init__(self, seed: int, _key: tuple[int, ...] = ()):
        self.seed = seed
        self._key = _key
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=_key)))

    def derive(self, label: str) -> "RandomStream":
        return RandomStream(self.seed, self._key + _label_key(label))

    def uniform01(self, size=None):
        return self._gen.random(size)

    def symmetric(self, size=None):
        """Uniform draws on [-1, 1]."""
        return self._gen.uniform(-1.0, 1.0, size)

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def integers(self, k: int, size=None):
        """Uniform integers in [0, k)."""
        return self._gen.integers(0, k, size=size)


@dataclass
class Budget:
    """Evaluation allowance; ``used`` moves only through ``spend``."""

    max_evals: int
    used: int = 0

    def spend(self) -> None:
        if self.used >= self.max_evals:
            raise BudgetExhausted(f"budget of {self.max_evals} evaluations exhausted")
        self.used += 1

    @property
    def remaining(self) -> int:
        return self.max_evals - self.used


@dataclass
class Candidate:
    x: np.ndarray
    value: float


@dataclass
class RunRecord:
    """Outcome of one optimizer run on one problem."""

    algorithm: str
    problem: str
    seed: int
    trace_evals: np.ndarray
    trace_values: np.ndarray
    final_best: Candidate
    evals_used: int
    initial_x: np.ndarray
    initial_values: np.ndarray

    @property
    def trace(self) -> list[tuple[int, float]]:
        return list(zip(self.trace_evals.tolist(), self.trace_values.tolist()))


class Evaluator:
    """Budgeted objective with best-so-far tracking.

    Calls are counted one-for-one against the budget; a checkpoint
    (evals_used, best_value) is appended every ``TRACE_CADENCE`` calls.
    """

    __slots__ = ("problem", "budget", "cadence", "best_x", "best_value",
                 "_trace_evals", "_trace_values")

    def __init__(self, problem: Problem, budget: Budget, cadence: int = TRACE_CADENCE):
        self.problem = problem
        self.budget = budget
        self.cadence = cadence
        self.best_x: np.ndarray | None = None
        self.best_value = np.inf
        self._trace_evals: list[int] = []
        self._trace_values: list[float] = []

    def __call__(self, x: np.ndarray) -> float:
        self.budget.spend()
        value = evaluate(self.problem, x)
        if value < self.best_value:
            self.best_value = value
            self.best_x = np.array(x)
        if self.budget.used % self.cadence == 0:
            self._trace_evals.append(self.budget.used)
            self._trace_values.append(self.best_value)
        return value

    @property
    def remaining(self) -> int:
        return self.budget.remaining

    def finish(self, algorithm: str, seed: int,
               initial: list[Candidate]) -> RunRecord:
        if not self._trace_evals or self._trace_evals[-1] != self.budget.used:
            self._trace_evals.append(self.budget.used)
            self._trace_values.append(self.best_value)
        return RunRecord(
            algorithm=algorithm,
            problem=self.problem.name,
            seed=seed,
            trace_evals=np.asarray(self._trace_evals, dtype=np.int64),
            trace_values=np.asarray(self._trace_values, dtype=float),
            final_best=Candidate(np.array(self.best_x), float(self.best_value)),
            evals_used=self.budget.used,
            initial_x=np.array([c.x for c in initial]),
            initial_values=np.array([c.value for c in initial]),
        )


def uniform_init(problem: Problem, count: int, evaluator: Evaluator,
                 rng: RandomStream) -> list[Candidate]:
    """Evaluate ``count`` uniform points in the box, consuming budget.

    Draw order is point-major, coordinate-minor, so any two algorithms fed
    the same stream receive identical populations.
    """
    if evaluator.remaining < count:
        raise BudgetExhausted(
            f"initialization needs {count} evaluations, {evaluator.remaining} left")
    u = rng.uniform01((count, problem.n))
    points = problem.lower + u * (problem.upper - problem.lower)
    return [Candidate(points[i], evaluator(points[i])) for i in range(count)]


def clip_to_bounds(x: np.ndarray, problem: Problem) -> np.ndarray:
    """Project each coordinate onto the box."""
    return np.clip(x, problem.lower, problem.upper)


def greedy_accept(incumbent: Candidate, challenger: Candidate) -> Candidate:
    """Strict-improvement acceptance; ties keep the incumbent."""
    return challenger if challenger.value < incumbent.value else incumbent


def format_run_record(record: RunRecord, include_trace: bool = True) -> str:
    """Structured text serialization of one run."""
    lines = [
        f"algorithm={record.algorithm}",
        f"problem={record.problem}",
        f"seed={record.seed}",
        f"evals_used={record.evals_used}",
        f"final_value={record.final_best.value:.17g}",
        "final_x=" + ",".join(f"{v:.17g}" for v in record.final_best.x),
    ]
    if include_trace:
        lines.append("trace=" + ";".join(
            f"{e}:{v:.12g}" for e, v in zip(record.trace_evals, record.trace_values)))
    return "\n".join(lines) + "\n"
