"""Catalog of 27 box-constrained benchmark objectives for minimization.

Every function takes a 1-D numpy array and returns a float. Bounds, default
dimensions and reference optima are bundled per problem; ``make_problem``
builds a validated instance and ``evaluate`` dispatches to the formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "ProblemId",
    "Problem",
    "make_problem",
    "evaluate",
    "bounds",
    "default_dimension",
    "table_problems",
    "catalog_manifest",
    "HUMP_SHIFT",
]

# Offset that moves the six-hump camel minimum (~ -1.0316285) to ~0 so its
# results aggregate like the other near-zero-optimum problems.
HUMP_SHIFT = 1.0316285


class ProblemId(Enum):
    ACKLEY = "ackley"
    BEALE = "beale"
    BOHACHEVSKY = "bohachevsky"
    BOOTH = "booth"
    BRANIN = "branin"
    COLVILLE = "colville"
    DIXON_PRICE = "dixon_price"
    EASOM = "easom"
    GOLDSTEIN_PRICE = "goldstein_price"
    GRIEWANK = "griewank"
    HARTMANN3 = "hartmann3"
    HUMP = "hump"
    LEVY = "levy"
    MATYAS = "matyas"
    MICHALEWICZ = "michalewicz"
    PERM = "perm"
    POWELL = "powell"
    POWER_SUM = "power_sum"
    RASTRIGIN = "rastrigin"
    ROSENBROCK = "rosenbrock"
    SCHWEFEL = "schwefel"
    SHEKEL = "shekel"
    SHUBERT = "shubert"
    SPHERE = "sphere"
    SUM_SQUARES = "sum_squares"
    TRID = "trid"
    ZAKHAROV = "zakharov"


@dataclass(frozen=True, eq=False)
class Problem:
    """A benchmark instance: objective id, dimension, box and reference optimum.

    ``offset`` is added to the raw formula value (used by the shifted Hump
    variant); ``reference_value`` is reporting metadata and never steers a
    search.
    """

    id: ProblemId
    n: int
    lower: np.ndarray
    upper: np.ndarray
    reference_value: float | None = None
    offset: float = 0.0

    @property
    def name(self) -> str:
        return self.id.value


# ---------------------------------------------------------------------------
# Objective formulas
# ---------------------------------------------------------------------------

def _ackley(x: np.ndarray) -> float:
    n = x.size
    s1 = math.sqrt(np.dot(x, x) / n)
    s2 = np.cos(2.0 * np.pi * x).sum() / n
    return -20.0 * math.exp(-0.2 * s1) - math.exp(s2) + 20.0 + math.e


def _beale(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return ((1.5 - x1 + x1 * x2) ** 2
            + (2.25 - x1 + x1 * x2 * x2) ** 2
            + (2.625 - x1 + x1 * x2 ** 3) ** 2)


def _bohachevsky(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return (x1 * x1 + 2.0 * x2 * x2
            - 0.3 * math.cos(3.0 * math.pi * x1)
            - 0.4 * math.cos(4.0 * math.pi * x2) + 0.7)


def _booth(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return (x1 + 2.0 * x2 - 7.0) ** 2 + (2.0 * x1 + x2 - 5.0) ** 2


def _branin(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    a = x2 - 5.1 / (4.0 * math.pi ** 2) * x1 * x1 + 5.0 / math.pi * x1 - 6.0
    return a * a + 10.0 * (1.0 - 1.0 / (8.0 * math.pi)) * math.cos(x1) + 10.0


def _colville(x: np.ndarray) -> float:
    x1, x2, x3, x4 = (float(v) for v in x)
    return (100.0 * (x1 * x1 - x2) ** 2 + (x1 - 1.0) ** 2 + (x3 - 1.0) ** 2
            + 90.0 * (x3 * x3 - x4) ** 2
            + 10.1 * ((x2 - 1.0) ** 2 + (x4 - 1.0) ** 2)
            + 19.8 * (x2 - 1.0) * (x4 - 1.0))


def _dixon_price(x: np.ndarray) -> float:
    i = np.arange(2, x.size + 1)
    return float((x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] ** 2 - x[:-1]) ** 2))


def _easom(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return (-math.cos(x1) * math.cos(x2)
            * math.exp(-((x1 - math.pi) ** 2) - (x2 - math.pi) ** 2))


def _goldstein_price(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1 * x1
                                      - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (18.0 - 32.0 * x1 + 12.0 * x1 * x1
                                             + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2)
    return a * b


def _griewank(x: np.ndarray) -> float:
    i = np.arange(1, x.size + 1)
    return float(np.dot(x, x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


_HARTMANN_A = np.array([1.0, 1.2, 3.0, 3.2])
_HARTMANN_AMAT = np.array([
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
])
_HARTMANN_P = 1e-4 * np.array([
    [6890.0, 1170.0, 2673.0],
    [4699.0, 4387.0, 7470.0],
    [1091.0, 8732.0, 5547.0],
    [381.0, 5743.0, 8828.0],
])


def _hartmann3(x: np.ndarray) -> float:
    inner = np.sum(_HARTMANN_AMAT * (x - _HARTMANN_P) ** 2, axis=1)
    return float(-np.sum(_HARTMANN_A * np.exp(-inner)))


def _hump(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return (4.0 * x1 * x1 - 2.1 * x1 ** 4 + x1 ** 6 / 3.0
            + x1 * x2 - 4.0 * x2 * x2 + 4.0 * x2 ** 4)


def _levy(x: np.ndarray) -> float:
    y = 1.0 + (x - 1.0) / 4.0
    s = np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[:-1] + 1.0) ** 2))
    tail = (y[-1] - 1.0) ** 2 * (1.0 + 10.0 * math.sin(math.pi * y[-1]) ** 2)
    return float(math.sin(math.pi * y[0]) ** 2 + s + tail)


def _matyas(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return 0.26 * (x1 * x1 + x2 * x2) - 0.48 * x1 * x2


def _michalewicz(x: np.ndarray) -> float:
    x1, x2 = float(x[0]), float(x[1])
    return -(math.sin(x1) * math.sin(x1 * x1 / math.pi) ** 20
             + math.sin(x2) * math.sin(2.0 * x2 * x2 / math.pi) ** 20)


def _perm(x: np.ndarray) -> float:
    n = x.size
    i = np.arange(1, n + 1, dtype=float)
    total = 0.0
    for k in range(1, n + 1):
        total += np.sum((i ** k + 0.5) * ((x / i) ** k - 1.0)) ** 2
    return float(total)


def _powell(x: np.ndarray) -> float:
    a = x[0::4]
    b = x[1::4]
    c = x[2::4]
    d = x[3::4]
    return float(np.sum((a + 10.0 * b) ** 2 + 5.0 * (c - d) ** 2
                        + (b - c) ** 4 + 10.0 * (a - d) ** 4))


_POWER_SUM_B = np.array([8.0, 18.0, 44.0, 114.0])


def _power_sum(x: np.ndarray) -> float:
    total = 0.0
    for k in range(1, x.size + 1):
        total += (np.sum(x ** k) - _POWER_SUM_B[k - 1]) ** 2
    return float(total)


def _rastrigin(x: np.ndarray) -> float:
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def _rosenbrock(x: np.ndarray) -> float:
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def _schwefel(x: np.ndarray) -> float:
    return float(418.9829 * x.size - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


_SHEKEL_BETA = 0.1 * np.array([1.0, 2.0, 2.0, 4.0, 4.0, 6.0, 3.0, 7.0, 5.0, 5.0])
_SHEKEL_C = np.array([
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 5.0, 1.0, 2.0, 3.6],
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 3.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.6],
])


def _shekel(x: np.ndarray) -> float:
    d = np.sum((x[:, None] - _SHEKEL_C) ** 2, axis=0) + _SHEKEL_BETA
    return float(-np.sum(1.0 / d))


def _shubert(x: np.ndarray) -> float:
    i = np.arange(1.0, 6.0)
    s1 = np.sum(i * np.cos((i + 1.0) * x[0] + i))
    s2 = np.sum(i * np.cos((i + 1.0) * x[1] + i))
    return float(s1 * s2)


def _sphere(x: np.ndarray) -> float:
    return float(np.dot(x, x))


def _sum_squares(x: np.ndarray) -> float:
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x * x))


def _trid(x: np.ndarray) -> float:
    return float(np.sum((x - 1.0) ** 2) - np.sum(x[1:] * x[:-1]))


def _zakharov(x: np.ndarray) -> float:
    s1 = float(np.dot(x, x))
    s2 = float(np.sum(0.5 * np.arange(1, x.size + 1) * x))
    return s1 + s2 ** 2 + s2 ** 4


# ---------------------------------------------------------------------------
# Catalog metadata
# ---------------------------------------------------------------------------

# Per-coordinate residual of the Schwefel formula at the true minimizer
# (the 418.9829 constant does not cancel the sine term exactly).
_SCHWEFEL_RESIDUAL = 1.272756702519473e-05
_HUMP_MIN = -1.0316284534898776

# name -> (function, default n, (low, high) or callable(n), reference or callable(n))
_CATALOG: dict[ProblemId, tuple] = {
    ProblemId.ACKLEY: (_ackley, 2, (-15.0, 30.0), 0.0),
    ProblemId.BEALE: (_beale, 2, (-4.5, 4.5), 0.0),
    ProblemId.BOHACHEVSKY: (_bohachevsky, 2, (-100.0, 100.0), 0.0),
    ProblemId.BOOTH: (_booth, 2, (-10.0, 10.0), 0.0),
    ProblemId.BRANIN: (_branin, 2, None, 0.39788735772973816),
    ProblemId.COLVILLE: (_colville, 4, (-10.0, 10.0), 0.0),
    ProblemId.DIXON_PRICE: (_dixon_price, 25, (-10.0, 10.0), 0.0),
    ProblemId.EASOM: (_easom, 2, (-100.0, 100.0), -1.0),
    ProblemId.GOLDSTEIN_PRICE: (_goldstein_price, 2, (-2.0, 2.0), 3.0),
    ProblemId.GRIEWANK: (_griewank, 2, (-600.0, 600.0), 0.0),
    ProblemId.HARTMANN3: (_hartmann3, 3, (0.0, 1.0), -3.8627775125375985),
    ProblemId.HUMP: (_hump, 2, (-5.0, 5.0), _HUMP_MIN),
    ProblemId.LEVY: (_levy, 30, (-10.0, 10.0), 0.0),
    ProblemId.MATYAS: (_matyas, 2, (-10.0, 10.0), 0.0),
    ProblemId.MICHALEWICZ: (_michalewicz, 2, (0.0, math.pi), -1.8013034100985532),
    ProblemId.PERM: (_perm, 4, lambda n: (-float(n), float(n)), 0.0),
    ProblemId.POWELL: (_powell, 24, (-4.0, 5.0), 0.0),
    ProblemId.POWER_SUM: (_power_sum, 4, (-4.0, 5.0), 0.0),
    ProblemId.RASTRIGIN: (_rastrigin, 2, (-5.12, 5.12), 0.0),
    ProblemId.ROSENBROCK: (_rosenbrock, 2, (-5.0, 10.0), 0.0),
    ProblemId.SCHWEFEL: (_schwefel, 2, (-500.0, 500.0),
                         lambda n: n * _SCHWEFEL_RESIDUAL),
    ProblemId.SHEKEL: (_shekel, 4, (0.0, 10.0), -10.536409816692046),
    ProblemId.SHUBERT: (_shubert, 2, (-10.0, 10.0), -186.73090883102398),
    ProblemId.SPHERE: (_sphere, 30, (-5.12, 5.12), 0.0),
    ProblemId.SUM_SQUARES: (_sum_squares, 20, (-10.0, 10.0), 0.0),
    ProblemId.TRID: (_trid, 10, lambda n: (-float(n * n), float(n * n)),
                     lambda n: -n * (n + 4) * (n - 1) / 6.0),
    ProblemId.ZAKHAROV: (_zakharov, 2, (-5.0, 10.0), 0.0),
}

_TWO_D_ONLY = {
    ProblemId.BEALE, ProblemId.BOHACHEVSKY, ProblemId.BOOTH, ProblemId.BRANIN,
    ProblemId.EASOM, ProblemId.GOLDSTEIN_PRICE, ProblemId.HUMP, ProblemId.MATYAS,
    ProblemId.MICHALEWICZ, ProblemId.SHUBERT,
}
_FIXED_N = {ProblemId.HARTMANN3: 3, ProblemId.COLVILLE: 4, ProblemId.PERM: 4,
            ProblemId.POWER_SUM: 4, ProblemId.SHEKEL: 4}
_MIN_TWO = {ProblemId.DIXON_PRICE, ProblemId.ROSENBROCK, ProblemId.TRID}


def _validate_n(pid: ProblemId, n: int) -> None:
    if n < 1:
        raise ValueError(f"{pid.value}: dimension must be positive, got {n}")
    if pid in _TWO_D_ONLY and n != 2:
        raise ValueError(f"{pid.value} is defined for n=2 only, got n={n}")
    if pid in _FIXED_N and n != _FIXED_N[pid]:
        raise ValueError(f"{pid.value} requires n={_FIXED_N[pid]}, got n={n}")
    if pid is ProblemId.POWELL and n % 4 != 0:
        raise ValueError(f"powell requires n divisible by 4, got n={n}")
    if pid in _MIN_TWO and n < 2:
        raise ValueError(f"{pid.value} requires n >= 2, got n={n}")


def default_dimension(pid: ProblemId) -> int:
    """Dimension each problem is benchmarked at."""
    return _CATALOG[pid][1]


def make_problem(pid: ProblemId | str, n: int | None = None, *,
                 shifted: bool = False) -> Problem:
    """Build a validated problem instance.

    ``shifted=True`` is valid for Hump only and adds ``HUMP_SHIFT`` to every
    value so the minimum sits near zero.
    """
    if isinstance(pid, str):
        pid = ProblemId(pid)
    if shifted and pid is not ProblemId.HUMP:
        raise ValueError("shifted variant exists only for hump")
    _, def_n, box, ref = _CATALOG[pid]
    if n is None:
        n = def_n
    _validate_n(pid, n)
    if callable(box):
        box = box(n)
    if box is None:  # branin: the one per-coordinate asymmetric box
        lower = np.array([-5.0, 0.0])
        upper = np.array([10.0, 15.0])
    else:
        lower = np.full(n, box[0])
        upper = np.full(n, box[1])
    lower.setflags(write=False)
    upper.setflags(write=False)
    if callable(ref):
        ref = ref(n)
    offset = HUMP_SHIFT if shifted else 0.0
    if shifted:
        ref = ref + HUMP_SHIFT
    return Problem(id=pid, n=n, lower=lower, upper=upper,
                   reference_value=ref, offset=offset)


def evaluate(problem: Problem, x: np.ndarray) -> float:
    """Objective value at ``x``; deterministic, defined also outside the box."""
    if len(x) != problem.n:
        raise ValueError(f"{problem.name}: expected {problem.n} coordinates, got {len(x)}")
    value = _CATALOG[problem.id][0](np.asarray(x, dtype=float))
    return value + problem.offset


def bounds(problem: Problem) -> tuple[np.ndarray, np.ndarray]:
    """Per-coordinate (lower, upper) box."""
    return problem.lower, problem.upper


def table_problems(n_override: dict[ProblemId, int] | None = None) -> list[Problem]:
    """The 27 benchmark instances at their default dimensions, in catalog
    order, with Hump in its shifted form (its reporting convention)."""
    out = []
    for pid in ProblemId:
        n = (n_override or {}).get(pid)
        out.append(make_problem(pid, n, shifted=(pid is ProblemId.HUMP)))
    return out


def _fmt_bounds(p: Problem) -> str:
    pairs = {(float(lo), float(hi)) for lo, hi in zip(p.lower, p.upper)}
    if len(pairs) == 1:
        lo, hi = next(iter(pairs))
        return f"{lo:g}:{hi:g}"
    return ";".join(f"{lo:g}:{hi:g}" for lo, hi in zip(p.lower, p.upper))


def catalog_manifest(problems: list[Problem] | None = None) -> str:
    """One text line per problem: index, name, n, bounds, reference value."""
    if problems is None:
        problems = table_problems()
    lines = ["index,name,n,bounds,reference"]
    for i, p in enumerate(problems, start=1):
        ref = "" if p.reference_value is None else f"{p.reference_value:.17g}"
        lines.append(f"{i},{p.name},{p.n},{_fmt_bounds(p)},{ref}")
    return "\n".join(lines) + "\n"
