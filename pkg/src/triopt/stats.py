"""Descriptive statistics and the two-sample rank-sum location test used to
mark one result sample as better (+), worse (-) or indistinguishable (~)
relative to a baseline sample.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = ["Symbol", "TestOutcome", "mean_std", "average_ranks", "rank_sum_test"]

ALPHA = 0.05


class Symbol(Enum):
    PLUS = "+"
    MINUS = "-"
    APPROX = "~"


@dataclass(frozen=True)
class TestOutcome:
    p_value: float
    symbol: Symbol
    statistic: float  # rank sum of the baseline sample


def mean_std(sample) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (n-1 divisor)."""
    values = np.asarray(sample, dtype=float)
    if values.size < 2:
        raise ValueError("standard deviation needs at least two values")
    return float(values.mean()), float(values.std(ddof=1))


def average_ranks(pooled: np.ndarray) -> np.ndarray:
    """Ranks 1..N with tied values sharing their average rank."""
    order = np.argsort(pooled, kind="stable")
    ranks = np.empty(len(pooled))
    sorted_vals = pooled[order]
    i = 0
    while i < len(pooled):
        j = i
        while j + 1 < len(pooled) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _location(sample: np.ndarray) -> float:
    return float(np.median(sample))


def rank_sum_test(baseline, other, alpha: float = ALPHA) -> TestOutcome:
    """Two-sided rank-sum test of ``other`` against ``baseline``.

    Normal approximation with tie correction and a 0.5 continuity
    correction. The symbol reads as a verdict on ``other``: MINUS when it is
    significantly worse (located higher), PLUS when significantly better,
    APPROX otherwise. Direction comes from medians, falling back to means on
    a median tie. A pooled sample with no variation is APPROX with p = 1.
    """
    a = np.asarray(baseline, dtype=float)
    b = np.asarray(other, dtype=float)
    na, nb = len(a), len(b)
    if na < 2 or nb < 2:
        raise ValueError("both samples need at least two values")
    pooled = np.concatenate([a, b])
    total = na + nb

    ranks = average_ranks(pooled)
    w = float(ranks[:na].sum())
    mean_w = na * (total + 1) / 2.0

    _, counts = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(counts ** 3 - counts)) / (total * (total - 1))
    var_w = na * nb / 12.0 * ((total + 1) - tie_term)
    if var_w <= 0.0:
        return TestOutcome(p_value=1.0, symbol=Symbol.APPROX, statistic=w)

    diff = w - mean_w
    z = (diff - 0.5 * np.sign(diff)) / math.sqrt(var_w)
    p = math.erfc(abs(z) / math.sqrt(2.0))

    if p < alpha:
        loc_a, loc_b = _location(a), _location(b)
        if loc_a == loc_b:
            loc_a, loc_b = float(a.mean()), float(b.mean())
        if loc_b > loc_a:
            symbol = Symbol.MINUS
        elif loc_b < loc_a:
            symbol = Symbol.PLUS
        else:
            symbol = Symbol.APPROX
    else:
        symbol = Symbol.APPROX
    return TestOutcome(p_value=min(p, 1.0), symbol=symbol, statistic=w)
