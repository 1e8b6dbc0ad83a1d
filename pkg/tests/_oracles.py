"""Independent brute-force oracles shared by the test modules."""
from itertools import combinations

import numpy as np

from triopt.stats import average_ranks


def exact_rank_sum_p(a, b):
    """Two-sided permutation p-value for the rank sum of sample ``a``.

    Enumerates every assignment of the pooled (tie-averaged) ranks to the
    first-sample slots; p = P(|W - mean| >= |w_observed - mean|).
    """
    pooled = np.concatenate([np.asarray(a, float), np.asarray(b, float)])
    ranks = average_ranks(pooled)
    na, total = len(a), len(pooled)
    w_obs = ranks[:na].sum()
    mean_w = na * (total + 1) / 2.0
    d_obs = abs(w_obs - mean_w)
    hits = 0
    count = 0
    for combo in combinations(range(total), na):
        w = ranks[list(combo)].sum()
        count += 1
        if abs(w - mean_w) >= d_obs - 1e-12:
            hits += 1
    return hits / count
