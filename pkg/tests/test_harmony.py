"""Pitch adjustment bounds, improvisation modes and memory replacement."""
import numpy as np
import pytest

from triopt import Budget, Candidate, RandomStream, evaluate, make_problem
from triopt.harmony import HarmonyMemory, HsParams, hs_run, improvise, pitch_adjust


def _memory_of(problem, points):
    return HarmonyMemory([Candidate(np.asarray(x, float),
                                    evaluate(problem, np.asarray(x, float)))
                          for x in points])


def test_pitch_adjust_formula():
    seed = 31
    out = pitch_adjust(1.0, 0.01, RandomStream(seed))
    r = float(RandomStream(seed).uniform01())
    assert out == pytest.approx(1.0 + (2.0 * r - 1.0) * 0.01)


def test_pitch_adjust_bound():
    rng = RandomStream(8)
    for _ in range(500):
        out = pitch_adjust(0.0, 0.01, rng)
        assert abs(out) <= 0.01


def test_improvise_pure_memory_copy():
    problem = make_problem("matyas")
    memory = _memory_of(problem, [[1.25, -3.5]])
    params = HsParams(hms=1, hmcr=1.0, par=0.0)
    for seed in range(5):
        x = improvise(memory, params, problem, RandomStream(seed))
        assert x.tolist() == [1.25, -3.5]


def test_improvise_pure_random_composition():
    problem = make_problem("matyas")
    memory = _memory_of(problem, [[1.25, -3.5]])
    params = HsParams(hms=1, hmcr=0.0, par=0.0)
    draws = [improvise(memory, params, problem, RandomStream(seed))
             for seed in range(20)]
    for x in draws:
        assert np.all(x >= -10.0) and np.all(x <= 10.0)
    assert np.std([x[0] for x in draws]) > 1.0  # spread across the box


def test_improvise_pitch_stays_within_bandwidth():
    problem = make_problem("matyas")
    member = [2.0, 2.0]
    memory = _memory_of(problem, [member])
    params = HsParams(hms=1, hmcr=1.0, par=1.0, bw_scale=0.01)
    bw = params.bandwidth(problem)
    for seed in range(50):
        x = improvise(memory, params, problem, RandomStream(seed))
        assert np.all(np.abs(x - member) <= bw + 1e-12)


def test_memory_replaces_only_worst_on_strict_improvement():
    problem = make_problem("sphere", 2)
    memory = _memory_of(problem, [[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    assert memory.worst_value == 9.0
    assert not memory.replace_worst_if_better(np.array([4.0, 0.0]), 16.0)
    assert not memory.replace_worst_if_better(np.array([3.0, 0.0]), 9.0)  # tie
    assert memory.replace_worst_if_better(np.array([0.5, 0.0]), 0.25)
    assert memory.worst_value == 4.0
    assert len(memory) == 3


def test_memory_worst_nonincreasing_under_improvisation():
    problem = make_problem("booth")
    rng = RandomStream(99)
    params = HsParams()
    memory = _memory_of(problem, rng.uniform01((10, 2)) * 20.0 - 10.0)
    worst = memory.worst_value
    for _ in range(300):
        x = improvise(memory, params, problem, rng)
        memory.replace_worst_if_better(x, evaluate(problem, x))
        assert memory.worst_value <= worst
        worst = memory.worst_value
        assert len(memory) == 10


def test_hs_run_budget_and_trace():
    problem = make_problem("matyas")
    record = hs_run(problem, HsParams(), Budget(2000), 4)
    assert record.evals_used == 2000
    assert np.all(np.diff(record.trace_values) <= 0)
    assert record.initial_x.shape == (10, 2)
    repeat = hs_run(problem, HsParams(), Budget(2000), 4)
    assert record.final_best.value == repeat.final_best.value


def test_hs_hartmann3_module_example():
    problem = make_problem("hartmann3")
    finals = [hs_run(problem, HsParams(), Budget(20_000), 12345 + r).final_best.value
              for r in range(20)]
    assert np.mean(finals) == pytest.approx(-3.86, abs=1e-2)


def test_params_validation():
    with pytest.raises(ValueError):
        HsParams(hms=0)
    with pytest.raises(ValueError):
        HsParams(hmcr=1.2)
    with pytest.raises(ValueError):
        HsParams(par=-0.1)
    with pytest.raises(ValueError):
        HsParams(bw_scale=0.0)
