"""Random streams, budget accounting, initialization and greedy acceptance."""
import numpy as np
import pytest

from triopt import (Budget, BudgetExhausted, Candidate, Evaluator, RandomStream,
                    clip_to_bounds, format_run_record, greedy_accept,
                    make_problem, uniform_init)


def test_same_seed_same_draws():
    a = RandomStream(42)
    b = RandomStream(42)
    assert np.array_equal(a.uniform01(100), b.uniform01(100))
    assert np.array_equal(a.normal(50), b.normal(50))
    assert np.array_equal(a.integers(7, size=20), b.integers(7, size=20))


def test_different_seeds_differ():
    assert not np.array_equal(RandomStream(1).uniform01(10),
                              RandomStream(2).uniform01(10))


def test_derived_substreams():
    root = RandomStream(7)
    a = root.derive("init")
    b = RandomStream(7).derive("init")
    c = root.derive("walk")
    assert np.array_equal(a.uniform01(20), b.uniform01(20))
    assert not np.array_equal(RandomStream(7).derive("init").uniform01(20),
                              c.uniform01(20))
    # nested derivation is deterministic too
    assert np.array_equal(RandomStream(7).derive("a").derive("b").uniform01(5),
                          RandomStream(7).derive("a").derive("b").uniform01(5))


def test_draw_ranges():
    rng = RandomStream(3)
    u = rng.uniform01(1000)
    assert np.all((u >= 0.0) & (u < 1.0))
    s = rng.symmetric(1000)
    assert np.all((s >= -1.0) & (s <= 1.0))
    assert np.min(s) < -0.5 and np.max(s) > 0.5
    k = rng.integers(4, size=1000)
    assert set(np.unique(k)) == {0, 1, 2, 3}


def test_budget_spend_and_exhaustion():
    budget = Budget(3)
    for _ in range(3):
        budget.spend()
    assert budget.used == 3 and budget.remaining == 0
    with pytest.raises(BudgetExhausted):
        budget.spend()
    assert budget.used == 3


def test_uniform_init_in_bounds_and_counted():
    problem = make_problem("sphere", 2)
    budget = Budget(50)
    ev = Evaluator(problem, budget)
    pop = uniform_init(problem, 10, ev, RandomStream(11).derive("init"))
    assert len(pop) == 10
    assert budget.used == 10
    for c in pop:
        assert np.all(c.x >= -5.12) and np.all(c.x <= 5.12)
        assert c.value == pytest.approx(float(c.x @ c.x))


def test_uniform_init_deterministic():
    problem = make_problem("branin")
    pops = []
    for _ in range(2):
        ev = Evaluator(problem, Budget(100))
        pops.append(uniform_init(problem, 10, ev, RandomStream(5).derive("init")))
    for c1, c2 in zip(*pops):
        assert np.array_equal(c1.x, c2.x) and c1.value == c2.value


def test_uniform_init_budget_error():
    problem = make_problem("sphere", 2)
    ev = Evaluator(problem, Budget(5))
    with pytest.raises(BudgetExhausted):
        uniform_init(problem, 10, ev, RandomStream(0))


def test_clip_to_bounds():
    matyas = make_problem("matyas")
    assert clip_to_bounds(np.array([100.0, 100.0]), matyas).tolist() == [10.0, 10.0]
    assert clip_to_bounds(np.array([0.0, 0.0]), matyas).tolist() == [0.0, 0.0]
    branin = make_problem("branin")
    assert clip_to_bounds(np.array([-7.0, 20.0]), branin).tolist() == [-5.0, 15.0]


def test_greedy_accept():
    inc = Candidate(np.array([0.0]), 1.0)
    better = Candidate(np.array([1.0]), 0.5)
    tie = Candidate(np.array([2.0]), 1.0)
    worse = Candidate(np.array([3.0]), 2.0)
    assert greedy_accept(inc, better) is better
    assert greedy_accept(inc, tie) is inc
    assert greedy_accept(inc, worse) is inc


def test_evaluator_trace_cadence_and_monotonicity():
    problem = make_problem("sphere", 2)
    ev = Evaluator(problem, Budget(35))
    rng = RandomStream(9)
    for _ in range(35):
        ev(rng.uniform01(2) * 5.0)
    record = ev.finish("x", 9, [Candidate(np.zeros(2), 0.0)])
    assert record.trace_evals.tolist() == [10, 20, 30, 35]
    assert np.all(np.diff(record.trace_values) <= 0)
    assert record.trace_values[-1] == record.final_best.value
    assert record.evals_used == 35


def test_evaluator_tracks_best():
    problem = make_problem("sphere", 2)
    ev = Evaluator(problem, Budget(10))
    ev(np.array([3.0, 0.0]))
    ev(np.array([1.0, 0.0]))
    ev(np.array([2.0, 0.0]))
    assert ev.best_value == 1.0
    assert ev.best_x.tolist() == [1.0, 0.0]


def test_format_run_record():
    problem = make_problem("sphere", 2)
    ev = Evaluator(problem, Budget(20))
    pop = uniform_init(problem, 10, ev, RandomStream(1).derive("init"))
    for _ in range(10):
        ev(np.zeros(2))
    record = ev.finish("sta", 1, pop)
    text = format_run_record(record)
    assert "algorithm=sta" in text
    assert "problem=sphere" in text
    assert "seed=1" in text
    assert "evals_used=20" in text
    assert "final_value=0" in text
    assert "trace=" in text and "10:" in text
    bare = format_run_record(record, include_trace=False)
    assert "trace=" not in bare
