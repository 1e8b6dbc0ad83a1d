"""Neighborhood moves, standardized fitness, roulette selection and scouts."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triopt import Budget, RandomStream, make_problem
from triopt.abc_colony import (AbcParams, abc_run, fitness_of, neighbor_move,
                               roulette_pick, selection_probabilities)


def test_fitness_of():
    assert fitness_of(0.0) == 1.0
    assert fitness_of(1.0) == 0.5
    assert fitness_of(-3.86) == pytest.approx(4.86)


def test_selection_probabilities_cases():
    p = selection_probabilities(np.array([0.0, 1.0]))
    assert p.tolist() == pytest.approx([2.0 / 3.0, 1.0 / 3.0])
    p = selection_probabilities(np.array([5.0, 5.0, 5.0, 5.0]))
    assert p.tolist() == pytest.approx([0.25] * 4)
    assert selection_probabilities(np.array([3.0])).tolist() == [1.0]


@given(st.lists(st.floats(-100.0, 100.0), min_size=1, max_size=12))
@settings(max_examples=80, deadline=None)
def test_selection_probabilities_normalized_and_positive(values):
    p = selection_probabilities(np.asarray(values))
    assert np.all(p > 0.0)
    assert abs(p.sum() - 1.0) < 1e-12


def test_neighbor_move_degenerate_colony():
    problem = make_problem("matyas")
    positions = np.tile([2.0, -1.0], (4, 1))
    out = neighbor_move(positions, 1, problem, RandomStream(3))
    assert out.tolist() == [2.0, -1.0]


def test_neighbor_move_touches_one_coordinate_and_avoids_self():
    problem = make_problem("matyas")
    positions = np.array([[1.0, 1.0], [5.0, -5.0]])
    rng = RandomStream(11)
    for _ in range(200):
        out = neighbor_move(positions, 0, problem, rng)
        changed = np.nonzero(out != positions[0])[0]
        assert len(changed) <= 1
        if len(changed) == 1:
            j = changed[0]
            # with two sources k must be source 1; the move is along that difference
            phi = (out[j] - positions[0, j]) / (positions[0, j] - positions[1, j])
            assert -1.0 <= phi <= 1.0
        assert np.all(out >= -10.0) and np.all(out <= 10.0)


def test_roulette_frequencies_match_probabilities():
    values = np.array([0.0, 1.0, 3.0])
    probs = selection_probabilities(values)
    wheel = np.cumsum(probs)
    draws = RandomStream(17).uniform01(100_000)
    picks = np.searchsorted(wheel, draws, side="right")
    freq = np.bincount(picks, minlength=3) / len(draws)
    assert np.all(np.abs(freq - probs) < 0.01)


def test_roulette_pick_edges():
    wheel = np.array([0.2, 0.5, 1.0])
    assert roulette_pick(wheel, 0.0) == 0
    assert roulette_pick(wheel, 0.19) == 0
    assert roulette_pick(wheel, 0.2) == 1
    assert roulette_pick(wheel, 0.99) == 2


def test_abc_run_budget_trace_and_shared_init():
    problem = make_problem("matyas")
    record = abc_run(problem, AbcParams(), Budget(2000), 6)
    assert record.evals_used == 2000
    assert np.all(np.diff(record.trace_values) <= 0)
    # the full shared population is drawn even though only sn sources are kept
    assert record.initial_x.shape == (10, 2)
    repeat = abc_run(problem, AbcParams(), Budget(2000), 6)
    assert record.final_best.value == repeat.final_best.value


def test_scout_replaces_stagnant_source_without_losing_best():
    # a tiny limit forces frequent scouting; the best-ever trace must survive
    problem = make_problem("rastrigin", 2)
    record = abc_run(problem, AbcParams(sn=5, limit=2), Budget(3000), 9)
    assert np.all(np.diff(record.trace_values) <= 0)
    assert record.final_best.value == record.trace_values[-1]


def test_abc_improves_on_simple_problem():
    problem = make_problem("sphere", 2)
    record = abc_run(problem, AbcParams(), Budget(5000), 1)
    assert record.final_best.value < 1e-6


def test_params_validation():
    with pytest.raises(ValueError):
        AbcParams(sn=1)
    with pytest.raises(ValueError):
        AbcParams(sn=11)
    with pytest.raises(ValueError):
        AbcParams(limit=0)
