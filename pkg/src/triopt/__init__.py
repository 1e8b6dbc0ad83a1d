"""triopt: three derivative-free optimizers (state transition algorithm,
harmony search, artificial bee colony) benchmarked on a 27-function suite
under a shared evaluation-budget contract.
"""

__version__ = "0.1.0"

from .benchmarks import (Problem, ProblemId, bounds, catalog_manifest,
                         default_dimension, evaluate, make_problem,
                         table_problems)
from .core import (Budget, BudgetExhausted, Candidate, Evaluator, RandomStream,
                   RunRecord, clip_to_bounds, format_run_record, greedy_accept,
                   uniform_init)
from .sta import StaParams, sta_run
from .harmony import HsParams, hs_run
from .abc_colony import AbcParams, abc_run
from .stats import Symbol, TestOutcome, mean_std, rank_sum_test
from .harness import (ExperimentConfig, ExperimentResult, comparison_table,
                      export_trace, resolve_budget, run_experiment)

__all__ = [
    "__version__",
    "Problem", "ProblemId", "bounds", "catalog_manifest", "default_dimension",
    "evaluate", "make_problem", "table_problems",
    "Budget", "BudgetExhausted", "Candidate", "Evaluator", "RandomStream",
    "RunRecord", "clip_to_bounds", "format_run_record", "greedy_accept",
    "uniform_init",
    "StaParams", "sta_run", "HsParams", "hs_run", "AbcParams", "abc_run",
    "Symbol", "TestOutcome", "mean_std", "rank_sum_test",
    "ExperimentConfig", "ExperimentResult", "comparison_table", "export_trace",
    "resolve_budget", "run_experiment",
]
