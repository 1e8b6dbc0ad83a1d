"""Experiment orchestration: runs problems x algorithms x seeds under equal
evaluation budgets with shared per-run initial populations, then reduces the
results into a comparison table and averaged convergence traces.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .abc_colony import AbcParams, abc_run
from .benchmarks import Problem, ProblemId, make_problem
from .core import POPULATION_SIZE, Budget, RunRecord, format_run_record
from .harmony import HsParams, hs_run
from .sta import StaParams, sta_run
from .stats import TestOutcome, mean_std, rank_sum_test

__all__ = [
    "ALGORITHMS",
    "ConfigError",
    "ExperimentConfig",
    "ComparisonRow",
    "RunSummary",
    "ExperimentResult",
    "resolve_budget",
    "resolve_problem_name",
    "run_experiment",
    "export_trace",
    "load_config_file",
]

# display order for report columns; the baseline algorithm comes last
ALGO_ORDER = ("hs", "abc", "sta")

ALGORITHMS = {
    "hs": (HsParams, hs_run),
    "abc": (AbcParams, abc_run),
    "sta": (StaParams, sta_run),
}

# evaluation budget per dimension: population size x iteration cap
_ITERATION_CAPS = {2: 1_000, 3: 2_000, 4: 4_000, 10: 10_000,
                   20: 50_000, 24: 50_000, 25: 50_000, 30: 100_000}


class ConfigError(ValueError):
    pass


def resolve_budget(problem: Problem, override: int | None = None) -> int:
    """Evaluations allowed on this problem (same for every algorithm)."""
    if override is not None:
        if override < POPULATION_SIZE:
            raise ConfigError(f"budget override {override} cannot cover initialization")
        return int(override)
    cap = _ITERATION_CAPS.get(problem.n)
    if cap is None:
        raise ConfigError(
            f"no default budget for n={problem.n}; pass a budget override")
    return POPULATION_SIZE * cap


_CATALOG_ORDER = [pid.value for pid in ProblemId]


def resolve_problem_name(name: str) -> str:
    """Accept catalog names ('ackley') or index aliases ('f1'..'f27')."""
    name = name.strip().lower()
    if name.startswith("f") and name[1:].isdigit():
        idx = int(name[1:])
        if not 1 <= idx <= len(_CATALOG_ORDER):
            raise ConfigError(f"unknown problem index {name}")
        return _CATALOG_ORDER[idx - 1]
    if name not in _CATALOG_ORDER:
        raise ConfigError(f"unknown problem {name!r}")
    return name


@dataclass(frozen=True)
class ExperimentConfig:
    problems: tuple[str, ...] = tuple(_CATALOG_ORDER)
    algorithms: tuple[str, ...] = ALGO_ORDER
    runs: int = 20
    base_seed: int = 12345
    budget_override: int | None = None
    budget_divisor: int = 1
    jobs: int = 1
    out_dir: str | None = None
    sta: dict = field(default_factory=dict)
    hs: dict = field(default_factory=dict)
    abc: dict = field(default_factory=dict)
    record_traces: bool = False

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError("runs must be >= 1")
        object.__setattr__(self, "problems",
                           tuple(resolve_problem_name(p) for p in self.problems))
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {a!r}")

    def seed_for_run(self, run_index: int) -> int:
        return self.base_seed + run_index

    def params_for(self, algo: str):
        cls = ALGORITHMS[algo][0]
        overrides = getattr(self, algo)
        base = cls()
        return replace(base, **overrides) if overrides else base


@dataclass
class RunSummary:
    problem: str
    algorithm: str
    seed: int
    final_value: float
    evals_used: int


@dataclass
class ComparisonRow:
    problem: str
    n: int
    budget: int
    stats: dict[str, tuple[float, float]]          # algo -> (mean, std)
    outcomes: dict[str, TestOutcome]               # competitor -> verdict vs sta
    error: str | None = None


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    rows: list[ComparisonRow]
    runs: list[RunSummary]
    init_populations: dict[tuple[str, str, int], np.ndarray]
    traces: dict[str, dict[str, np.ndarray]]       # problem -> {"evals", algo...}

    @property
    def failed_rows(self) -> list[ComparisonRow]:
        return [r for r in self.rows if r.error]


def _build_problem(name: str) -> Problem:
    pid = ProblemId(name)
    return make_problem(pid, shifted=(pid is ProblemId.HUMP))


def _execute_run(task):
    """Worker entry: one (problem, algorithm, seed) run. Must stay picklable.
    Failures are returned, not raised, so one bad run cannot take down the
    rest of the grid."""
    name, algo, overrides, budget, seed = task
    try:
        problem = _build_problem(name)
        params_cls, run_fn = ALGORITHMS[algo]
        params = replace(params_cls(), **overrides) if overrides else params_cls()
        record = run_fn(problem, params, Budget(budget), seed)
        return name, algo, seed, record
    except Exception as exc:
        return name, algo, seed, f"{type(exc).__name__}: {exc}"


def _iter_records(config: ExperimentConfig, tasks):
    if config.jobs <= 1:
        for task in tasks:
            yield _execute_run(task)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        futures = [pool.submit(_execute_run, t) for t in tasks]
        for fut in as_completed(futures):
            yield fut.result()


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute the configured grid and reduce it to comparison rows.

    Fully deterministic for a given config: per-run seeds are
    base_seed + run_index, shared by all algorithms so their initial
    populations coincide, and all reductions happen in sorted key order
    regardless of completion order.
    """
    problems = {name: _build_problem(name) for name in config.problems}
    budgets = {name: resolve_budget(p, config.budget_override) // config.budget_divisor
               for name, p in problems.items()}
    seeds = [config.seed_for_run(r) for r in range(config.runs)]
    overrides = {a: dict(getattr(config, a)) for a in config.algorithms}

    tasks = [(name, algo, overrides[algo], budgets[name], seed)
             for name in config.problems
             for algo in config.algorithms
             for seed in seeds]

    finals: dict[tuple[str, str], dict[int, float]] = {}
    evals_used: dict[tuple[str, str, int], int] = {}
    inits: dict[tuple[str, str, int], np.ndarray] = {}
    pending_traces: dict[tuple[str, str], dict[int, np.ndarray]] = {}
    trace_grid: dict[str, np.ndarray] = {}
    traces: dict[str, dict[str, np.ndarray]] = {}
    errors: dict[str, str] = {}
    record_dir = None
    if config.record_traces and config.out_dir:
        record_dir = os.path.join(config.out_dir, "runs")
        os.makedirs(record_dir, exist_ok=True)

    def absorb(name: str, algo: str, seed: int, record: RunRecord):
        finals.setdefault((name, algo), {})[seed] = record.final_best.value
        evals_used[(name, algo, seed)] = record.evals_used
        inits[(name, algo, seed)] = np.column_stack(
            [record.initial_x, record.initial_values])
        grid = trace_grid.setdefault(name, record.trace_evals)
        if not np.array_equal(grid, record.trace_evals):
            raise RuntimeError(f"trace checkpoint mismatch on {name}")
        group = pending_traces.setdefault((name, algo), {})
        group[seed] = record.trace_values
        if len(group) == config.runs:  # reduce in seed order, then free
            stack = np.array([group[s] for s in seeds])
            traces.setdefault(name, {})[algo] = stack.mean(axis=0)
            del pending_traces[(name, algo)]
        if record_dir is not None:
            path = os.path.join(record_dir, f"{name}_{algo}_{seed}.txt")
            with open(path, "w") as fh:
                fh.write(format_run_record(record))

    for name, algo, seed, payload in _iter_records(config, tasks):
        if isinstance(payload, str):
            errors[name] = f"{algo} seed {seed}: {payload}"
            continue
        try:
            absorb(name, algo, seed, payload)
        except Exception as exc:  # keep other rows alive
            errors[name] = f"{type(exc).__name__}: {exc}"

    rows = []
    summaries = []
    for name in config.problems:
        problem = problems[name]
        if name in errors:
            rows.append(ComparisonRow(problem=name, n=problem.n,
                                      budget=budgets[name], stats={},
                                      outcomes={}, error=errors[name]))
            continue
        stats = {}
        for algo in config.algorithms:
            per_seed = finals[(name, algo)]
            values = [per_seed[s] for s in seeds]
            for s in seeds:
                summaries.append(RunSummary(name, algo, s, per_seed[s],
                                            evals_used[(name, algo, s)]))
            stats[algo] = mean_std(values) if len(values) >= 2 else (values[0], 0.0)
        outcomes = {}
        if "sta" in config.algorithms and config.runs >= 2:
            sta_values = [finals[(name, "sta")][s] for s in seeds]
            for algo in config.algorithms:
                if algo == "sta":
                    continue
                other = [finals[(name, algo)][s] for s in seeds]
                outcomes[algo] = rank_sum_test(sta_values, other)
        rows.append(ComparisonRow(problem=name, n=problem.n, budget=budgets[name],
                                  stats=stats, outcomes=outcomes))

    result = ExperimentResult(config=config, rows=rows, runs=summaries,
                              init_populations=inits, traces={
                                  name: {"evals": trace_grid[name], **algo_traces}
                                  for name, algo_traces in traces.items()})
    if config.out_dir:
        _write_outputs(result, budgets)
    return result


# ---------------------------------------------------------------------------
# Report files
# ---------------------------------------------------------------------------

def comparison_table(result: ExperimentResult) -> str:
    """Comma-separated table: per-problem mean/std per algorithm plus the
    significance symbol of each competitor against the baseline."""
    algos = [a for a in ALGO_ORDER if a in result.config.algorithms]
    header = ["problem", "n", "budget"]
    for algo in algos:
        header += [f"{algo}_mean", f"{algo}_std"]
        if algo != "sta":
            header.append(f"{algo}_vs_sta")
    lines = [",".join(header)]
    for row in result.rows:
        if row.error:
            lines.append(f"{row.problem},{row.n},{row.budget},ERROR:{row.error}")
            continue
        cells = [row.problem, str(row.n), str(row.budget)]
        for algo in algos:
            mean, std = row.stats[algo]
            cells += [f"{mean:.6g}", f"{std:.6g}"]
            if algo != "sta":
                outcome = row.outcomes.get(algo)
                cells.append(outcome.symbol.value if outcome else "")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def export_trace(result: ExperimentResult, problem: str) -> str:
    """Averaged best-so-far trace for one problem, one column per algorithm."""
    table = result.traces.get(problem)
    if table is None:
        raise ValueError(f"no trace data for {problem!r}")
    algos = [a for a in ALGO_ORDER if a in result.config.algorithms]
    lines = [",".join(["evals"] + [f"{a}_avg" for a in algos])]
    evals = table["evals"]
    columns = [table[a] for a in algos]
    for i in range(len(evals)):
        lines.append(",".join([str(int(evals[i]))]
                              + [f"{col[i]:.12g}" for col in columns]))
    return "\n".join(lines) + "\n"


def _metadata_text(result: ExperimentResult, budgets: dict[str, int]) -> str:
    cfg = result.config
    lines = [
        f"triopt_version={__version__}",
        f"problems={','.join(cfg.problems)}",
        f"algorithms={','.join(cfg.algorithms)}",
        f"runs={cfg.runs}",
        f"base_seed={cfg.base_seed}",
        f"seeds={cfg.base_seed}..{cfg.base_seed + cfg.runs - 1}",
        f"budget_override={cfg.budget_override if cfg.budget_override else ''}",
        f"budget_divisor={cfg.budget_divisor}",
        f"population_size={POPULATION_SIZE}",
    ]
    for algo in cfg.algorithms:
        params = cfg.params_for(algo)
        fields = sorted(params.__dataclass_fields__)
        lines.append(f"{algo}_params=" + ",".join(f"{k}={getattr(params, k)}" for k in fields))
    for name in cfg.problems:
        lines.append(f"budget_{name}={budgets[name]}")
    return "\n".join(lines) + "\n"


def _write_outputs(result: ExperimentResult, budgets: dict[str, int]) -> None:
    out = result.config.out_dir
    os.makedirs(out, exist_ok=True)
    with open(os.path.join(out, "comparison.csv"), "w") as fh:
        fh.write(comparison_table(result))
    with open(os.path.join(out, "metadata.txt"), "w") as fh:
        fh.write(_metadata_text(result, budgets))
    with open(os.path.join(out, "runs.csv"), "w") as fh:
        fh.write("problem,algorithm,seed,evals_used,final_value\n")
        for s in result.runs:
            fh.write(f"{s.problem},{s.algorithm},{s.seed},{s.evals_used},"
                     f"{s.final_value:.17g}\n")
    for name in result.config.problems:
        if name in result.traces:
            with open(os.path.join(out, f"trace_{name}.csv"), "w") as fh:
                fh.write(export_trace(result, name))


# ---------------------------------------------------------------------------
# Config file (ini-style key/value with per-algorithm sections)
# ---------------------------------------------------------------------------

def load_config_file(path: str) -> dict:
    """Parse [experiment] plus optional [sta]/[hs]/[abc] sections into kwargs
    for ExperimentConfig."""
    import configparser

    parser = configparser.ConfigParser()
    with open(path) as fh:
        parser.read_file(fh)
    kwargs: dict = {}
    if parser.has_section("experiment"):
        section = parser["experiment"]
        if "problems" in section:
            kwargs["problems"] = tuple(
                s.strip() for s in section["problems"].split(",") if s.strip())
        if "algorithms" in section:
            kwargs["algorithms"] = tuple(
                s.strip() for s in section["algorithms"].split(",") if s.strip())
        for key, cast in (("runs", int), ("seed", int), ("budget", int),
                          ("jobs", int), ("out", str)):
            if key in section and section[key].strip():
                target = {"seed": "base_seed", "budget": "budget_override",
                          "out": "out_dir"}.get(key, key)
                kwargs[target] = cast(section[key].strip())
    for algo, cls in (("sta", StaParams), ("hs", HsParams), ("abc", AbcParams)):
        if parser.has_section(algo):
            overrides = {}
            for key, raw in parser[algo].items():
                if key not in cls.__dataclass_fields__:
                    raise ConfigError(f"unknown {algo} parameter {key!r}")
                kind = cls.__dataclass_fields__[key].type
                overrides[key] = int(raw) if kind == "int" else float(raw)
            kwargs[algo] = overrides
    return kwargs
