"""Command-line front end: list the catalog, run experiments, export traces,
and spot-check function values.
"""
from __future__ import annotations

import argparse
import dataclasses
import math
import sys

import numpy as np

from .benchmarks import ProblemId, catalog_manifest, evaluate, make_problem
from .harness import (ALGORITHMS, ConfigError, ExperimentConfig,
                      load_config_file, run_experiment)

# (problem, point, expected value) spot checks at known optima
_CHECKS = [
    ("sphere", None, [0.0] * 30, 0.0),
    ("booth", None, [1.0, 3.0], 0.0),
    ("beale", None, [3.0, 0.5], 0.0),
    ("easom", None, [math.pi, math.pi], -1.0),
    ("goldstein_price", None, [0.0, -1.0], 3.0),
    ("matyas", None, [0.0, 0.0], 0.0),
    ("rastrigin", 2, [0.0, 0.0], 0.0),
    ("levy", None, [1.0] * 30, 0.0),
    ("branin", None, [math.pi, 2.275], 0.39788735772973816),
]


def _parse_overrides(pairs: list[str]) -> dict[str, dict]:
    """--set sta.se=5 style overrides, grouped per algorithm."""
    out: dict[str, dict] = {}
    for pair in pairs:
        try:
            key, raw = pair.split("=", 1)
            algo, name = key.split(".", 1)
        except ValueError:
            raise ConfigError(f"bad override {pair!r}; expected algo.param=value")
        if algo not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm in override {pair!r}")
        value = int(raw) if raw.lstrip("+-").isdigit() else float(raw)
        out.setdefault(algo, {})[name] = value
    return out


def _build_config(args) -> ExperimentConfig:
    kwargs: dict = {}
    if args.config:
        kwargs.update(load_config_file(args.config))
    if args.problems:
        kwargs["problems"] = tuple(args.problems)
    if args.algorithms:
        kwargs["algorithms"] = tuple(args.algorithms)
    if args.runs is not None:
        kwargs["runs"] = args.runs
    if args.seed is not None:
        kwargs["base_seed"] = args.seed
    if args.budget is not None:
        kwargs["budget_override"] = args.budget
    if args.jobs is not None:
        kwargs["jobs"] = args.jobs
    if args.out:
        kwargs["out_dir"] = args.out
    if args.profile == "smoke":
        kwargs.setdefault("runs", 5)
        kwargs["budget_divisor"] = 10
    if args.set:
        for algo, overrides in _parse_overrides(args.set).items():
            kwargs.setdefault(algo, {}).update(overrides)
    if getattr(args, "record_traces", False):
        kwargs["record_traces"] = True
    return ExperimentConfig(**kwargs)


def _add_run_options(sub, with_defaults=True):
    sub.add_argument("--problems", nargs="+", help="subset, by name or f1..f27")
    sub.add_argument("--algorithms", nargs="+", choices=sorted(ALGORITHMS))
    sub.add_argument("--runs", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--budget", type=int, help="override evaluations per run")
    sub.add_argument("--jobs", type=int, help="parallel worker processes")
    sub.add_argument("--out", help="output directory for reports")
    sub.add_argument("--config", help="ini config file")
    sub.add_argument("--profile", choices=["desk", "smoke"], default="desk")
    sub.add_argument("--set", action="append", default=[],
                     metavar="ALGO.PARAM=VALUE", help="parameter override")
    sub.add_argument("--record-traces", action="store_true",
                     help="also write one full per-run record file per run")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="triopt",
        description="Budget-matched comparison of STA, HS and ABC optimizers")
    subs = parser.add_subparsers(dest="command", required=True)

    subs.add_parser("list", help="print the problem catalog")

    run_p = subs.add_parser("run", help="run an experiment and write reports")
    _add_run_options(run_p)

    trace_p = subs.add_parser("trace", help="export averaged convergence traces")
    _add_run_options(trace_p)

    check_p = subs.add_parser("check", help="spot-check objective values")
    check_p.add_argument("--tolerance", type=float, default=1e-6)

    args = parser.parse_args(argv)

    if args.command == "list":
        sys.stdout.write(catalog_manifest())
        return 0

    if args.command == "check":
        failures = 0
        for name, n, point, expected in _CHECKS:
            problem = make_problem(ProblemId(name), n)
            got = evaluate(problem, np.asarray(point))
            ok = abs(got - expected) <= args.tolerance
            failures += 0 if ok else 1
            status = "ok" if ok else "FAIL"
            print(f"{status:4s} {name}({', '.join(f'{v:g}' for v in point[:4])}"
                  f"{', ...' if len(point) > 4 else ''}) = {got:.12g}"
                  f" (expected {expected:.12g})")
        return 1 if failures else 0

    if args.command == "trace" and not args.problems and not args.config:
        args.problems = ["matyas"]
    try:
        config = _build_config(args)
    except ConfigError as exc:
        parser.error(str(exc))

    if args.command == "trace" and not config.out_dir:
        config = dataclasses.replace(config, out_dir="traces_out")

    result = run_experiment(config)
    for row in result.rows:
        if row.error:
            print(f"problem {row.problem} aborted: {row.error}", file=sys.stderr)
        else:
            summary = "  ".join(
                f"{algo}={row.stats[algo][0]:.3g}" for algo in config.algorithms)
            print(f"{row.problem:16s} n={row.n:<3d} budget={row.budget:<8d} {summary}")
    if config.out_dir:
        print(f"reports written to {config.out_dir}")
    if args.command == "trace":
        for name in config.problems:
            if name in result.traces:
                print(f"trace for {name}: {config.out_dir}/trace_{name}.csv")
    return 1 if result.failed_rows else 0


if __name__ == "__main__":
    sys.exit(main())
