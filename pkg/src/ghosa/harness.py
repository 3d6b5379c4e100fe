"""Experiment runner: repeated seeded runs, aggregation, report export.

One experiment = one problem, one algorithm, ``runs`` independent seeds
(seed_base .. seed_base+runs-1).  Reports are a fixed-schema CSV row, a JSON
mirror embedding the full config and seeds for bit-exact replay, and one
trace file per run (one global-best value per iteration line; road problems
additionally get travel/waiting series with cumulative and running-average
variants).
"""

from __future__ import annotations

import dataclasses
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .baselines import GeneticAlgorithmOptimizer, ParticleSwarmOptimizer
from .continuous import ContinuousGhosaOptimizer
from .engine import GhosaOptimizer
from .errors import ConfigError, EmptyInput, GhosaError, IoFailure
from .ingest import load_instance
from .problems import (
    KnapsackProblem,
    QapProblem,
    RoadNetworkProblem,
    TspProblem,
    benchmark_function,
)

DATA_DIR_ENV = "GHOSA_DATA_DIR"

CSV_COLUMNS = ("name", "dim", "optimum", "mean", "sd", "best", "worst", "error")

PROBLEM_KINDS = ("tsp", "qap", "knapsack", "roadnet", "benchmark")
ALGORITHMS = ("GHOSA", "GA", "PSO")


@dataclass
class RunStats:
    """Mean/SD/best/worst of per-run best fitness, plus relative error."""

    mean: float
    sd: float
    best: float
    worst: float
    error_percent: float | None = None
    sense: str = "min"


def aggregate_stats(per_run_bests, best_known=None, sense: str = "min") -> RunStats:
    """Aggregate per-run best values into a table row.

    Error is 100*|mean - best_known| / |best_known| when a nonzero optimum
    is known, the absolute difference when the optimum is 0, and absent
    otherwise.
    """
    values = np.asarray(list(per_run_bests), dtype=float)
    if values.size == 0:
        raise EmptyInput("no per-run best values to aggregate")
    mean = float(values.mean())
    sd = float(values.std(ddof=1)) if values.size > 1 else 0.0
    lo, hi = float(values.min()), float(values.max())
    best, worst = (hi, lo) if sense == "max" else (lo, hi)
    error = None
    if best_known is not None:
        if best_known != 0:
            error = 100.0 * abs(mean - best_known) / abs(best_known)
        else:
            error = abs(mean - best_known)
    return RunStats(mean=mean, sd=sd, best=best, worst=worst,
                    error_percent=error, sense=sense)


@dataclass
class ExperimentConfig:
    """Everything needed to reproduce one experiment."""

    problem: str
    instance: str | None = None
    dim: int | None = None
    algorithm: str = "GHOSA"
    runs: int = 10
    iterations: int = 25000
    population: int = 50
    replace_fraction: float = 10.0
    seed_base: int = 0
    target: float | None = None
    workers: int = 1
    # operator knobs
    p_miss: float = 1.0 / 3.0
    p_catch: float = 1.0 / 3.0
    p_false: float = 1.0 / 3.0
    window_fraction: float = 0.25
    swarm_rate: float = 0.2
    max_shift: int | None = None
    secondary_method: str = "linkage"
    # continuous variation
    eps0: float = 0.2
    k: float = 2.0
    bias: float = 0.001
    # baselines
    inertia: float = 0.72
    cognitive: float = 1.49
    social: float = 1.49
    velocity_clamp: float = 0.5
    crossover_rate: float = 0.9
    mutation_rate: float | None = None
    mutation_scale: float = 0.1
    tournament_size: int = 2
    # problem options
    threshold_policy: str = "sweep"
    metric_override: str | None = None
    awt_noise: float = 0.0
    # output
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.problem not in PROBLEM_KINDS:
            raise ConfigError(f"problem must be one of {PROBLEM_KINDS}")
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"algorithm must be one of {ALGORITHMS}")
        if self.runs < 1:
            raise ConfigError("runs must be >= 1")
        if self.iterations < 1:
            raise ConfigError("iterations must be >= 1")
        if self.population < 1:
            raise ConfigError("population must be >= 1")
        if not 0 <= self.replace_fraction < 100:
            raise ConfigError("replace_fraction must be in [0, 100)")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if self.algorithm in ("GA", "PSO") and self.problem != "benchmark":
            raise ConfigError(f"{self.algorithm} baseline only runs on benchmark problems")

    def seeds(self) -> list[int]:
        return [self.seed_base + i for i in range(self.runs)]

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})


def resolve_instance_path(path_str: str) -> Path:
    """Absolute or CWD-relative path, else relative to the dataset root."""
    p = Path(path_str)
    if p.exists() or p.is_absolute():
        return p
    root = os.environ.get(DATA_DIR_ENV)
    if root:
        candidate = Path(root) / p
        if candidate.exists():
            return candidate
    return p


def build_problem(cfg: ExperimentConfig):
    """Instantiate the problem adapter an experiment runs against."""
    kind = cfg.problem
    if kind == "benchmark":
        if not cfg.instance:
            raise ConfigError("benchmark problems need a function id (f1..f25)")
        return benchmark_function(cfg.instance, cfg.dim)
    if not cfg.instance:
        raise ConfigError(f"{kind} problems need an instance path")
    path = resolve_instance_path(cfg.instance)
    if kind == "tsp":
        record = load_instance(path, "TSPLIB")
        inst = record.payload
        if cfg.metric_override:
            metric = "EUCLID_RAW" if cfg.metric_override.lower() in ("euclid", "euclidean") else cfg.metric_override.upper()
            inst = inst.with_metric(metric)
        return TspProblem(inst)
    if kind == "qap":
        return QapProblem(load_instance(path, "QAPLIB").payload)
    if kind == "knapsack":
        instances = load_instance(path, "ORLIB_MKNAP").payload
        index = (cfg.dim or 1) - 1
        if not 0 <= index < len(instances):
            raise ConfigError(
                f"file holds {len(instances)} instances; dim selects 1-based index"
            )
        return KnapsackProblem(instances[index], threshold_policy=cfg.threshold_policy)
    if kind == "roadnet":
        return RoadNetworkProblem(
            load_instance(path, "ROADNET").payload, awt_noise=cfg.awt_noise
        )
    raise ConfigError(f"unknown problem kind {kind!r}")


def _make_optimizer(cfg: ExperimentConfig, seed: int):
    common = dict(
        population_size=cfg.population,
        iterations=cfg.iterations,
        target=cfg.target,
        seed=seed,
    )
    if cfg.algorithm == "PSO":
        return ParticleSwarmOptimizer(
            inertia=cfg.inertia,
            cognitive=cfg.cognitive,
            social=cfg.social,
            velocity_clamp=cfg.velocity_clamp,
            **common,
        )
    if cfg.algorithm == "GA":
        return GeneticAlgorithmOptimizer(
            crossover_rate=cfg.crossover_rate,
            mutation_rate=cfg.mutation_rate,
            mutation_scale=cfg.mutation_scale,
            tournament_size=cfg.tournament_size,
            **common,
        )
    shared = dict(
        replace_fraction=cfg.replace_fraction,
        p_miss=cfg.p_miss,
        p_catch=cfg.p_catch,
        p_false=cfg.p_false,
        swarm_rate=cfg.swarm_rate,
        window_fraction=cfg.window_fraction,
        **common,
    )
    if cfg.problem == "benchmark":
        return ContinuousGhosaOptimizer(
            eps0=cfg.eps0, k=cfg.k, bias=cfg.bias, **shared
        )
    return GhosaOptimizer(
        max_shift=cfg.max_shift, secondary_method=cfg.secondary_method, **shared
    )


class RunFailure(GhosaError):
    """A seeded run raised; the message carries the run index and seed."""


def _single_run(cfg: ExperimentConfig, problem, seed: int) -> dict:
    opt = _make_optimizer(cfg, seed).fit(problem)
    result = {
        "seed": seed,
        "best_fitness": float(opt.best_fitness_),
        "trace": np.asarray(opt.trace_),
        "iterations_run": int(opt.n_iterations_),
        "components": getattr(opt, "trace_components_", None),
    }
    if hasattr(opt, "best_sequence_"):
        result["best_solution"] = opt.best_sequence_.tolist()
    else:
        result["best_solution"] = opt.best_x_.tolist()
    return result


def run_experiment(cfg: ExperimentConfig) -> tuple[RunStats, dict]:
    """Execute all seeded runs, aggregate, and (optionally) export reports."""
    problem = build_problem(cfg)
    seeds = cfg.seeds()
    try:
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                runs = list(
                    pool.map(_single_run, [cfg] * len(seeds), [problem] * len(seeds), seeds)
                )
        else:
            runs = []
            for index, seed in enumerate(seeds):
                try:
                    runs.append(_single_run(cfg, problem, seed))
                except Exception as exc:
                    raise RunFailure(f"run {index} (seed {seed}) failed: {exc}") from exc
    except RunFailure:
        raise
    except Exception as exc:
        raise RunFailure(f"experiment failed: {exc}") from exc

    sense = getattr(problem, "sense", "min")
    stats = aggregate_stats(
        [r["best_fitness"] for r in runs],
        best_known=getattr(problem, "best_known", None),
        sense=sense,
    )
    report = {
        "problem": problem.describe(),
        "config": cfg.to_dict(),
        "seeds": seeds,
        "runs": [
            {k: v for k, v in r.items() if k != "trace" and k != "components"}
            for r in runs
        ],
        "stats": dataclasses.asdict(stats),
    }
    results = {"report": report, "runs": runs, "problem": problem}
    if cfg.out:
        export_report(stats, results, cfg.format, cfg.out)
    return stats, results


def replay_report(json_path) -> tuple[RunStats, dict]:
    """Re-run an experiment from an exported JSON report."""
    data = json.loads(Path(json_path).read_text())
    cfg = ExperimentConfig.from_dict(data["config"])
    cfg.out = None
    return run_experiment(cfg)


def _trace_series(run: dict) -> dict[str, np.ndarray]:
    """Total trace, plus per-objective/cumulative/average variants for
    problems that report travel and waiting components."""
    series = {"total": np.asarray(run["trace"], dtype=float)}
    components = run.get("components")
    if not components or all(c is None for c in components):
        return series
    for key in ("travel", "waiting"):
        # NaN before the first decodable incumbent appears
        series[key] = np.asarray(
            [c[key] if c is not None else np.nan for c in components], dtype=float
        )
    derived = {}
    for name, values in series.items():
        cum = np.cumsum(values)
        derived[f"cumulative_{name}"] = cum
        derived[f"average_{name}"] = cum / np.arange(1, len(values) + 1)
    series.update(derived)
    return series


def export_report(stats: RunStats, results: dict, fmt: str, out) -> list[Path]:
    """Write the CSV/JSON report and per-run trace files; returns paths."""
    out = Path(out)
    report = results["report"]
    problem_info = report["problem"]
    dim = problem_info["dimension"]
    inst = results["problem"]
    if hasattr(inst, "instance") and hasattr(inst.instance, "m"):
        dim = f"{inst.instance.m},{inst.instance.n}"
    row = {
        "name": problem_info["name"],
        "dim": dim,
        "optimum": problem_info.get("best_known"),
        "mean": stats.mean,
        "sd": stats.sd,
        "best": stats.best,
        "worst": stats.worst,
        "error": stats.error_percent,
    }
    written: list[Path] = []
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "csv":
            csv_path = out.with_suffix(".csv")
            lines = [",".join(CSV_COLUMNS)]
            lines.append(
                ",".join("" if row[c] is None else str(row[c]) for c in CSV_COLUMNS)
            )
            csv_path.write_text("\n".join(lines) + "\n")
            written.append(csv_path)
        json_path = out.with_suffix(".json")
        json_path.write_text(json.dumps(report, indent=2, default=_jsonify))
        written.append(json_path)
        for run in results["runs"]:
            if len(run["trace"]) == 0:
                continue
            for name, values in _trace_series(run).items():
                suffix = "" if name == "total" else f".{name}"
                tpath = out.with_name(f"{out.stem}.run{run['seed']}{suffix}.trace")
                tpath.write_text("\n".join(repr(float(v)) for v in values) + "\n")
                written.append(tpath)
    except OSError as exc:
        raise IoFailure(f"failed writing report files under {out}: {exc}") from exc
    return written


def _jsonify(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value)}")
