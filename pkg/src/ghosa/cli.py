"""Command-line interface: run experiments, query oracles, check instance files.

Exit codes: 0 success, 1 configuration error, 2 instance/parse error,
3 runtime failure.
"""

from __future__ import annotations

import sys

import click

from .errors import ConfigError, GhosaError, InstanceError, TooLarge
from .harness import ExperimentConfig, resolve_instance_path, run_experiment
from .ingest import load_instance
from .oracles import (
    OracleCache,
    brute_force_qap,
    brute_force_tsp,
    exact_knapsack,
    exact_shortest_paths,
)

_FMT_BY_KIND = {
    "tsp": "TSPLIB",
    "qap": "QAPLIB",
    "knapsack": "ORLIB_MKNAP",
    "roadnet": "ROADNET",
}


@click.group()
def main():
    """Green Heron swarm optimization toolkit."""


def _problem_options(fn):
    fn = click.option("--problem", required=True,
                      type=click.Choice(["tsp", "qap", "knapsack", "roadnet", "benchmark"]),
                      help="Problem family.")(fn)
    fn = click.option("--instance", default=None,
                      help="Instance file path (or benchmark id f1..f25).")(fn)
    return fn


@main.command()
@_problem_options
@click.option("--algo", default="GHOSA", type=click.Choice(["GHOSA", "GA", "PSO"]))
@click.option("--iters", default=25000, show_default=True, help="Iteration budget per run.")
@click.option("--pop", default=50, show_default=True, help="Population size.")
@click.option("--runs", default=10, show_default=True, help="Independent seeded runs.")
@click.option("--seed", default=0, show_default=True, help="Base seed; run i uses seed+i.")
@click.option("--replace-frac", default=10.0, show_default=True,
              help="Percent of worst agents re-randomized each iteration.")
@click.option("--threshold-policy", default="sweep", show_default=True,
              help="Knapsack decode policy: sweep, random, or fixed:K.")
@click.option("--metric-override", default=None,
              help="Force a TSP metric (e.g. 'euclid' for raw coordinates).")
@click.option("--dim", default=None, type=int,
              help="Benchmark dimension, or 1-based instance index in knapsack bundles.")
@click.option("--target", default=None, type=float,
              help="Stop a run once the global best reaches this fitness.")
@click.option("--swarm-rate", default=0.2, show_default=True,
              help="Per-iteration probability of the rotation operator.")
@click.option("--out", default=None, help="Report stem; writes <out>.csv/.json + traces.")
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "json"]))
@click.option("--workers", default=1, show_default=True, help="Parallel run workers.")
def run(problem, instance, algo, iters, pop, runs, seed, replace_frac,
        threshold_policy, metric_override, dim, target, swarm_rate, out, fmt, workers):
    """Run repeated seeded optimizations and report aggregate statistics."""
    cfg = ExperimentConfig(
        problem=problem,
        instance=instance,
        dim=dim,
        algorithm=algo,
        runs=runs,
        iterations=iters,
        population=pop,
        replace_fraction=replace_frac,
        seed_base=seed,
        target=target,
        swarm_rate=swarm_rate,
        threshold_policy=threshold_policy,
        metric_override=metric_override,
        out=out,
        format=fmt,
        workers=workers,
    )
    stats, results = run_experiment(cfg)
    info = results["report"]["problem"]
    click.echo(
        f"{info['name']} (n={info['dimension']}, {cfg.algorithm}, {cfg.runs} runs): "
        f"mean={stats.mean:.6g} sd={stats.sd:.6g} "
        f"best={stats.best:.6g} worst={stats.worst:.6g}"
        + (f" error%={stats.error_percent:.4g}" if stats.error_percent is not None else "")
    )
    if out:
        click.echo(f"report written to {out}.{fmt} (+ traces)")


@main.command()
@_problem_options
@click.option("--dim", default=None, type=int,
              help="1-based instance index in knapsack bundles.")
@click.option("--cache", default=None, help="Oracle cache file (checksum -> optimum).")
def oracle(problem, instance, dim, cache):
    """Exactly solve a small instance and print the optimum."""
    if problem == "benchmark":
        raise ConfigError("oracle applies to instance files, not benchmark functions")
    if not instance:
        raise ConfigError("oracle requires --instance")
    record = load_instance(resolve_instance_path(instance), _FMT_BY_KIND[problem])
    store = OracleCache(cache) if cache else None
    if store is not None:
        hit = store.get(record.checksum)
        if hit is not None:
            click.echo(f"optimum {hit!r} (cached)")
            return
    payload = record.payload
    if problem == "tsp":
        result = brute_force_tsp(payload)
    elif problem == "qap":
        result = brute_force_qap(payload)
    elif problem == "knapsack":
        payload = payload[(dim or 1) - 1]
        result = exact_knapsack(payload)
    else:
        result = exact_shortest_paths(payload)
    if store is not None:
        store.put(record.checksum, result.optimum)
    click.echo(f"optimum {result.optimum!r}")
    click.echo(f"optimizer {list(result.optimizer)}")
    click.echo(f"states explored {result.nodes_explored}")


@main.command("parse-check")
@_problem_options
def parse_check(problem, instance):
    """Parse and validate an instance file, printing a summary."""
    if problem == "benchmark":
        raise ConfigError("parse-check applies to instance files")
    if not instance:
        raise ConfigError("parse-check requires --instance")
    record = load_instance(resolve_instance_path(instance), _FMT_BY_KIND[problem])
    payload = record.payload
    click.echo(f"format {record.format}")
    click.echo(f"checksum {record.checksum}")
    if problem == "knapsack":
        for inst in payload:
            click.echo(
                f"instance {inst.name}: m={inst.m} n={inst.n} "
                f"best_known={inst.best_known}"
            )
    elif problem == "roadnet":
        click.echo(
            f"nodes={len(payload.nodes)} edges={len(payload.edges)} "
            f"V={payload.velocity} route {payload.source}->{payload.destination}"
        )
    else:
        click.echo(f"instance {payload.name}: n={payload.n}")


def entrypoint(argv=None) -> int:
    """main() wrapper mapping exceptions to the documented exit codes."""
    try:
        main.main(args=argv, standalone_mode=False)
        return 0
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        return 1
    except (InstanceError, FileNotFoundError, TooLarge) as exc:
        click.echo(f"instance error: {exc}", err=True)
        return 2
    except GhosaError as exc:
        click.echo(f"runtime failure: {exc}", err=True)
        return 3
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        click.echo(f"runtime failure: {exc}", err=True)
        return 3


if __name__ == "__main__":
    sys.exit(entrypoint())
