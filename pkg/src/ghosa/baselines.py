"""Reference real-coded GA and global-best PSO for bounded minimization.

Both are deliberately canonical: PSO with constriction-style constants
(inertia 0.72, c1 = c2 = 1.49) and velocity clamping; GA with size-2
tournaments, blend crossover, per-gene Gaussian mutation at rate 1/D, and
one elite.  Positions always stay inside the box.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import (
    ParamMixin,
    check_int_at_least,
    check_probability,
    check_random_state,
)
from .errors import ConfigError


@dataclass
class BaselineConfig:
    """Shared baseline settings; algorithm-specific fields are optional."""

    algorithm: str = "PSO"
    population_size: int = 50
    iterations: int = 25000
    # GA
    crossover_rate: float = 0.9
    mutation_rate: float | None = None  # default 1/D
    mutation_scale: float = 0.1
    tournament_size: int = 2
    # PSO
    inertia: float = 0.72
    cognitive: float = 1.49
    social: float = 1.49
    velocity_clamp: float = 0.5

    def __post_init__(self):
        if self.algorithm not in ("GA", "PSO"):
            raise ConfigError(f"algorithm must be GA or PSO, got {self.algorithm!r}")
        check_int_at_least(self.population_size, 1, "population_size")
        check_int_at_least(self.iterations, 1, "iterations")
        check_probability(self.crossover_rate, "crossover_rate")
        if self.mutation_rate is not None:
            check_probability(self.mutation_rate, "mutation_rate")


class ParticleSwarmOptimizer(ParamMixin):
    """Global-best PSO over a bounded continuous problem."""

    def __init__(
        self,
        population_size: int = 50,
        iterations: int = 25000,
        inertia: float = 0.72,
        cognitive: float = 1.49,
        social: float = 1.49,
        velocity_clamp: float = 0.5,
        target: float | None = None,
        seed: int | None = None,
    ):
        self.population_size = population_size
        self.iterations = iterations
        self.inertia = inertia
        self.cognitive = cognitive
        self.social = social
        self.velocity_clamp = velocity_clamp
        self.target = target
        self.seed = seed

    def fit(self, problem) -> "ParticleSwarmOptimizer":
        check_int_at_least(self.population_size, 1, "population_size")
        check_int_at_least(self.iterations, 1, "iterations")
        rng = check_random_state(self.seed)
        lo, hi = problem.bounds[:, 0], problem.bounds[:, 1]
        span = hi - lo
        n, dim = self.population_size, problem.dim

        x = rng.uniform(lo, hi, size=(n, dim))
        v = np.zeros((n, dim))
        vmax = self.velocity_clamp * span
        fit = np.asarray(problem.evaluate_batch(x, rng=rng), dtype=float)
        pbest_x = x.copy()
        pbest_f = fit.copy()
        gi = int(np.argmin(pbest_f))
        gbest_x = pbest_x[gi].copy()
        gbest_f = float(pbest_f[gi])

        trace = []
        stopped_early = False
        for _ in range(self.iterations):
            r1 = rng.random((n, dim))
            r2 = rng.random((n, dim))
            v = (
                self.inertia * v
                + self.cognitive * r1 * (pbest_x - x)
                + self.social * r2 * (gbest_x[None, :] - x)
            )
            v = np.clip(v, -vmax, vmax)
            x = np.clip(x + v, lo, hi)
            fit = np.asarray(problem.evaluate_batch(x, rng=rng), dtype=float)
            better = fit < pbest_f
            pbest_x[better] = x[better]
            pbest_f[better] = fit[better]
            gi = int(np.argmin(pbest_f))
            if pbest_f[gi] < gbest_f:
                gbest_f = float(pbest_f[gi])
                gbest_x = pbest_x[gi].copy()
            trace.append(gbest_f)
            if self.target is not None and gbest_f <= self.target:
                stopped_early = True
                break

        self.best_x_ = gbest_x
        self.best_fitness_ = gbest_f
        self.trace_ = np.asarray(trace)
        self.n_iterations_ = len(trace)
        self.stopped_early_ = stopped_early
        return self


class GeneticAlgorithmOptimizer(ParamMixin):
    """Real-coded generational GA with tournament selection and one elite."""

    def __init__(
        self,
        population_size: int = 50,
        iterations: int = 25000,
        crossover_rate: float = 0.9,
        mutation_rate: float | None = None,
        mutation_scale: float = 0.1,
        tournament_size: int = 2,
        target: float | None = None,
        seed: int | None = None,
    ):
        self.population_size = population_size
        self.iterations = iterations
        self.crossover_rate = crossover_rate
        self.mutation_rate = mutation_rate
        self.mutation_scale = mutation_scale
        self.tournament_size = tournament_size
        self.target = target
        self.seed = seed

    def fit(self, problem) -> "GeneticAlgorithmOptimizer":
        check_int_at_least(self.population_size, 2, "population_size")
        check_int_at_least(self.iterations, 1, "iterations")
        check_probability(self.crossover_rate, "crossover_rate")
        rng = check_random_state(self.seed)
        lo, hi = problem.bounds[:, 0], problem.bounds[:, 1]
        span = hi - lo
        n, dim = self.population_size, problem.dim
        mrate = self.mutation_rate if self.mutation_rate is not None else 1.0 / dim

        x = rng.uniform(lo, hi, size=(n, dim))
        fit = np.asarray(problem.evaluate_batch(x, rng=rng), dtype=float)
        gi = int(np.argmin(fit))
        gbest_x = x[gi].copy()
        gbest_f = float(fit[gi])

        trace = []
        stopped_early = False
        for _ in range(self.iterations):
            # tournament selection of n parents
            entrants = rng.integers(0, n, size=(n, self.tournament_size))
            winners = entrants[np.arange(n), np.argmin(fit[entrants], axis=1)]
            parents = x[winners]

            # blend crossover between consecutive parent pairs
            children = parents.copy()
            pair_a = children[0::2]
            pair_b = children[1::2]
            n_pairs = min(len(pair_a), len(pair_b))
            do_cx = rng.random(n_pairs) < self.crossover_rate
            u = rng.uniform(-0.25, 1.25, size=(n_pairs, dim))
            mixed_a = pair_a[:n_pairs] + u * (pair_b[:n_pairs] - pair_a[:n_pairs])
            mixed_b = pair_b[:n_pairs] + u * (pair_a[:n_pairs] - pair_b[:n_pairs])
            pair_a[:n_pairs][do_cx] = mixed_a[do_cx]
            pair_b[:n_pairs][do_cx] = mixed_b[do_cx]

            # per-gene Gaussian mutation
            mutate = rng.random((n, dim)) < mrate
            noise = rng.normal(0.0, 1.0, size=(n, dim)) * self.mutation_scale * span
            children = np.where(mutate, children + noise, children)
            children = np.clip(children, lo, hi)

            child_fit = np.asarray(problem.evaluate_batch(children, rng=rng), dtype=float)

            # one elite survives verbatim
            worst = int(np.argmax(child_fit))
            children[worst] = gbest_x
            child_fit[worst] = gbest_f

            x, fit = children, child_fit
            gi = int(np.argmin(fit))
            if fit[gi] < gbest_f:
                gbest_f = float(fit[gi])
                gbest_x = x[gi].copy()
            trace.append(gbest_f)
            if self.target is not None and gbest_f <= self.target:
                stopped_early = True
                break

        self.best_x_ = gbest_x
        self.best_fitness_ = gbest_f
        self.trace_ = np.asarray(trace)
        self.n_iterations_ = len(trace)
        self.stopped_early_ = stopped_early
        return self


def _config_to_params(cfg: BaselineConfig | None, algorithm: str, seed) -> dict:
    cfg = cfg or BaselineConfig(algorithm=algorithm)
    common = {
        "population_size": cfg.population_size,
        "iterations": cfg.iterations,
        "seed": seed,
    }
    if algorithm == "PSO":
        common.update(
            inertia=cfg.inertia,
            cognitive=cfg.cognitive,
            social=cfg.social,
            velocity_clamp=cfg.velocity_clamp,
        )
    else:
        common.update(
            crossover_rate=cfg.crossover_rate,
            mutation_rate=cfg.mutation_rate,
            mutation_scale=cfg.mutation_scale,
            tournament_size=cfg.tournament_size,
        )
    return common


def run_pso(problem, cfg: BaselineConfig | None = None, seed=None, target=None):
    """(best value, trace) of one seeded PSO run."""
    opt = ParticleSwarmOptimizer(target=target, **_config_to_params(cfg, "PSO", seed))
    opt.fit(problem)
    return opt.best_fitness_, opt.trace_


def run_ga(problem, cfg: BaselineConfig | None = None, seed=None, target=None):
    """(best value, trace) of one seeded GA run."""
    opt = GeneticAlgorithmOptimizer(target=target, **_config_to_params(cfg, "GA", seed))
    opt.fit(problem)
    return opt.best_fitness_, opt.trace_
