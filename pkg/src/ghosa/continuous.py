"""Continuous-domain swarm engine: string operators plus the LBNIV move.

Agents are real vectors in a box.  Each iteration a candidate is built per
agent by the discrete-style operators reinterpreted on value strings (a
fresh value baited into the best slot, occasional rotation), then shifted
by the neighbor-influenced variation, clamped, evaluated, and accepted only
on improvement.  All per-agent state (direction d, step scale eps) is kept
as stacked arrays so one iteration is a handful of numpy passes.
"""

from __future__ import annotations

import numpy as np

from .base import (
    ParamMixin,
    check_int_at_least,
    check_probability,
    check_random_state,
)
from .errors import ConfigError
from .lbniv import (
    FRONT,
    REAR,
    ContinuousAgent,
    LbnivParams,
    update_d_batch,
    update_epsilon_batch,
)

#: step scales beyond this are reset to eps0 (runaway growth guard)
EPS_CAP = 1e12


class ContinuousGhosaOptimizer(ParamMixin):
    """Swarm optimizer for bounded continuous problems.

    ``eps0``, ``k`` and ``bias`` parameterize the adaptive variation;
    the remaining knobs mirror the discrete engine.  After ``fit(problem)``
    results are in ``best_x_``, ``best_fitness_``, ``trace_``.
    """

    def __init__(
        self,
        population_size: int = 50,
        iterations: int = 25000,
        replace_fraction: float = 10.0,
        p_miss: float = 1.0 / 3.0,
        p_catch: float = 1.0 / 3.0,
        p_false: float = 1.0 / 3.0,
        swarm_rate: float = 0.2,
        window_fraction: float = 1.0,
        eps0: float = 0.2,
        k: float = 2.0,
        bias: float = 0.001,
        target: float | None = None,
        seed: int | None = None,
    ):
        self.population_size = population_size
        self.iterations = iterations
        self.replace_fraction = replace_fraction
        self.p_miss = p_miss
        self.p_catch = p_catch
        self.p_false = p_false
        self.swarm_rate = swarm_rate
        self.window_fraction = window_fraction
        self.eps0 = eps0
        self.k = k
        self.bias = bias
        self.target = target
        self.seed = seed

    # --- candidate construction helpers (vectorized across agents) ---------

    @staticmethod
    def _apply_cases(x: np.ndarray, cases, positions, baits) -> np.ndarray:
        """Apply the three baiting outcomes rowwise on value strings."""
        out = x.copy()
        dim = x.shape[1]
        rows = np.arange(len(x))

        catch = cases == 1
        out[rows[catch], positions[catch]] = baits[catch]

        miss = cases == 0
        if np.any(miss) and dim > 1:
            sub = x[miss]
            p = positions[miss][:, None]
            cols = np.arange(dim)[None, :]
            src = np.where(cols > p, cols - 1, cols)
            shifted = np.take_along_axis(sub, src, axis=1)
            shifted[np.arange(len(sub)), positions[miss]] = baits[miss]
            out[miss] = shifted
        elif np.any(miss):
            out[rows[miss], 0] = baits[miss]

        false = cases == 2
        if np.any(false) and dim > 1:
            sub = x[false]
            p = positions[false][:, None]
            cols = np.arange(dim)[None, :]
            src = np.where((cols >= p) & (cols < dim - 1), cols + 1, cols)
            shifted = np.take_along_axis(sub, src, axis=1)
            shifted[:, dim - 1] = sub[np.arange(len(sub)), positions[false]]
            out[false] = shifted
        return out

    def _lbniv_move(
        self,
        x: np.ndarray,
        best: np.ndarray,
        d: np.ndarray,
        eps: np.ndarray,
        rear: np.ndarray,
        front: np.ndarray,
    ) -> np.ndarray:
        return (
            x
            + np.abs(best[None, :] - rear) * d[:, :, REAR] * eps[:, :, REAR]
            + np.abs(best[None, :] - front) * d[:, :, FRONT] * eps[:, :, FRONT]
            + self.bias
        )

    def fit(self, problem) -> "ContinuousGhosaOptimizer":
        check_int_at_least(self.population_size, 1, "population_size")
        check_int_at_least(self.iterations, 1, "iterations")
        check_probability(self.swarm_rate, "swarm_rate")
        params = LbnivParams(k=self.k, bias=self.bias, eps0=self.eps0)
        case_p = np.array([self.p_miss, self.p_catch, self.p_false])
        if abs(case_p.sum() - 1.0) > 1e-9 or np.any(case_p < 0):
            raise ConfigError("case probabilities must be non-negative and sum to 1")
        if not 0 <= self.replace_fraction < 100:
            raise ConfigError("replace_fraction must be in [0, 100)")

        rng = check_random_state(self.seed)
        dim = problem.dim
        n_agents = self.population_size
        bounds = problem.bounds
        lo, hi = bounds[:, 0], bounds[:, 1]
        span = hi - lo

        x = rng.uniform(lo, hi, size=(n_agents, dim))
        fitness = np.asarray(problem.evaluate_batch(x, rng=rng), dtype=float)
        d = np.zeros((n_agents, dim, 2))
        eps = np.full((n_agents, dim, 2), self.eps0)

        best_i = int(np.argmin(fitness))
        best_x = x[best_i].copy()
        best_f = float(fitness[best_i])

        if dim <= 20 or self.window_fraction >= 1.0:
            window = np.arange(dim)
        else:
            wlen = max(1, int(round(self.window_fraction * dim)))
            window = np.arange(wlen)  # offset drawn per iteration

        windowed = len(window) < dim
        trace: list[float] = []
        stopped_early = False
        replace_count = int(self.replace_fraction * n_agents // 100)

        for iteration in range(1, self.iterations + 1):
            cases = rng.choice(3, size=n_agents, p=case_p)
            rotate = rng.random(n_agents) < self.swarm_rate
            bait_u = rng.random(n_agents)
            offset = int(rng.integers(0, dim - len(window) + 1)) if windowed else 0
            slots = window + offset

            # change-of-position: trial the bait in every window slot
            trial_best = np.full(n_agents, np.inf)
            positions = np.full(n_agents, slots[0])
            for pos in slots:
                trial = x.copy()
                trial[:, pos] = lo[pos] + bait_u * span[pos]
                val = np.asarray(problem.evaluate_batch(trial, rng=None), dtype=float)
                better = val < trial_best
                trial_best[better] = val[better]
                positions[better] = pos
            baits = lo[positions] + bait_u * span[positions]

            cand = self._apply_cases(x, cases, positions, baits)
            if dim >= 2 and np.any(rotate):
                shifts = rng.integers(1, dim, size=n_agents)
                idx = np.nonzero(rotate)[0]
                cols = np.arange(dim)[None, :]
                src = (cols - shifts[idx][:, None]) % dim
                cand[idx] = np.take_along_axis(cand[idx], src, axis=1)

            rear = np.roll(x, 1, axis=0)
            front = np.roll(x, -1, axis=0)
            moved = self._lbniv_move(cand, best_x, d, eps, rear, front)

            # bound violations are judged on the pre-clamp move; the same
            # multiplier applies to both neighbor entries of a variable
            new_eps = update_epsilon_batch(eps[:, :, REAR], moved, bounds, self.k)
            runaway = ~np.isfinite(new_eps) | (new_eps > EPS_CAP)
            new_eps = np.where(runaway, self.eps0, new_eps)
            eps = np.repeat(new_eps[:, :, None], 2, axis=2)

            moved = np.clip(moved, lo[None, :], hi[None, :])
            cand_fitness = np.asarray(problem.evaluate_batch(moved, rng=rng), dtype=float)

            d = np.stack(
                [
                    update_d_batch(cand_fitness, fitness, moved, rear),
                    update_d_batch(cand_fitness, fitness, moved, front),
                ],
                axis=2,
            )

            improved = cand_fitness < fitness
            x[improved] = moved[improved]
            fitness[improved] = cand_fitness[improved]

            bi = int(np.argmin(fitness))
            if fitness[bi] < best_f:
                best_f = float(fitness[bi])
                best_x = x[bi].copy()

            if replace_count:
                order = np.argsort(fitness, kind="stable")
                worst = order[n_agents - replace_count :]
                x[worst] = rng.uniform(lo, hi, size=(replace_count, dim))
                fitness[worst] = problem.evaluate_batch(x[worst], rng=rng)
                d[worst] = 0.0
                eps[worst] = self.eps0
                bi = int(np.argmin(fitness))
                if fitness[bi] < best_f:
                    best_f = float(fitness[bi])
                    best_x = x[bi].copy()

            trace.append(best_f)
            if self.target is not None and best_f <= self.target:
                stopped_early = True
                break

        self.best_x_ = best_x
        self.best_fitness_ = best_f
        self.best_agent_ = ContinuousAgent(
            best_x.copy(), fitness=best_f, fitness_prev=best_f
        )
        self.trace_ = np.asarray(trace)
        self.n_iterations_ = len(trace)
        self.stopped_early_ = stopped_early
        self.population_x_ = x
        self.population_fitness_ = fitness
        self.lbniv_params_ = params
        return self
