"""Shared adapter surface the discrete engine drives problems through."""

from __future__ import annotations

import numpy as np


class SequenceProblem:
    """Base adapter for problems encoded as event strings.

    Subclasses must set ``dimension`` and implement ``batch_fitness``.  The
    default encoding is a permutation of 1..dimension.  ``sense`` declares
    whether fitness is minimized or maximized; the engine handles the sign.
    """

    dimension: int
    sense: str = "min"
    #: "whole" rotates the entire string; "segment" rotates a random sub-range.
    rotation_scope: str = "whole"
    #: True when evaluation depends on per-iteration state (re-drawn decode
    #: thresholds, traffic jitter); the engine then re-scores incumbents.
    dynamic: bool = False
    name: str = ""
    best_known: float | None = None

    def initial_population(self, rng: np.random.Generator, count: int) -> np.ndarray:
        return np.array(
            [rng.permutation(self.dimension) + 1 for _ in range(count)], dtype=np.int64
        )

    def batch_fitness(self, sequences: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def fitness(self, sequence) -> float:
        return float(self.batch_fitness(np.asarray(sequence)[None, :])[0])

    def placement_cost(self, sequence, bait: int, positions) -> np.ndarray | None:
        """Local heuristic for change-of-position; None skips the refinement."""
        return None

    def linked(self, a: int, b: int) -> bool | None:
        """Adjacency predicate for secondary fitness; None if not meaningful."""
        return None

    def component_values(self, sequence) -> dict[str, float] | None:
        """Extra per-objective values recorded alongside the trace."""
        return None

    def prepare_iteration(self, rng: np.random.Generator) -> None:
        """Hook run once per engine iteration (e.g. re-drawn decode state)."""

    def describe(self) -> dict:
        return {
            "name": self.name or type(self).__name__,
            "dimension": self.dimension,
            "sense": self.sense,
            "best_known": self.best_known,
        }
