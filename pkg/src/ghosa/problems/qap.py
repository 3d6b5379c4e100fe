"""Quadratic assignment: flow/distance instance and permutation cost."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..base import is_permutation
from ..errors import InstanceError, InvalidPermutation
from .core import SequenceProblem


@dataclass
class QapInstance:
    """Facility flow matrix paired with a location distance matrix."""

    n: int
    flow: np.ndarray
    dist: np.ndarray
    best_known: int | None = None
    name: str = ""

    def __post_init__(self):
        self.flow = np.asarray(self.flow, dtype=float)
        self.dist = np.asarray(self.dist, dtype=float)
        if self.flow.shape != (self.n, self.n) or self.dist.shape != (self.n, self.n):
            raise InstanceError(
                f"flow/dist must both be {self.n}x{self.n}, got "
                f"{self.flow.shape} and {self.dist.shape}"
            )


def qap_cost(inst: QapInstance, perm) -> float:
    """Assignment cost: sum of flow[i,j] * dist[perm(i), perm(j)]."""
    arr = np.asarray(perm, dtype=np.int64)
    if not is_permutation(arr, inst.n):
        raise InvalidPermutation(f"not a permutation of 1..{inst.n}")
    loc = arr - 1
    return float((inst.flow * inst.dist[np.ix_(loc, loc)]).sum())


class QapProblem(SequenceProblem):
    """Engine adapter: sequence slot i holds the location of facility i+1."""

    sense = "min"
    rotation_scope = "whole"

    def __init__(self, instance: QapInstance):
        self.instance = instance
        self.dimension = instance.n
        self.name = instance.name or f"qap{instance.n}"
        self.best_known = instance.best_known
        self._f = instance.flow
        self._d = instance.dist
        self._symmetric = (
            np.array_equal(self._f, self._f.T)
            and np.array_equal(self._d, self._d.T)
            and not np.any(np.diag(self._f))
            and not np.any(np.diag(self._d))
        )
        self._fdiag = np.diag(self._f)

    def batch_fitness(self, sequences: np.ndarray) -> np.ndarray:
        loc = sequences - 1
        gathered = self._d[loc[:, :, None], loc[:, None, :]]
        return (self._f[None, :, :] * gathered).sum(axis=(1, 2))

    def placement_cost(self, sequence, bait: int, positions) -> np.ndarray:
        """Cost of handing location ``bait`` to each candidate facility slot.

        Symmetric instances get the exact cost change of the implied
        location swap, so the refinement step picks the best improving swap
        for the sampled bait; otherwise a one-sided interaction estimate.
        """
        loc = np.asarray(sequence) - 1
        b = bait - 1
        pos = np.asarray(list(positions))
        if self._symmetric:
            q = int(np.nonzero(loc == b)[0][0])
            f_diff = self._f[q][None, :] - self._f[pos]
            d_diff = self._d[np.ix_(loc[pos], loc)] - self._d[b, loc][None, :]
            s = (f_diff * d_diff).sum(axis=1)
            d_b_lp = self._d[b, loc[pos]]
            k_p = (self._f[q, pos] - self._fdiag[pos]) * (0.0 - d_b_lp)
            k_q = (self._fdiag[q] - self._f[pos, q]) * d_b_lp
            return 2.0 * (s - k_p - k_q)
        out_cost = (self._f[pos] * self._d[b, loc][None, :]).sum(axis=1)
        in_cost = (self._f[:, pos].T * self._d[loc, b][None, :]).sum(axis=1)
        return out_cost + in_cost
