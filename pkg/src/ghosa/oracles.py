"""Exact solvers for small instances, used to validate heuristic output.

Each oracle exhaustively enumerates (or exactly solves) its instance class
below a size ceiling and returns the true optimum, one optimizer, and the
number of states explored.  A line-oriented cache keyed by instance
checksum lets repeated validation runs skip the enumeration.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import Disconnected, TooLarge
from .problems import KnapsackInstance, QapInstance, RoadNetwork, TspInstance
from .problems.knapsack import knapsack_profit
from .problems.roadnet import road_fitness


@dataclass
class OracleResult:
    optimum: float
    optimizer: object
    nodes_explored: int


def brute_force_tsp(inst: TspInstance, max_n: int = 10) -> OracleResult:
    """Minimum closed tour by enumerating (n-1)!/2 tours."""
    n = inst.n
    if n > max_n:
        raise TooLarge(f"exhaustive TSP limited to n <= {max_n}, got {n}")
    d = inst.distance_matrix()
    if n == 1:
        return OracleResult(0.0, np.array([1]), 1)
    best_len = np.inf
    best_tour = None
    explored = 0
    for rest in itertools.permutations(range(1, n)):
        if n > 2 and rest[0] > rest[-1]:
            continue  # each direction once
        tour = (0,) + rest
        explored += 1
        length = d[tour[-1], tour[0]]
        for a, b in zip(tour[:-1], tour[1:]):
            length += d[a, b]
        if length < best_len:
            best_len = length
            best_tour = tour
    return OracleResult(
        float(best_len), np.asarray(best_tour, dtype=np.int64) + 1, explored
    )


def brute_force_qap(inst: QapInstance, max_n: int = 9) -> OracleResult:
    """Minimum assignment cost over all n! permutations."""
    n = inst.n
    if n > max_n:
        raise TooLarge(f"exhaustive QAP limited to n <= {max_n}, got {n}")
    flow, dist = inst.flow, inst.dist
    best_cost = np.inf
    best_perm = None
    explored = 0
    for perm in itertools.permutations(range(n)):
        explored += 1
        loc = np.asarray(perm)
        cost = (flow * dist[np.ix_(loc, loc)]).sum()
        if cost < best_cost:
            best_cost = cost
            best_perm = loc
    return OracleResult(float(best_cost), best_perm + 1, explored)


def exact_knapsack(inst: KnapsackInstance, max_n: int = 22) -> OracleResult:
    """Exact maximum feasible profit.

    Exhaustive subset scan up to ``max_n`` items; for a single constraint
    with integer data, dynamic programming over capacity handles any n.
    """
    n = inst.n
    if n <= max_n:
        best_profit = 0.0
        best_bits = np.zeros(n, dtype=np.int8)
        explored = 0
        chunk = 1 << min(n, 16)
        codes = np.arange(chunk, dtype=np.uint64)
        shifts = np.arange(n, dtype=np.uint64)
        for base in range(0, 1 << n, chunk):
            block = (codes[: min(chunk, (1 << n) - base)] + base)[:, None]
            bits = ((block >> shifts[None, :]) & 1).astype(float)
            feasible = np.all(bits @ inst.weight.T <= inst.capacity[None, :], axis=1)
            profits = np.where(feasible, bits @ inst.profit, 0.0)
            explored += len(bits)
            i = int(np.argmax(profits))
            if profits[i] > best_profit:
                best_profit = float(profits[i])
                best_bits = bits[i].astype(np.int8)
        return OracleResult(best_profit, best_bits, explored)

    if inst.m == 1:
        cap = int(inst.capacity[0])
        weights = inst.weight[0].astype(int)
        if np.any(weights != inst.weight[0]) or cap != inst.capacity[0]:
            raise TooLarge("capacity DP needs integer weights and capacity")
        best = np.zeros(cap + 1)
        keep = np.zeros((n, cap + 1), dtype=bool)
        for i in range(n):
            w, p = int(weights[i]), float(inst.profit[i])
            if w <= cap:
                candidate = best[: cap - w + 1] + p
                taken = candidate > best[w:]
                keep[i, w:] = taken
                best[w:] = np.where(taken, candidate, best[w:])
        bits = np.zeros(n, dtype=np.int8)
        c = cap
        for i in range(n - 1, -1, -1):
            if keep[i, c]:
                bits[i] = 1
                c -= int(weights[i])
        profit = knapsack_profit(inst, bits)
        return OracleResult(profit, bits, n * (cap + 1))

    raise TooLarge(f"exhaustive knapsack limited to n <= {max_n} (or m == 1), got n={n}")


def exact_shortest_paths(net: RoadNetwork, max_nodes_exhaustive: int = 15) -> OracleResult:
    """Minimum combined travel+waiting path from source to destination.

    Small networks get an exhaustive simple-path enumeration (honoring
    resource caps); larger cap-free networks use a label-setting search.
    """
    n = len(net.nodes)
    if n <= max_nodes_exhaustive:
        adj = net.adjacency()
        best = [np.inf, None]
        explored = 0

        def walk(node, visited, path):
            nonlocal explored
            if node == net.destination:
                explored += 1
                if net.path_feasible(path):
                    _, _, f = road_fitness(net, path)
                    if f < best[0]:
                        best[0] = f
                        best[1] = list(path)
                return
            for nxt in adj[node]:
                if nxt in visited:
                    continue
                visited.add(nxt)
                path.append(nxt)
                walk(nxt, visited, path)
                path.pop()
                visited.remove(nxt)

        walk(net.source, {net.source}, [net.source])
        if best[1] is None:
            raise Disconnected(
                f"no feasible path {net.source} -> {net.destination}"
            )
        return OracleResult(float(best[0]), best[1], explored)

    if net.caps is not None:
        raise TooLarge(
            "resource caps require exhaustive search, limited to "
            f"{max_nodes_exhaustive} nodes"
        )
    adj = net.adjacency()
    dist = {node: np.inf for node in net.nodes}
    prev: dict[int, int] = {}
    dist[net.source] = 0.0
    heap = [(0.0, net.source)]
    explored = 0
    while heap:
        f, node = heapq.heappop(heap)
        explored += 1
        if f > dist[node]:
            continue
        if node == net.destination:
            break
        for nxt in adj[node]:
            d, awt = net.edges[(node, nxt)]
            g = f + d / net.velocity + awt
            if g < dist[nxt]:
                dist[nxt] = g
                prev[nxt] = node
                heapq.heappush(heap, (g, nxt))
    if not np.isfinite(dist[net.destination]):
        raise Disconnected(f"no path {net.source} -> {net.destination}")
    path = [net.destination]
    while path[-1] != net.source:
        path.append(prev[path[-1]])
    return OracleResult(float(dist[net.destination]), path[::-1], explored)


class OracleCache:
    """checksum -> optimum records in a line-oriented text file."""

    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[str, float] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                parts = line.split()
                if len(parts) == 2:
                    self._records[parts[0]] = float(parts[1])

    def get(self, checksum: str) -> float | None:
        return self._records.get(checksum)

    def put(self, checksum: str, optimum: float) -> None:
        self._records[checksum] = float(optimum)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(f"{checksum} {optimum!r}\n")
