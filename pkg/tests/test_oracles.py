import itertools

import numpy as np
import pytest

from conftest import random_knapsack, random_qap, random_roadnet, random_tsp
from ghosa import KnapsackInstance, QapInstance, RoadNetwork, TspInstance, tsp_tour_length
from ghosa.errors import Disconnected, TooLarge
from ghosa.oracles import (
    OracleCache,
    brute_force_qap,
    brute_force_tsp,
    exact_knapsack,
    exact_shortest_paths,
)


class TestBruteForceTsp:
    def test_three_cities_any_tour_is_perimeter(self, rng):
        inst = random_tsp(rng, n=3)
        result = brute_force_tsp(inst)
        assert result.optimum == pytest.approx(tsp_tour_length(inst, [1, 2, 3]))
        assert result.nodes_explored == 1

    def test_unit_square_four(self, unit_square_tsp):
        result = brute_force_tsp(unit_square_tsp)
        assert result.optimum == pytest.approx(4.0)
        assert result.nodes_explored == 3  # (4-1)!/2

    def test_optimizer_achieves_optimum(self, rng):
        inst = random_tsp(rng, n=7)
        result = brute_force_tsp(inst)
        assert tsp_tour_length(inst, result.optimizer) == pytest.approx(result.optimum)

    def test_row_order_independence(self, rng):
        inst = random_tsp(rng, n=6)
        shuffled = TspInstance(
            n=6, coords=inst.coords[::-1].copy(), metric="EUCLID_RAW"
        )
        assert brute_force_tsp(inst).optimum == pytest.approx(
            brute_force_tsp(shuffled).optimum
        )

    def test_too_large(self, rng):
        with pytest.raises(TooLarge):
            brute_force_tsp(random_tsp(rng, n=11))


class TestBruteForceQap:
    def test_zero_flow(self):
        inst = QapInstance(n=3, flow=np.zeros((3, 3)), dist=np.ones((3, 3)))
        assert brute_force_qap(inst).optimum == 0.0

    def test_single_facility(self):
        inst = QapInstance(n=1, flow=np.zeros((1, 1)), dist=np.zeros((1, 1)))
        result = brute_force_qap(inst)
        assert result.optimum == 0.0
        assert result.optimizer.tolist() == [1]

    def test_matches_independent_enumeration(self, rng):
        inst = random_qap(rng, n=5)
        expected = min(
            sum(
                inst.flow[i, j] * inst.dist[p[i], p[j]]
                for i in range(5)
                for j in range(5)
            )
            for p in itertools.permutations(range(5))
        )
        assert brute_force_qap(inst).optimum == pytest.approx(expected)

    def test_too_large(self, rng):
        with pytest.raises(TooLarge):
            brute_force_qap(random_qap(rng, n=10))


class TestExactKnapsack:
    def test_nothing_fits(self):
        inst = KnapsackInstance(
            m=1, n=3, profit=[5, 5, 5], weight=[[10, 10, 10]], capacity=[4]
        )
        result = exact_knapsack(inst)
        assert result.optimum == 0.0
        assert result.optimizer.sum() == 0

    def test_single_item_fits(self):
        inst = KnapsackInstance(m=1, n=1, profit=[7], weight=[[2]], capacity=[3])
        assert exact_knapsack(inst).optimum == 7.0

    def test_dp_matches_exhaustive_single_constraint(self, rng):
        inst = KnapsackInstance(
            m=1,
            n=12,
            profit=rng.integers(1, 40, 12),
            weight=rng.integers(1, 15, (1, 12)),
            capacity=[40],
        )
        exhaustive = exact_knapsack(inst, max_n=22)
        dp = exact_knapsack(inst, max_n=5)  # force the DP route
        assert dp.optimum == pytest.approx(exhaustive.optimum)

    def test_multi_constraint_too_large(self, rng):
        inst = random_knapsack(rng, m=3, n=15)
        with pytest.raises(TooLarge):
            exact_knapsack(inst, max_n=10)


class TestExactShortestPaths:
    def test_single_edge(self):
        net = RoadNetwork(
            nodes=[1, 2], edges={(1, 2): (10.0, 3.0)}, velocity=10.0,
            source=1, destination=2,
        )
        result = exact_shortest_paths(net)
        assert result.optimum == pytest.approx(4.0)
        assert result.optimizer == [1, 2]

    def test_dominating_parallel_route(self, toy_roadnet):
        # 1->3->4 costs (20+10)/10 + 1 = 4.0, strictly dominating the rest
        result = exact_shortest_paths(toy_roadnet)
        assert result.optimizer == [1, 3, 4]
        assert result.optimum == pytest.approx(4.0)

    def test_label_search_agrees_with_enumeration(self, rng):
        net = random_roadnet(rng, n=12)
        exhaustive = exact_shortest_paths(net, max_nodes_exhaustive=15)
        dijkstra = exact_shortest_paths(net, max_nodes_exhaustive=5)
        assert dijkstra.optimum == pytest.approx(exhaustive.optimum)

    def test_disconnected(self):
        net = RoadNetwork(
            nodes=[1, 2, 3], edges={(1, 2): (1.0, 0.0)}, velocity=1.0,
            source=1, destination=3,
        )
        with pytest.raises(Disconnected):
            exact_shortest_paths(net)

    def test_resource_caps_prune_cheap_path(self, toy_roadnet):
        capped = RoadNetwork(
            nodes=toy_roadnet.nodes,
            edges=toy_roadnet.edges,
            velocity=toy_roadnet.velocity,
            source=1,
            destination=4,
            resources={(1, 3): np.array([5.0])},
            caps=np.array([1.0]),
        )
        result = exact_shortest_paths(capped)
        assert result.optimizer != [1, 3, 4]


class TestOracleCache:
    def test_round_trip(self, tmp_path):
        cache = OracleCache(tmp_path / "oracle.cache")
        assert cache.get("abc") is None
        cache.put("abc", 42.5)
        assert cache.get("abc") == 42.5
        again = OracleCache(tmp_path / "oracle.cache")
        assert again.get("abc") == 42.5

    def test_latest_record_wins(self, tmp_path):
        cache = OracleCache(tmp_path / "oracle.cache")
        cache.put("k", 1.0)
        cache.put("k", 2.0)
        assert OracleCache(tmp_path / "oracle.cache").get("k") == 2.0
