"""Green Heron Swarm Optimization toolkit.

Discrete event-string optimization (TSP, QAP, multi-constraint knapsack,
road-network routing) with a continuous extension via location-based
neighbor-influenced variation, plus instance parsers, exact small-instance
oracles, GA/PSO baselines, and a seeded experiment harness.
"""

from .baselines import (
    BaselineConfig,
    GeneticAlgorithmOptimizer,
    ParticleSwarmOptimizer,
    run_ga,
    run_pso,
)
from .continuous import ContinuousGhosaOptimizer
from .engine import Agent, GhosaOptimizer, PopulationState, optimize, replace_worst
from .harness import (
    ExperimentConfig,
    RunStats,
    aggregate_stats,
    export_report,
    run_experiment,
)
from .lbniv import (
    ContinuousAgent,
    LbnivParams,
    clamp_to_bounds,
    lbniv_update,
    update_d,
    update_epsilon,
)
from .operators import (
    BaitingCase,
    OperatorConfig,
    attracting_prey_swarms,
    baiting,
    change_of_position,
    secondary_fitness_linkage,
    secondary_fitness_segments,
)
from .problems import (
    BenchmarkFunction,
    KnapsackInstance,
    KnapsackProblem,
    QapInstance,
    QapProblem,
    RoadNetwork,
    RoadNetworkProblem,
    TspInstance,
    TspProblem,
    benchmark_function,
    eval_benchmark,
    knapsack_decode,
    knapsack_profit,
    qap_cost,
    road_fitness,
    tsp_tour_length,
)

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "BaitingCase",
    "BaselineConfig",
    "BenchmarkFunction",
    "ContinuousAgent",
    "ContinuousGhosaOptimizer",
    "ExperimentConfig",
    "GeneticAlgorithmOptimizer",
    "GhosaOptimizer",
    "KnapsackInstance",
    "KnapsackProblem",
    "LbnivParams",
    "OperatorConfig",
    "ParticleSwarmOptimizer",
    "PopulationState",
    "QapInstance",
    "QapProblem",
    "RoadNetwork",
    "RoadNetworkProblem",
    "RunStats",
    "TspInstance",
    "TspProblem",
    "aggregate_stats",
    "attracting_prey_swarms",
    "baiting",
    "benchmark_function",
    "change_of_position",
    "clamp_to_bounds",
    "eval_benchmark",
    "export_report",
    "knapsack_decode",
    "knapsack_profit",
    "lbniv_update",
    "optimize",
    "qap_cost",
    "replace_worst",
    "road_fitness",
    "run_experiment",
    "run_ga",
    "run_pso",
    "secondary_fitness_linkage",
    "secondary_fitness_segments",
    "tsp_tour_length",
    "update_d",
    "update_epsilon",
]
