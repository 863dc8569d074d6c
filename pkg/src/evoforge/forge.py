"""Evolving graphs that are expensive for the cycle solver.

Fitness of a graph is the solver's recursion count (capped searches score
the cap), so selection pushes toward instances that force deep backtracking.
Two evolvers share the same mutation pool:

* a hillclimber: one graph, one uniformly chosen mutation per step, keep
  the child only when strictly fitter;
* a plant-propagation variant: ten graphs sorted by fitness, the two
  fittest each spawn five once-mutated offspring, the other eight spawn one
  offspring hit with twenty mutations, and an offspring replaces its own
  parent only when strictly fitter.

Both count every solver call (initial graphs included) against a fixed
evaluation budget.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random

from .graphs import (
    Graph,
    MutationKind,
    ks_edge_count,
    mutate,
    mutation_applicable,
    random_graph,
    serialize_edge_list,
)
from .hamilton import DEFAULT_RECURSION_CAP, decide

PPA_POPULATION = 10
PPA_TOP_SPAWN = (5, 1)  # offspring per parent: two fittest, the rest
PPA_TOP_MUTATIONS = (1, 20)  # mutations per offspring: two fittest, the rest

_KINDS = (MutationKind.INSERT, MutationKind.DELETE, MutationKind.MOVE)


@dataclass(frozen=True)
class GraphEvolutionConfig:
    algorithm: str  # "hc" | "ppa"
    vertex_count: int
    initial_edges: int | None = None  # default: ks_edge_count(vertex_count)
    budget: int = 500
    recursion_cap: int = DEFAULT_RECURSION_CAP
    seed: int = 0

    def __post_init__(self) -> None:
        if self.algorithm not in ("hc", "ppa"):
            raise ValueError(f"algorithm must be 'hc' or 'ppa', got {self.algorithm!r}")
        if self.vertex_count < 3:
            raise ValueError(f"need at least 3 vertices, got {self.vertex_count}")
        if self.recursion_cap < 1:
            raise ValueError("recursion_cap must be positive")
        min_budget = PPA_POPULATION if self.algorithm == "ppa" else 1
        if self.budget < min_budget:
            raise ValueError(f"budget must be >= {min_budget} for {self.algorithm}")
        edges = self.resolved_edges()
        max_edges = self.vertex_count * (self.vertex_count - 1) // 2
        if not 0 <= edges <= max_edges:
            raise ValueError(f"initial_edges {edges} outside [0, {max_edges}]")

    def resolved_edges(self) -> int:
        if self.initial_edges is not None:
            return self.initial_edges
        return ks_edge_count(self.vertex_count)


@dataclass(frozen=True)
class DegreeReport:
    """Descriptive degree statistics of one graph (no pass/fail semantics)."""

    avg_degree: float
    degree_histogram: dict[int, int]
    fraction_high: float  # share of vertices with degree above the average

    def to_json_dict(self) -> dict:
        return {
            "avg_degree": self.avg_degree,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "fraction_high": self.fraction_high,
        }


@dataclass(frozen=True)
class GraphRunRecord:
    config: GraphEvolutionConfig
    best_graph: Graph
    best_fitness: int
    trajectory: tuple[tuple[int, int], ...]  # (evaluations used, best so far)
    evaluations_used: int

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "algorithm": self.config.algorithm,
                "vertices": self.config.vertex_count,
                "edges": self.config.resolved_edges(),
                "budget": self.config.budget,
                "recursion_cap": self.config.recursion_cap,
                "seed": self.config.seed,
            },
            "best_fitness": self.best_fitness,
            "evaluations_used": self.evaluations_used,
            "trajectory": [[e, f] for e, f in self.trajectory],
            "best_graph": serialize_edge_list(self.best_graph),
            "report": hamburger_report(self.best_graph).to_json_dict(),
        }


def evaluate_graph(g: Graph, cap: int) -> int:
    """Hardness fitness: solver recursions, with aborted searches worth ``cap``."""
    return decide(g, cap).recursions


def apply_random_mutation(g: Graph, rng: Random) -> Graph:
    """Apply one uniformly chosen mutation, resampling the kind among the
    applicable ones if the first draw does not fit the graph."""
    kind = rng.choice(_KINDS)
    if mutation_applicable(g, kind):
        return mutate(g, kind, rng)
    options = [k for k in _KINDS if mutation_applicable(g, k)]
    if not options:  # unreachable for v >= 3: insert or delete always fits
        return g
    return mutate(g, rng.choice(options), rng)


def hamburger_report(g: Graph) -> DegreeReport:
    degrees = g.degrees()
    avg = g.average_degree
    high = sum(1 for d in degrees if d > avg)
    return DegreeReport(
        avg_degree=avg,
        degree_histogram=dict(Counter(degrees)),
        fraction_high=high / g.vertex_count,
    )


def hillclimb(config: GraphEvolutionConfig) -> GraphRunRecord:
    """Single-graph strict-improvement search."""
    if config.algorithm != "hc":
        raise ValueError("hillclimb requires algorithm='hc'")
    rng = Random(config.seed)
    cap = config.recursion_cap
    g = random_graph(config.vertex_count, config.resolved_edges(), rng)
    fit = evaluate_graph(g, cap)
    evals = 1
    trajectory = [(evals, fit)]
    while evals < config.budget:
        child = apply_random_mutation(g, rng)
        child_fit = evaluate_graph(child, cap)
        evals += 1
        if child_fit > fit:
            g, fit = child, child_fit
        trajectory.append((evals, fit))
    return GraphRunRecord(config, g, fit, tuple(trajectory), evals)


def graph_ppa(config: GraphEvolutionConfig) -> GraphRunRecord:
    """Population search: rank-dependent offspring counts and mutation loads."""
    if config.algorithm != "ppa":
        raise ValueError("graph_ppa requires algorithm='ppa'")
    rng = Random(config.seed)
    cap = config.recursion_cap
    population: list[tuple[Graph, int]] = []
    evals = 0
    for _ in range(PPA_POPULATION):
        g = random_graph(config.vertex_count, config.resolved_edges(), rng)
        population.append((g, evaluate_graph(g, cap)))
        evals += 1
    # descending fitness; sorted() is stable, ties keep their prior order
    population.sort(key=lambda pair: pair[1], reverse=True)
    trajectory = [(evals, population[0][1])]

    while evals < config.budget:
        survivors = list(population)
        for rank, (parent, parent_fit) in enumerate(population):
            if evals >= config.budget:
                break
            top = rank < 2
            offspring_count = PPA_TOP_SPAWN[0] if top else PPA_TOP_SPAWN[1]
            mutations = PPA_TOP_MUTATIONS[0] if top else PPA_TOP_MUTATIONS[1]
            best_child: Graph | None = None
            best_child_fit = parent_fit
            for _ in range(offspring_count):
                if evals >= config.budget:
                    break
                child = parent
                for _ in range(mutations):
                    child = apply_random_mutation(child, rng)
                child_fit = evaluate_graph(child, cap)
                evals += 1
                if child_fit > best_child_fit:  # strict: ties keep the parent
                    best_child, best_child_fit = child, child_fit
            if best_child is not None:
                survivors[rank] = (best_child, best_child_fit)
        population = sorted(survivors, key=lambda pair: pair[1], reverse=True)
        trajectory.append((evals, population[0][1]))

    best_graph, best_fit = population[0]
    return GraphRunRecord(config, best_graph, best_fit, tuple(trajectory), evals)


def run(config: GraphEvolutionConfig) -> GraphRunRecord:
    return hillclimb(config) if config.algorithm == "hc" else graph_ppa(config)


def run_many(configs, jobs: int = 1) -> list[GraphRunRecord]:
    """Run an ensemble, optionally across processes; order follows configs."""
    configs = list(configs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, configs))
    return [run(c) for c in configs]
