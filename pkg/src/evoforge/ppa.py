"""Plant propagation for continuous 2D minimization.

One generation: rank the population by normalized objective, squash ranks
through a steep tanh so good solutions stand out, let every individual
spawn offspring (many small steps for the fit, few large steps for the
unfit), evaluate the offspring, then keep the ``pop_size`` best of parents
and offspring together.  Every objective evaluation, the initial population
included, counts against a fixed budget and the run stops the moment the
budget is gone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .benchmarks import BenchmarkFunction


@dataclass(frozen=True)
class ContinuousIndividual:
    position: tuple[float, float]
    objective: float


@dataclass(frozen=True)
class PpaParams:
    pop_size: int
    n_max: int
    eval_budget: int

    def __post_init__(self) -> None:
        if self.pop_size < 1:
            raise ValueError(f"pop_size must be >= 1, got {self.pop_size}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.eval_budget < 1:
            raise ValueError(f"eval_budget must be >= 1, got {self.eval_budget}")


@dataclass(frozen=True)
class RunRecord:
    seed: int
    function: str
    params: PpaParams
    trajectory: tuple[tuple[int, float], ...]  # (evaluations used, best so far)
    final_best: ContinuousIndividual
    evaluations_used: int

    def to_json_dict(self) -> dict:
        x, y = self.final_best.position
        return {
            "seed": self.seed,
            "function": self.function,
            "pop_size": self.params.pop_size,
            "n_max": self.params.n_max,
            "eval_budget": self.params.eval_budget,
            "trajectory": [[e, b] for e, b in self.trajectory],
            "final": {"x": x, "y": y, "objective": self.final_best.objective},
        }


def normalize(objectives) -> list[float]:
    """Map objectives to [0, 1]: best (lowest) -> 1, worst -> 0.

    A constant population (including a singleton) has no spread to rank by;
    everyone gets the midpoint 0.5.
    """
    worst = max(objectives)
    best = min(objectives)
    if worst == best:
        return [0.5] * len(objectives)
    span = worst - best
    return [(worst - obj) / span for obj in objectives]


def fitness(z: float) -> float:
    """Steepened tanh squash of the normalized objective, F(0.5) = 0.5."""
    return 0.5 * (math.tanh(4.0 * z - 2.0) + 1.0)


def _open_unit(rng: Random) -> float:
    # random() yields [0, 1); redraw the measure-zero 0.0 so r stays in (0, 1)
    u = rng.random()
    while u == 0.0:
        u = rng.random()
    return u


def offspring_count(fitness_value: float, n_max: int, rng: Random) -> int:
    """ceil(n_max * F * r) with r in (0, 1); at least 1, at most n_max."""
    return math.ceil(n_max * fitness_value * _open_unit(rng))


def mutate_offspring(
    parent: ContinuousIndividual,
    fitness_value: float,
    function: BenchmarkFunction,
    rng: Random,
) -> ContinuousIndividual:
    """Spawn one offspring: per dimension, step by 2(1-F)(r-0.5) of the
    domain width (fresh r each dimension), clamped to the bounds."""
    scale = 2.0 * (1.0 - fitness_value)
    position = []
    for value, (lo, hi) in zip(parent.position, function.bounds):
        step = scale * (rng.random() - 0.5) * (hi - lo)
        position.append(min(max(value + step, lo), hi))
    x, y = position
    return ContinuousIndividual((x, y), function.evaluate(x, y))


def run_ppa(function: BenchmarkFunction, params: PpaParams, seed: int) -> RunRecord:
    """One budgeted minimization run; deterministic for a given seed."""
    rng = Random(seed)
    budget = params.eval_budget
    evals = 0

    population: list[ContinuousIndividual] = []
    for _ in range(params.pop_size):
        if evals >= budget:
            break
        x, y = function.sample_uniform(rng)
        population.append(ContinuousIndividual((x, y), function.evaluate(x, y)))
        evals += 1
    population.sort(key=lambda ind: ind.objective)
    trajectory = [(evals, population[0].objective)]

    while evals < budget:
        zs = normalize([ind.objective for ind in population])
        fs = [fitness(z) for z in zs]
        offspring: list[ContinuousIndividual] = []
        for parent, f_val in zip(population, fs):
            if evals >= budget:
                break
            count = offspring_count(f_val, params.n_max, rng)
            for _ in range(count):
                if evals >= budget:
                    break
                offspring.append(mutate_offspring(parent, f_val, function, rng))
                evals += 1
        combined = population + offspring
        # stable sort: on ties, survivors are the older individuals first
        combined.sort(key=lambda ind: ind.objective)
        population = combined[: params.pop_size]
        trajectory.append((evals, population[0].objective))

    return RunRecord(
        seed=seed,
        function=function.name,
        params=params,
        trajectory=tuple(trajectory),
        final_best=population[0],
        evaluations_used=evals,
    )
