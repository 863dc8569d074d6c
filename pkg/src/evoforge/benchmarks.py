"""Five classic 2D minimization surfaces, shifted so every global minimum is 0.

Formulas and rectangular domains follow the standard literature versions.
Each function subtracts its known raw minimum (``min_offset``), so a perfect
optimizer drives the value to zero.  Evaluation outside the domain is an
error; optimizers clamp their steps instead of sampling outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random
from typing import Callable

Bounds = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class BenchmarkFunction:
    name: str
    bounds: Bounds
    min_offset: float
    minimizer: tuple[float, float]
    raw: Callable[[float, float], float]

    def evaluate(self, x: float, y: float) -> float:
        (xlo, xhi), (ylo, yhi) = self.bounds
        if not (xlo <= x <= xhi and ylo <= y <= yhi):
            raise ValueError(f"({x}, {y}) outside {self.name} domain")
        return self.raw(x, y) - self.min_offset

    def sample_uniform(self, rng: Random) -> tuple[float, float]:
        (xlo, xhi), (ylo, yhi) = self.bounds
        return (xlo + (xhi - xlo) * rng.random(), ylo + (yhi - ylo) * rng.random())


def _branin(x: float, y: float) -> float:
    return (
        (y - 5.1 * x * x / (4.0 * math.pi**2) + 5.0 * x / math.pi - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8.0 * math.pi)) * math.cos(x)
        + 10.0
    )


def _easom(x: float, y: float) -> float:
    return -math.cos(x) * math.cos(y) * math.exp(-((x - math.pi) ** 2 + (y - math.pi) ** 2))


def _goldstein_price(x: float, y: float) -> float:
    a = 1.0 + (x + y + 1.0) ** 2 * (
        19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y
    )
    b = 30.0 + (2.0 * x - 3.0 * y) ** 2 * (
        18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y
    )
    return a * b


def _martin_gaddy(x: float, y: float) -> float:
    return (x - y) ** 2 + ((x + y - 10.0) / 3.0) ** 2


def _six_hump_camel(x: float, y: float) -> float:
    return (4.0 - 2.1 * x * x + x**4 / 3.0) * x * x + x * y + (-4.0 + 4.0 * y * y) * y * y


FUNCTIONS: dict[str, BenchmarkFunction] = {
    f.name: f
    for f in (
        BenchmarkFunction(
            "branin", ((-5.0, 10.0), (0.0, 15.0)), 0.397887, (math.pi, 2.275), _branin
        ),
        BenchmarkFunction(
            "easom", ((-100.0, 100.0), (-100.0, 100.0)), -1.0, (math.pi, math.pi), _easom
        ),
        BenchmarkFunction(
            "goldstein-price", ((-2.0, 2.0), (-2.0, 2.0)), 3.0, (0.0, -1.0), _goldstein_price
        ),
        BenchmarkFunction(
            "martin-gaddy", ((0.0, 10.0), (0.0, 10.0)), 0.0, (5.0, 5.0), _martin_gaddy
        ),
        BenchmarkFunction(
            "six-hump-camel",
            ((-3.0, 3.0), (-2.0, 2.0)),
            -1.031628,
            (0.0898, -0.7126),
            _six_hump_camel,
        ),
    )
}


def get_function(name: str) -> BenchmarkFunction:
    try:
        return FUNCTIONS[name]
    except KeyError:
        valid = ", ".join(sorted(FUNCTIONS))
        raise ValueError(f"unknown function {name!r}; valid names: {valid}") from None
