"""Layered half-opacity pixel arithmetic and a subset-sum reduction over it.

Stacking greyscale layers at 50% opacity halves everything already drawn,
so the last layer contributes 1/2 of its value, the one before 1/4, and so
on.  Doubling a value before it is buried one layer deeper therefore
cancels exactly: encode integer ``v_i`` as a polygon whose admissible
greyscales are ``v_i * 2^k`` (k-th pick gets the k-th doubling), and a
stack of picks composites to the plain sum of the chosen integers.  All
quantities are dyadic rationals well inside double precision, so the round
trip is exact, and a brute-force subset-sum search closes the loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

BRUTE_FORCE_MAX_VALUES = 24


@dataclass(frozen=True)
class CompositeStack:
    """Greyscale layers over an opaque black background, in drawing order."""

    layers: tuple[tuple[float, float], ...]  # (greyscale, alpha)

    def __post_init__(self) -> None:
        for grey, alpha in self.layers:
            if not 0.0 <= grey <= 255.0:
                raise ValueError(f"greyscale {grey} outside [0, 255]")
            if not 0.0 <= alpha <= 1.0:
                raise ValueError(f"alpha {alpha} outside [0, 1]")


def composite(stack: CompositeStack) -> float:
    """Fold the stack bottom-up: each layer covers what lies below it."""
    colour = 0.0
    for grey, alpha in stack.layers:
        colour = alpha * grey + (1.0 - alpha) * colour
    return colour


def composite_uniform(greys: Iterable[float], alpha: float = 0.5) -> float:
    return composite(CompositeStack(tuple((g, alpha) for g in greys)))


@dataclass(frozen=True)
class SubsetSumInstance:
    values: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("need at least one value")
        if any(v < 1 for v in self.values):
            raise ValueError("values must be positive integers")
        if self.target < 1:
            raise ValueError("target must be a positive integer")


@dataclass(frozen=True)
class SpfpInstance:
    """Per-polygon admissible greyscales and the pixel value to approximate."""

    polygon_table: tuple[tuple[int, ...], ...]  # [i][k-1] = values[i] * 2^k
    target_pixel: int


Selection = Sequence[int]  # ordered, distinct polygon indices


def reduce_to_spfp(instance: SubsetSumInstance) -> SpfpInstance:
    """Encode a subset-sum instance as a single-pixel approximation task."""
    m = len(instance.values)
    table = tuple(tuple(v * 2**k for k in range(1, m + 1)) for v in instance.values)
    return SpfpInstance(polygon_table=table, target_pixel=instance.target)


def _check_selection(instance: SpfpInstance, selection: Selection) -> list[int]:
    indices = list(selection)
    m = len(instance.polygon_table)
    if len(set(indices)) != len(indices):
        raise ValueError(f"selection indices must be distinct, got {indices}")
    for i in indices:
        if not 0 <= i < m:
            raise ValueError(f"polygon index {i} outside 0..{m - 1}")
    return indices


def evaluate_selection(instance: SpfpInstance, selection: Selection) -> float:
    """Pixel value of the chosen polygons: the k-th pick (1-based) uses its
    k-th admissible greyscale and is weighted by 2**-k.  Numerically equal
    to the plain sum of the encoded integers."""
    indices = _check_selection(instance, selection)
    return sum(
        instance.polygon_table[i][k] / 2.0 ** (k + 1) for k, i in enumerate(indices)
    )


def lift(selection: Selection, instance: SpfpInstance) -> list[int]:
    """Back-transform a selection: each polygon's base greyscale, halved,
    recovers the original integer."""
    indices = _check_selection(instance, selection)
    return [instance.polygon_table[i][0] // 2 for i in indices]


@dataclass(frozen=True)
class SubsetSumSolution:
    indices: tuple[int, ...]
    values: tuple[int, ...]
    best_sum: int
    exact: bool  # best_sum == target: the decision form answers yes


def brute_force_subset_sum(instance: SubsetSumInstance) -> SubsetSumSolution:
    """Exhaustive oracle for the optimization form: the subset whose sum is
    closest to the target.  Ties prefer the smaller sum, then the
    lexicographically smallest index tuple."""
    m = len(instance.values)
    if m > BRUTE_FORCE_MAX_VALUES:
        raise ValueError(f"brute force supports at most {BRUTE_FORCE_MAX_VALUES} values, got {m}")
    target = instance.target
    best_key = None
    best: tuple[tuple[int, ...], int] | None = None
    for size in range(m + 1):
        for indices in combinations(range(m), size):
            total = sum(instance.values[i] for i in indices)
            key = (abs(target - total), total, indices)
            if best_key is None or key < best_key:
                best_key = key
                best = (indices, total)
    indices, total = best
    return SubsetSumSolution(
        indices=indices,
        values=tuple(instance.values[i] for i in indices),
        best_sum=total,
        exact=total == target,
    )


def best_selection(instance: SpfpInstance) -> tuple[int, ...]:
    """Optimize the reduced task directly: the selection whose pixel value is
    closest to the target pixel, with the oracle's tie rules."""
    m = len(instance.polygon_table)
    if m > BRUTE_FORCE_MAX_VALUES:
        raise ValueError(f"selection search supports at most {BRUTE_FORCE_MAX_VALUES} polygons, got {m}")
    target = float(instance.target_pixel)
    best_key = None
    best: tuple[int, ...] | None = None
    for size in range(m + 1):
        for indices in combinations(range(m), size):
            value = evaluate_selection(instance, indices)
            key = (abs(target - value), value, indices)
            if best_key is None or key < best_key:
                best_key = key
                best = indices
    return best
