"""Shared fixtures: named small graphs and the solver test corpus."""

from __future__ import annotations

from random import Random

import pytest

from evoforge.graphs import Graph, random_graph
from evoforge.hamilton import brute_force_decide


def cycle_graph(v: int) -> Graph:
    return Graph(v, frozenset((i, (i + 1) % v) for i in range(v)))


def path_graph(v: int) -> Graph:
    return Graph(v, frozenset((i, i + 1) for i in range(v - 1)))


def complete_graph(v: int) -> Graph:
    return Graph(v, frozenset((u, w) for u in range(v) for w in range(u + 1, v)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, frozenset(outer + spokes + inner))


def two_triangles() -> Graph:
    return Graph(6, frozenset([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


@pytest.fixture(scope="session")
def solver_corpus():
    """600 random graphs (200 per v in 6..8, densities spanning 0..max),
    each paired with the brute-force oracle's verdict."""
    rng = Random(0xC0FFEE)
    corpus = []
    for v in (6, 7, 8):
        max_e = v * (v - 1) // 2
        for i in range(200):
            e = (i * (max_e + 1)) // 200  # sweep the density range evenly
            g = random_graph(v, e, rng)
            corpus.append((g, brute_force_decide(g)))
    return corpus
