"""Exact Hamiltonian-cycle decisions via degree-guided backtracking.

The search grows a vertex path depth-first, always starting from a
minimum-degree vertex and trying extension candidates in ascending degree
(ties by vertex id).  The root invocation rejects outright when some
vertex has degree below two or the graph is disconnected; such a graph
costs exactly one recursion.  Each committed edge gets a private copy of
the graph on which two edge-pruning rules fire:

* neighbor rule: a vertex in the path interior already uses its two cycle
  edges, so every other edge at that vertex is dropped;
* path rule: the edge joining the path's two endpoints would close a
  sub-``v`` cycle, so it is dropped while the path is shorter than ``v``.

After pruning, any vertex left with fewer than two usable edges kills the
branch (every vertex still needs a way in and a way out).  Either pruning
rule can be toggled off; that changes the work done, never the decision.

The number of search-node entries (the root counts as one) is reported as
``recursions`` and doubles as the hardness fitness for the instance forge.
Adjacency lives in int64 bitmasks, so graphs may have at most 62 vertices;
the kernel is compiled with numba when available.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np

from .graphs import Graph

try:
    from numba import njit as _njit

    def _jit(fn):
        return _njit(cache=True)(fn)

except ImportError:  # pragma: no cover - numba is a declared dependency

    def _jit(fn):
        return fn


DEFAULT_RECURSION_CAP = 10**8
MAX_SOLVER_VERTICES = 62
BRUTE_FORCE_MAX_VERTICES = 10

_NONHAM, _HAM, _ABORT = 0, 1, 2


class Decision(Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non_hamiltonian"
    ABORTED = "aborted"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one decision: verdict, optional cycle, and search effort."""

    decision: Decision
    witness: tuple[int, ...] | None
    recursions: int
    cap_hit: bool


@_jit
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    x = x + (x >> 8)
    x = x + (x >> 16)
    x = x + (x >> 32)
    return x & 0x7F


@_jit
def _lowest_bit(x):
    n = 0
    if x & 0xFFFFFFFF == 0:
        n += 32
        x >>= 32
    if x & 0xFFFF == 0:
        n += 16
        x >>= 16
    if x & 0xFF == 0:
        n += 8
        x >>= 8
    if x & 0xF == 0:
        n += 4
        x >>= 4
    if x & 0x3 == 0:
        n += 2
        x >>= 2
    if x & 0x1 == 0:
        n += 1
    return n


@_jit
def _connected(adj, v):
    full = (1 << v) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            i = _lowest_bit(f)
            f &= f - 1
            nxt |= adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


@_jit
def _fill_candidates(adj_row, pool, out):
    """Write pool's vertices into out, ascending by (degree, id)."""
    n = 0
    while pool:
        w = _lowest_bit(pool)
        pool &= pool - 1
        key = (_popcount(adj_row[w]) << 6) | w
        j = n
        while j > 0 and out[j - 1] > key:
            out[j] = out[j - 1]
            j -= 1
        out[j] = key
        n += 1
    for i in range(n):
        out[i] &= 63
    return n


@_jit
def _search(adj0, v, cap, use_neighbor, use_path, witness):
    levels = v + 1
    adj = np.empty((levels, v), np.int64)
    cand = np.empty((levels, v), np.int64)
    ccnt = np.zeros(levels, np.int64)
    cptr = np.zeros(levels, np.int64)
    path = np.empty(levels, np.int64)

    # root viability checks: a vertex of degree < 2 or a disconnected graph
    # is rejected for the cost of the root entry alone
    recursions = 1
    s = 0
    best = 64
    for i in range(v):
        di = _popcount(adj0[i])
        if di < 2:
            return _NONHAM, recursions
        if di < best:
            best = di
            s = i
        adj[0, i] = adj0[i]
    if not _connected(adj0, v):
        return _NONHAM, recursions

    path[0] = s
    visited = 1 << s
    ccnt[0] = _fill_candidates(adj[0], adj[0, s] & ~visited, cand[0])
    cptr[0] = 0

    d = 0
    while d >= 0:
        if cptr[d] >= ccnt[d]:
            if d == 0:
                break
            visited &= ~(1 << path[d])
            d -= 1
            continue
        w = cand[d, cptr[d]]
        cptr[d] += 1
        u = path[d]
        recursions += 1
        if recursions > cap:
            return _ABORT, cap
        nd = d + 1
        for i in range(v):
            adj[nd, i] = adj[d, i]
        path[nd] = w
        visited |= 1 << w

        dead = False
        if use_neighbor and d >= 1:
            # u is now interior: its cycle edges are fixed, drop the rest
            keep = (1 << path[d - 1]) | (1 << w)
            drop = adj[nd, u] & ~keep
            adj[nd, u] = adj[nd, u] & keep
            while drop:
                y = _lowest_bit(drop)
                drop &= drop - 1
                adj[nd, y] &= ~(1 << u)
                if _popcount(adj[nd, y]) < 2:
                    dead = True
                    break
        if not dead and use_path and nd >= 2 and nd < v - 1:
            # the chord joining the path's endpoints would close early
            if (adj[nd, s] >> w) & 1:
                adj[nd, s] &= ~(1 << w)
                adj[nd, w] &= ~(1 << s)
                if _popcount(adj[nd, s]) < 2 or _popcount(adj[nd, w]) < 2:
                    dead = True
        if dead:
            visited &= ~(1 << w)
            continue

        if nd == v - 1:
            if (adj[nd, w] >> s) & 1:
                for i in range(v):
                    witness[i] = path[i]
                return _HAM, recursions
            visited &= ~(1 << w)
            continue
        pool = adj[nd, w] & ~visited
        if pool == 0:
            visited &= ~(1 << w)
            continue
        ccnt[nd] = _fill_candidates(adj[nd], pool, cand[nd])
        cptr[nd] = 0
        d = nd
    return _NONHAM, recursions


def decide(
    graph: Graph,
    recursion_cap: int = DEFAULT_RECURSION_CAP,
    *,
    neighbor_pruning: bool = True,
    path_pruning: bool = True,
) -> SolveOutcome:
    """Decide Hamiltonicity of ``graph``, complete and sound unless capped.

    Pure function of (graph, cap, rule toggles): repeated calls return the
    identical outcome, recursion count included.  When the search would
    enter more than ``recursion_cap`` nodes the outcome is ABORTED with
    ``recursions == recursion_cap``.
    """
    if recursion_cap < 1:
        raise ValueError(f"recursion_cap must be positive, got {recursion_cap}")
    v = graph.vertex_count
    if v > MAX_SOLVER_VERTICES:
        raise ValueError(f"solver supports at most {MAX_SOLVER_VERTICES} vertices, got {v}")
    adj = np.zeros(v, dtype=np.int64)
    for u, w in graph.edges:
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    witness = np.full(v, -1, dtype=np.int64)
    status, recursions = _search(
        adj, v, recursion_cap, neighbor_pruning, path_pruning, witness
    )
    if status == _ABORT:
        return SolveOutcome(Decision.ABORTED, None, int(recursions), True)
    if status == _HAM:
        return SolveOutcome(
            Decision.HAMILTONIAN, tuple(int(x) for x in witness), int(recursions), False
        )
    return SolveOutcome(Decision.NON_HAMILTONIAN, None, int(recursions), False)


def check_witness(graph: Graph, cycle) -> bool:
    """True iff ``cycle`` visits every vertex exactly once along edges of
    ``graph``, wrapping around at the end.  Malformed input returns False."""
    v = graph.vertex_count
    try:
        seq = [int(x) for x in cycle]
    except (TypeError, ValueError):
        return False
    if v < 3 or len(seq) != v or set(seq) != set(range(v)):
        return False
    return all(graph.has_edge(seq[i], seq[(i + 1) % v]) for i in range(v))


def brute_force_decide(graph: Graph) -> bool:
    """Factorial-enumeration oracle: some vertex order forms a full cycle.

    Independent of :func:`decide` on purpose; keep it free of pruning so it
    stays a trustworthy reference.  Limited to 10 vertices.
    """
    v = graph.vertex_count
    if v > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force supports at most {BRUTE_FORCE_MAX_VERTICES} vertices, got {v}")
    if v < 3:
        return False
    adj = [set() for _ in range(v)]
    for u, w in graph.edges:
        adj[u].add(w)
        adj[w].add(u)
    for perm in permutations(range(1, v)):
        prev = 0
        ok = True
        for cur in perm:
            if cur not in adj[prev]:
                ok = False
                break
            prev = cur
        if ok and 0 in adj[prev]:
            return True
    return False
