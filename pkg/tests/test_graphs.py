import math
from random import Random

import pytest

from evoforge.graphs import (
    EdgeListParseError,
    Graph,
    MutationInapplicable,
    MutationKind,
    ks_edge_count,
    mutate,
    mutation_applicable,
    parse_edge_list,
    random_graph,
    serialize_edge_list,
)

from conftest import complete_graph, path_graph


def _connected(g: Graph) -> bool:
    adj = [set() for _ in range(g.vertex_count)]
    for u, w in g.edges:
        adj[u].add(w)
        adj[w].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for n in adj[stack.pop()]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == g.vertex_count


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, frozenset([(1, 1)]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, frozenset([(0, 3)]))

    def test_canonicalizes_orientation(self):
        assert Graph(3, frozenset([(2, 0)])).edges == frozenset([(0, 2)])

    def test_average_degree(self):
        g = random_graph(12, 15, Random(1))
        assert g.average_degree == 2.5
        assert g.max_edge_count == 66


class TestKsEdgeCount:
    @pytest.mark.parametrize("v,expected", [(12, 15), (16, 23), (20, 31)])
    def test_pinned_experiment_sizes(self, v, expected):
        assert ks_edge_count(v) == expected

    def test_formula_fallback(self):
        # direct evaluation of the half-threshold formula is the oracle
        for v in (3, 10, 50, 100, 200):
            if v in (12, 16, 20):
                continue
            expected = math.floor(v * (math.log(v) + math.log(math.log(v))) / 2)
            assert ks_edge_count(v) == expected
        assert ks_edge_count(100) == 306

    def test_too_small(self):
        with pytest.raises(ValueError):
            ks_edge_count(2)


class TestRandomGraph:
    def test_exact_counts_and_degree(self):
        g = random_graph(12, 15, Random(7))
        assert g.vertex_count == 12
        assert g.edge_count == 15
        assert g.average_degree == 2.5

    def test_complete_regardless_of_seed(self):
        for seed in range(5):
            g = random_graph(4, 6, Random(seed))
            assert g.edges == complete_graph(4).edges

    def test_edgeless(self):
        assert random_graph(5, 0, Random(3)).edge_count == 0

    def test_too_many_edges(self):
        with pytest.raises(ValueError):
            random_graph(4, 7, Random(0))

    def test_seed_determinism(self):
        assert random_graph(9, 14, Random(5)) == random_graph(9, 14, Random(5))

    def test_property_counts_and_invariants(self):
        rng = Random(20240)
        for _ in range(300):
            v = rng.randint(1, 30)
            e = rng.randint(0, v * (v - 1) // 2)
            g = random_graph(v, e, rng)
            assert g.edge_count == e
            assert all(0 <= u < w < v for u, w in g.edges)


class TestMutate:
    def test_insert_adds_edge(self):
        g = random_graph(8, 10, Random(2))
        child = mutate(g, MutationKind.INSERT, Random(3))
        assert child.edge_count == g.edge_count + 1
        assert g.edges < child.edges

    def test_delete_removes_edge(self):
        g = random_graph(8, 10, Random(2))
        child = mutate(g, MutationKind.DELETE, Random(3))
        assert child.edge_count == g.edge_count - 1
        assert child.edges < g.edges

    def test_move_keeps_count_and_relocates(self):
        rng = Random(11)
        for _ in range(50):
            g = random_graph(7, 9, rng)
            child = mutate(g, MutationKind.MOVE, rng)
            assert child.edge_count == g.edge_count
            assert child.edges != g.edges
            # the reinserted edge is not the deleted one
            assert len(g.edges - child.edges) == 1
            assert len(child.edges - g.edges) == 1

    def test_insert_on_complete_inapplicable(self):
        with pytest.raises(MutationInapplicable):
            mutate(complete_graph(4), MutationKind.INSERT, Random(0))

    def test_delete_on_edgeless_inapplicable(self):
        with pytest.raises(MutationInapplicable):
            mutate(Graph(5, frozenset()), MutationKind.DELETE, Random(0))

    def test_move_needs_edge_and_room(self):
        assert not mutation_applicable(Graph(5, frozenset()), MutationKind.MOVE)
        assert not mutation_applicable(complete_graph(4), MutationKind.MOVE)

    def test_invariants_preserved_along_chains(self):
        rng = Random(77)
        g = random_graph(10, 12, rng)
        kinds = list(MutationKind)
        for _ in range(300):
            kind = rng.choice(kinds)
            if not mutation_applicable(g, kind):
                continue
            g = mutate(g, kind, rng)
            assert g.vertex_count == 10
            assert all(0 <= u < w < 10 for u, w in g.edges)

    def test_delete_can_disconnect(self):
        # connectivity is not an invariant: deleting a bridge splits a path
        g = path_graph(4)
        hit = False
        for seed in range(20):
            child = mutate(g, MutationKind.DELETE, Random(seed))
            if not _connected(child):
                hit = True
                break
        assert hit


class TestEdgeListFormat:
    def test_parse_triangle(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
        assert g.vertex_count == 3
        assert g.edges == frozenset([(0, 1), (0, 2), (1, 2)])

    def test_round_trip_random(self):
        rng = Random(5150)
        for _ in range(50):
            v = rng.randint(1, 20)
            g = random_graph(v, rng.randint(0, v * (v - 1) // 2), rng)
            assert parse_edge_list(serialize_edge_list(g)) == g

    def test_serialize_is_canonical(self):
        text = "3 2\n2 1\n1 0\n"
        canonical = serialize_edge_list(parse_edge_list(text))
        assert canonical == "3 2\n0 1\n1 2\n"
        assert serialize_edge_list(parse_edge_list(canonical)) == canonical

    def test_self_loop_names_line(self):
        with pytest.raises(EdgeListParseError, match="line 2.*self-loop"):
            parse_edge_list("2 1\n0 0")

    def test_duplicate_edge(self):
        with pytest.raises(EdgeListParseError, match="line 3.*duplicate"):
            parse_edge_list("3 2\n0 1\n1 0")

    def test_out_of_range_vertex(self):
        with pytest.raises(EdgeListParseError, match="line 2.*range"):
            parse_edge_list("3 1\n0 3")

    def test_missing_edges(self):
        with pytest.raises(EdgeListParseError, match="expected 2 edge lines"):
            parse_edge_list("3 2\n0 1")

    def test_trailing_garbage(self):
        with pytest.raises(EdgeListParseError, match="end of input"):
            parse_edge_list("3 1\n0 1\n1 2")

    def test_bad_header(self):
        with pytest.raises(EdgeListParseError, match="line 1"):
            parse_edge_list("three 3\n0 1")
