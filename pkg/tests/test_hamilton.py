from random import Random

import pytest

from evoforge.graphs import Graph, random_graph
from evoforge.hamilton import (
    Decision,
    brute_force_decide,
    check_witness,
    decide,
)

from conftest import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
    two_triangles,
)


class TestFixedCases:
    def test_cycle_is_hamiltonian_with_its_own_witness(self):
        c5 = cycle_graph(5)
        outcome = decide(c5)
        assert outcome.decision is Decision.HAMILTONIAN
        assert check_witness(c5, outcome.witness)

    def test_path_rejected_at_root(self):
        outcome = decide(path_graph(4))
        assert outcome.decision is Decision.NON_HAMILTONIAN
        assert outcome.recursions == 1
        assert outcome.witness is None

    @pytest.mark.parametrize("g", [complete_graph(4), complete_graph(5), cycle_graph(6)])
    def test_small_hamiltonian(self, g):
        outcome = decide(g)
        assert outcome.decision is Decision.HAMILTONIAN
        assert check_witness(g, outcome.witness)

    def test_star_rejected_at_root(self):
        outcome = decide(star_graph(3))
        assert outcome.decision is Decision.NON_HAMILTONIAN
        assert outcome.recursions == 1

    def test_petersen_non_hamiltonian(self):
        pet = petersen_graph()
        assert brute_force_decide(pet) is False  # exhaustive oracle first
        assert decide(pet).decision is Decision.NON_HAMILTONIAN

    def test_disconnected_rejected_at_root(self):
        outcome = decide(two_triangles())
        assert outcome.decision is Decision.NON_HAMILTONIAN
        assert outcome.recursions == 1

    @pytest.mark.parametrize("v", [1, 2])
    def test_degenerate_sizes(self, v):
        g = complete_graph(v) if v > 1 else Graph(1, frozenset())
        outcome = decide(g)
        assert outcome.decision is Decision.NON_HAMILTONIAN
        assert outcome.recursions == 1


class TestSolverContracts:
    def test_oracle_agreement(self, solver_corpus):
        for g, expected in solver_corpus:
            outcome = decide(g)
            assert (outcome.decision is Decision.HAMILTONIAN) == expected

    def test_witnesses_are_sound(self, solver_corpus):
        for g, expected in solver_corpus:
            if expected:
                outcome = decide(g)
                assert outcome.witness is not None
                assert check_witness(g, outcome.witness)

    def test_determinism(self):
        rng = Random(31337)
        for _ in range(30):
            g = random_graph(9, rng.randint(0, 36), rng)
            first = decide(g)
            assert decide(g) == first

    def test_pruning_toggles_never_change_decisions(self, solver_corpus):
        rng = Random(8)
        sample = [solver_corpus[rng.randrange(len(solver_corpus))] for _ in range(120)]
        for g, expected in sample:
            for neighbor in (False, True):
                for path in (False, True):
                    outcome = decide(g, neighbor_pruning=neighbor, path_pruning=path)
                    assert (outcome.decision is Decision.HAMILTONIAN) == expected

    def test_cap_aborts(self):
        g = complete_graph(9)
        full = decide(g)
        assert full.recursions > 5
        capped = decide(g, recursion_cap=5)
        assert capped.decision is Decision.ABORTED
        assert capped.cap_hit
        assert capped.recursions == 5
        assert capped.witness is None

    def test_cap_validation(self):
        with pytest.raises(ValueError):
            decide(cycle_graph(4), recursion_cap=0)

    def test_vertex_limit(self):
        with pytest.raises(ValueError, match="62"):
            decide(Graph(63, frozenset()))

    def test_degree_deficient_always_one_recursion(self):
        rng = Random(12)
        for _ in range(50):
            g = random_graph(10, rng.randint(0, 8), rng)  # too sparse to cover 10 vertices
            outcome = decide(g)
            assert outcome.decision is Decision.NON_HAMILTONIAN
            assert outcome.recursions == 1


class TestCheckWitness:
    def test_valid_cycle(self):
        assert check_witness(cycle_graph(5), [0, 1, 2, 3, 4])

    def test_wrong_order(self):
        assert not check_witness(cycle_graph(5), [0, 1, 2, 4, 3])

    def test_missing_vertex(self):
        assert not check_witness(complete_graph(4), [0, 1, 2])

    def test_malformed(self):
        k4 = complete_graph(4)
        assert not check_witness(k4, [0, 1, 2, 2])
        assert not check_witness(k4, [0, 1, 2, "x"])
        assert not check_witness(k4, None if False else [])
        assert not check_witness(Graph(2, frozenset([(0, 1)])), [0, 1])


class TestBruteForce:
    def test_known_cases(self):
        assert brute_force_decide(cycle_graph(6)) is True
        assert brute_force_decide(star_graph(3)) is False
        assert brute_force_decide(complete_graph(3)) is True
        assert brute_force_decide(Graph(2, frozenset([(0, 1)]))) is False

    def test_size_guard(self):
        with pytest.raises(ValueError):
            brute_force_decide(Graph(11, frozenset()))
