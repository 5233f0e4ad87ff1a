import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clawdiamond.edgecolor import (
    chromatic_index,
    chromatic_index_backtracking,
    color_bipartite,
    color_hamiltonian_odd,
    color_near_hamiltonian,
    color_path_or_cycle,
    colors_used,
    is_overfull,
    is_proper_edge_coloring,
    matching_number,
)
from clawdiamond.errors import NotBipartite, PreconditionViolated, TooLarge
from clawdiamond.families import d6i1, petersen, petersen_minus_vertex
from clawdiamond.graph import build_graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from helpers import (
    brute_chromatic_index,
    brute_matching_number,
    planted_hamiltonian,
    planted_near_hamiltonian,
    random_subcubic_triangle_free,
    to_nx,
)


def test_properness_checker():
    h = cycle_graph(4)
    good = {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2}
    assert is_proper_edge_coloring(h, good, 2)
    assert not is_proper_edge_coloring(h, {**good, (1, 2): 1})
    assert not is_proper_edge_coloring(h, good, 1)
    assert not is_proper_edge_coloring(h, {(0, 1): 1})
    assert colors_used(good) == 2


@given(st.integers(1, 10), st.randoms(use_true_random=False))
def test_matching_number_against_brute_force(n, rnd):
    h = random_subcubic_triangle_free(rnd, n)
    info = matching_number(h)
    assert info.size == brute_matching_number(h)
    ends = [v for e in info.witness for v in e]
    assert len(ends) == len(set(ends)) and all(h.has_edge(*e) for e in info.witness)


def test_matching_number_against_networkx_on_odd_structures():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randrange(10, 40)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.15]
        h = build_graph(n, pairs)
        assert matching_number(h).size == len(nx.max_weight_matching(to_nx(h), maxcardinality=True))


def test_overfull():
    assert is_overfull(d6i1(1))  # 10 > 3 * 3
    assert not is_overfull(petersen_minus_vertex())  # 12 = 4 * 3
    assert is_overfull(cycle_graph(7))
    assert not is_overfull(cycle_graph(8))


def test_bipartite_colouring():
    for h in (complete_bipartite(3, 3), cycle_graph(8), path_graph(5), complete_bipartite(2, 3)):
        ec = color_bipartite(h)
        assert is_proper_edge_coloring(h, ec, h.max_degree) and set(ec) == set(h.edges)
    with pytest.raises(NotBipartite):
        color_bipartite(cycle_graph(5))


@given(st.integers(2, 14), st.randoms(use_true_random=False))
def test_bipartite_colouring_random(n, rnd):
    h = random_subcubic_triangle_free(rnd, n)
    if not nx.is_bipartite(to_nx(h)):
        return
    ec = color_bipartite(h)
    assert is_proper_edge_coloring(h, ec, max(h.max_degree, 1))


def test_paths_and_cycles():
    for h in (cycle_graph(5), cycle_graph(6), path_graph(4), build_graph(8, [(0, 1), (1, 2), (2, 0), (4, 5)])):
        ec = color_path_or_cycle(h)
        assert is_proper_edge_coloring(h, ec, 3) and set(ec) == set(h.edges)
    assert colors_used(color_path_or_cycle(cycle_graph(6))) == 2
    with pytest.raises(PreconditionViolated):
        color_path_or_cycle(complete_graph(4))


@given(st.integers(1, 8), st.randoms(use_true_random=False))
def test_chromatic_index_against_exhaustive_assignment(n, rnd):
    h = random_subcubic_triangle_free(rnd, n)
    if h.m > 10:
        return
    assert chromatic_index(h) == brute_chromatic_index(h)


def test_chromatic_index_known_values():
    assert chromatic_index(d6i1(1)) == 4
    assert chromatic_index(complete_bipartite(3, 3)) == 3
    assert chromatic_index(petersen()) == 4
    assert chromatic_index(petersen_minus_vertex()) == 4
    assert chromatic_index(complete_graph(4)) == 3
    assert chromatic_index(build_graph(3, [])) == 0


def test_backtracking_with_fixed_colours():
    h = path_graph(3)
    assert chromatic_index_backtracking(h, 2, fixed={(0, 1): 1, (1, 2): 1}) is None
    ec = chromatic_index_backtracking(h, 2, fixed={(1, 2): 1})
    assert ec == {(0, 1): 2, (1, 2): 1}
    with pytest.raises(TooLarge):
        chromatic_index_backtracking(cycle_graph(70), 3)


@pytest.mark.parametrize("case", [1, 2, 3])
def test_hamiltonian_engine_planted(case):
    rng = random.Random(case)
    for _ in range(200):
        h, cyc, case_, w = planted_hamiltonian(rng, rng.randrange(5, 26, 2), case)
        ec = color_hamiltonian_odd(h, cyc, case_, w)
        assert is_proper_edge_coloring(h, ec, 3) and set(ec) == set(h.edges)


@pytest.mark.parametrize("case", [1, 2, 3])
def test_near_hamiltonian_engine_planted(case):
    rng = random.Random(10 + case)
    for _ in range(200):
        h, v, cyc, case_, w = planted_near_hamiltonian(rng, rng.randrange(4, 26, 2), case)
        ec = color_near_hamiltonian(h, v, cyc, case_, w)
        assert is_proper_edge_coloring(h, ec, 3) and set(ec) == set(h.edges)


def test_engine_preconditions():
    c7 = cycle_graph(7)
    with pytest.raises(PreconditionViolated):
        color_hamiltonian_odd(c7, range(7), 1, (0, 3))  # no chord
    with pytest.raises(PreconditionViolated):
        color_hamiltonian_odd(cycle_graph(6), range(6), 3, (0,))  # even
    h = build_graph(7, list(c7.edges) + [(0, 3)])
    with pytest.raises(PreconditionViolated):
        color_hamiltonian_odd(h, range(7), 3, (1,))  # neighbour 0 has degree 3
    ec = color_hamiltonian_odd(h, range(7), 3, (5,))
    assert is_proper_edge_coloring(h, ec, 3)
    with pytest.raises(PreconditionViolated):
        color_near_hamiltonian(h, 0, range(1, 7), 1, (1, 2))
