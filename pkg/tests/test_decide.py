import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clawdiamond.canon import are_isomorphic
from clawdiamond.certificate import check_verdict
from clawdiamond.decide import (
    color_necklace,
    color_odd_hole,
    decide_auto,
    decide_n12k,
    decide_n113,
    decide_n222_no_c5,
    decide_n222_with_c5,
    decide_root,
    extend_to_first_neighborhood,
    gadget_decompose,
    pair_property_violations,
    size_bound,
)
from clawdiamond.edgecolor import chromatic_index, is_proper_edge_coloring
from clawdiamond.errors import BadLength, OracleBudgetExceeded, StructureViolation
from clawdiamond.families import (
    FamilyId,
    d6i1,
    d6i5,
    gen_family,
    overfull_c9_chords4_members,
    petersen_minus_vertex,
)
from clawdiamond.formats import from_graph6
from clawdiamond.graph import OddCycle, build_graph, complete_graph, cycle_graph, is_connected
from clawdiamond.linegraph import line_graph
from clawdiamond.patterns import CLAW, build_net
from helpers import hole_with_pairs, n122_free_hole_instance, necklace, permuted, random_subcubic_triangle_free

B10 = gen_family(FamilyId("B9i1", 1))

# 9-vertex blocks with an induced 5-cycle that the engines colour, taken from
# the exhaustive run at nine vertices.
ENGINE_BLOCKS = ["H?Bcq_h", "HC`Q`Wi", "HEKcIGJ", "HEMAHGJ", "HE_iHOR", "HE`HPGR", "HEh@GcL", "HEh@GgJ"]


def _vertex_proper(g, vc):
    return set(vc) == set(range(g.n)) and all(vc[a] != vc[b] for a, b in g.edges) and set(vc.values()) <= {1, 2, 3}


# ----------------------------------------------------------------------
# decide_n113
# ----------------------------------------------------------------------


def test_n113_b10_is_exceptional():
    v = decide_n113(B10)
    assert v.kind == "exceptional" and v.family == FamilyId("B9i1", 1)
    assert check_verdict(B10, v)[0]


def test_n113_odd_cycle_and_pendants():
    v = decide_n113(cycle_graph(7))
    assert v.colorable and _vertex_proper(cycle_graph(7), v.vertex_coloring)
    assert len(set(v.vertex_coloring.values())) == 3
    h = build_graph(12, list(cycle_graph(9).edges) + [(0, 9), (3, 10), (6, 11)])
    g = line_graph(h)[0]
    v = decide_n113(g)
    assert v.colorable and _vertex_proper(g, v.vertex_coloring)


def test_n113_rejections():
    assert decide_n113(CLAW).kind == "out_of_class"
    v = decide_n113(build_net(1, 1, 3))
    assert v.kind == "out_of_class" and v.pattern_name == "net:1,1,3"
    assert check_verdict(build_net(1, 1, 3), v)[0]
    v = decide_n113(complete_graph(4))
    assert v.kind == "contains_k4" and check_verdict(complete_graph(4), v)[0]


# ----------------------------------------------------------------------
# edge side
# ----------------------------------------------------------------------


@pytest.mark.parametrize("i", [1, 2, 3])
def test_n222_no_c5_d_families(i):
    if i > 1:
        v = decide_n222_no_c5(d6i1(i))
        assert v.kind == "exceptional" and v.family == FamilyId("D6i1", i)
    v = decide_n222_no_c5(d6i5(i))
    assert v.kind == "exceptional" and v.family == FamilyId("D6i5", i)
    assert check_verdict(d6i5(i), v)[0]


def test_d7_goes_through_the_c5_branch():
    v = decide_n222_no_c5(d6i1(1))
    assert v.kind == "out_of_class" and v.pattern_name == "c5"
    v = decide_n222_with_c5(d6i1(1))
    assert v.kind == "exceptional" and v.family == FamilyId("D6i1", 1)


def test_n222_no_c5_colourable_examples():
    for h in (necklace(["b"], [4])[0], cycle_graph(9), necklace(["b", "b"], [1, 0])[0]):
        v = decide_n222_no_c5(h)
        assert v.colorable and is_proper_edge_coloring(h, v.edge_coloring, 3)
        assert set(v.edge_coloring) == set(h.edges)


def test_n222_rejects_spider():
    from clawdiamond.families import petersen

    v = decide_n222_with_c5(petersen())
    assert v.kind == "out_of_class" and v.pattern_name == "spider:3,3,3"
    assert check_verdict(petersen(), v)[0]


def test_n222_with_c5_exceptions():
    v = decide_n222_with_c5(petersen_minus_vertex())
    assert v.kind == "exceptional" and v.family == FamilyId("PetersenMinusVertex")
    for h in overfull_c9_chords4_members():
        v = decide_n222_with_c5(h)
        assert v.kind == "exceptional" and v.family == FamilyId("OverfullC9Chords4")
        assert check_verdict(h, v)[0]


@pytest.mark.parametrize("g6", ENGINE_BLOCKS)
def test_n222_with_c5_engine_colourings(g6):
    h = from_graph6(g6)
    v = decide_n222_with_c5(h)
    assert v.colorable and "hamiltonian" in v.provenance
    assert is_proper_edge_coloring(h, v.edge_coloring, 3)


def test_root_side_rejects_bad_roots():
    assert decide_root(complete_graph(3)).pattern_name == "triangle"
    star = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    v = decide_root(star)
    assert v.pattern_name == "degree4" and check_verdict(star, v)[0]


# ----------------------------------------------------------------------
# gadgets and necklaces
# ----------------------------------------------------------------------


def test_gadget_decompose_examples():
    h, q = necklace(["a"], [1])
    assert are_isomorphic(h, d6i1(1))
    gs = gadget_decompose(h, OddCycle(q, True))
    assert [g.kind for g in gs] == ["a"] and gs[0].length == 4
    assert gadget_decompose(cycle_graph(7), OddCycle(tuple(range(7)), True)) == []
    h, q = necklace(["d"], [4])
    assert [g.kind for g in gadget_decompose(h, OddCycle(q, True))] == ["d"]


def test_planted_necklaces_are_the_families():
    assert are_isomorphic(necklace(["a", "a"], [0, 1])[0], d6i1(2))
    assert are_isomorphic(necklace(["a", "d"], [0, 0])[0], d6i5(1))
    assert are_isomorphic(necklace(["a", "a", "d"], [0, 0, 0])[0], d6i5(2))


def test_gadget_decompose_structure_errors():
    # a vertex two steps from the cycle
    h = build_graph(9, list(cycle_graph(7).edges) + [(0, 7), (7, 8)])
    with pytest.raises(StructureViolation):
        gadget_decompose(h, OddCycle(tuple(range(7)), True))
    # a chord
    h = build_graph(7, list(cycle_graph(7).edges) + [(0, 3)])
    with pytest.raises(StructureViolation):
        gadget_decompose(h, OddCycle(tuple(range(7)), True))


def test_necklace_colourings():
    h, q = necklace(["b", "b"], [1, 0])
    qq = OddCycle(q, True)
    ec = color_necklace(h, qq, gadget_decompose(h, qq))
    assert ec is not None and is_proper_edge_coloring(h, ec, 3) and set(ec) == set(h.edges)
    for kinds, gaps in ((["a"], [1]), (["a", "d"], [0, 0]), (["a", "a"], [0, 1])):
        h, q = necklace(kinds, gaps)
        qq = OddCycle(q, True)
        assert color_necklace(h, qq, gadget_decompose(h, qq)) is None


def test_necklace_against_oracle_up_to_three_gadgets():
    """None exactly on the two exceptional shapes, and exactly when the
    graph is not 3-edge-colourable."""
    checked = 0
    for r in (1, 2, 3):
        for kinds in product("abcd", repeat=r):
            for gaps in product(range(3), repeat=r):
                h, q = necklace(list(kinds), list(gaps))
                if len(q) % 2 == 0 or len(q) < 5:
                    continue
                qq = OddCycle(q, True)
                gs = gadget_decompose(h, qq)
                assert [g.kind for g in gs] == list(kinds)
                ec = color_necklace(h, qq, gs)
                flexible = any(k in "bc" for k in kinds)
                forced_diff = kinds.count("d") + sum(gaps)
                exceptional = not flexible and forced_diff == 1
                assert (ec is None) == exceptional == (chromatic_index(h) == 4)
                if ec is not None:
                    assert is_proper_edge_coloring(h, ec, 3) and set(ec) == set(h.edges)
                checked += 1
    assert checked > 400


# ----------------------------------------------------------------------
# odd holes and decide_n12k
# ----------------------------------------------------------------------


def test_odd_hole_recipes():
    assert color_odd_hole(9) == [1, 2, 3, 1, 2, 3, 1, 2, 3]
    assert color_odd_hole(7) == [1, 2, 1, 3, 1, 2, 3]
    assert color_odd_hole(11) == [1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 3]
    for bad in (3, 4, 8):
        with pytest.raises(BadLength):
            color_odd_hole(bad)


@pytest.mark.parametrize("p", range(7, 102, 2))
def test_odd_hole_pair_property(p):
    cols = color_odd_hole(p)
    assert all(cols[i] != cols[(i + 1) % p] for i in range(p))
    assert pair_property_violations(cols) == []


def test_five_hole_cannot_have_the_pair_property():
    # every proper 3-colouring of C5 violates it, the recipe included
    for cols in product((1, 2, 3), repeat=5):
        if all(cols[i] != cols[(i + 1) % 5] for i in range(5)):
            assert pair_property_violations(cols)


def test_extend_examples():
    q = OddCycle(tuple(range(7)), True)
    qc = dict(enumerate(color_odd_hole(7)))
    assert extend_to_first_neighborhood(cycle_graph(7), q, qc) == qc
    # colours 1,2 on v0 v1 force 3
    g = build_graph(8, list(cycle_graph(7).edges) + [(7, 0), (7, 1)])
    assert extend_to_first_neighborhood(g, q, qc)[7] == 3
    # pair over {1,2} (v0 v1) and {1,3} (v2 v3) gets 3 and 2
    g = build_graph(9, list(cycle_graph(7).edges) + [(7, 0), (7, 1), (8, 2), (8, 3), (7, 8)])
    out = extend_to_first_neighborhood(g, q, qc)
    assert (out[7], out[8]) == (3, 2)


def test_extend_rejects_bad_structure():
    q = OddCycle(tuple(range(7)), True)
    qc = dict(enumerate(color_odd_hole(7)))
    g = build_graph(8, list(cycle_graph(7).edges) + [(7, 0)])
    with pytest.raises(StructureViolation):
        extend_to_first_neighborhood(g, q, qc)


def test_n12k_small_cases():
    assert size_bound(2) == 31
    v = decide_n12k(complete_graph(4), 2)
    assert v.kind == "contains_k4"
    v = decide_n12k(cycle_graph(7), 2)
    assert v.colorable and _vertex_proper(cycle_graph(7), v.vertex_coloring)


def test_n12k_hole_with_pairs_past_the_bound():
    # C33 with w_i on v_i v_{i+1} for i = 0, 2, 4 and the pair w_0 w_2
    p = 33
    edges = list(cycle_graph(p).edges)
    for t, i in enumerate((0, 2, 4)):
        edges += [(p + t, i), (p + t, i + 1)]
    edges.append((p, p + 1))
    g = build_graph(p + 3, edges)
    v = decide_n12k(g, 2)
    assert v.colorable and "hole recipe" in v.provenance
    assert _vertex_proper(g, v.vertex_coloring)


def test_n12k_random_instances():
    rng = random.Random(12)
    for _ in range(20):
        g = n122_free_hole_instance(rng)
        v = decide_n12k(g, 2)
        assert v.colorable and _vertex_proper(g, v.vertex_coloring)
        assert check_verdict(g, v)[0]


def test_n12k_flags_nets():
    rng = random.Random(1)
    g = hole_with_pairs(rng, 35, 0.9)
    v = decide_n12k(g, 2)
    assert v.kind == "out_of_class" and check_verdict(g, v)[0]


# ----------------------------------------------------------------------
# decide_auto
# ----------------------------------------------------------------------


def test_auto_examples():
    assert decide_auto(B10).family == FamilyId("B9i1", 1)
    v = decide_auto(cycle_graph(5))
    assert v.colorable and len(set(v.vertex_coloring.values())) == 3
    lp = line_graph(petersen_minus_vertex())[0]
    v = decide_auto(lp)
    assert v.kind == "exceptional" and v.family == FamilyId("LinePetersenMinusVertex")
    assert check_verdict(lp, v)[0]
    assert decide_auto(CLAW).kind == "out_of_class"
    assert decide_auto(build_graph(0, [])).colorable


def test_auto_handles_components_and_isolated_vertices():
    g = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)])
    v = decide_auto(g)
    assert v.colorable and _vertex_proper(g, v.vertex_coloring)


def test_auto_budget_guard():
    # the Petersen graph contains S333 and its line graph contains N113, so
    # only exact search applies
    from clawdiamond.families import petersen

    g = line_graph(petersen())[0]
    with pytest.raises(OracleBudgetExceeded):
        decide_auto(g, max_edges=10)
    v = decide_auto(g)
    assert v.kind == "not_colorable" and check_verdict(g, v)[0]


@given(st.integers(4, 13), st.randoms(use_true_random=False))
def test_auto_is_relabelling_invariant_and_sound(n, rnd):
    h = random_subcubic_triangle_free(rnd, n)
    if not is_connected(h) or h.m < 2:
        return
    g = line_graph(h)[0]
    g2, _ = permuted(g, rnd)
    a, b = decide_auto(g), decide_auto(g2)
    assert a.kind == b.kind and a.family == b.family
    assert a.colorable == (chromatic_index(h) <= 3)
    assert check_verdict(g, a)[0] and check_verdict(g2, b)[0]
