import random

import pytest

from clawdiamond.canon import canonical_form
from clawdiamond.edgecolor import chromatic_index, is_overfull
from clawdiamond.errors import BadParameters, NotGeneratable, OracleBudgetExceeded
from clawdiamond.families import (
    FamilyId,
    d6i1,
    d6i5,
    family_law,
    gen_family,
    is_overfull_c9_chords4,
    line_family,
    overfull_c9_chords4_members,
    petersen_minus_vertex,
    recognize,
    validate_family_contract,
)
from clawdiamond.graph import build_graph, cycle_graph, shortest_induced_odd_cycle
from clawdiamond.linegraph import line_graph
from clawdiamond.patterns import find_induced_c5
from helpers import permuted

# Frozen from the first exhaustive run over 9-cycles with four chords.
OVERFULL_C9_MEMBER_COUNT = 4


def test_family_id_text_round_trip():
    for fid in (FamilyId("D6i1", 2), FamilyId("B9i7", 1), FamilyId("PetersenMinusVertex")):
        assert FamilyId.parse(str(fid)) == fid
    assert str(FamilyId("D6i5", 3)) == "D6i5 i=3"
    with pytest.raises(BadParameters):
        FamilyId("D6i1")
    with pytest.raises(BadParameters):
        FamilyId("PetersenMinusVertex", 1)
    with pytest.raises(BadParameters):
        FamilyId("D6i1", 0)
    with pytest.raises(BadParameters):
        FamilyId("Snark", 1)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_family_law(i):
    assert (d6i1(i).n, d6i1(i).m) == (6 * i + 1, 9 * i + 1)
    assert (d6i5(i).n, d6i5(i).m) == (6 * i + 5, 9 * i + 7)
    b = gen_family(FamilyId("B9i1", i))
    assert (b.n, b.m) == (9 * i + 1, sum(d * (d - 1) // 2 for d in map(d6i1(i).degree, range(6 * i + 1))))
    assert family_law(FamilyId("B9i7", i)) == (6 * i + 5, 9 * i + 7)


def test_d7_is_k33_with_a_subdivided_edge():
    h = d6i1(1)
    k33_plus = build_graph(7, [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (0, 6), (6, 5)])
    assert canonical_form(h) == canonical_form(k33_plus)


def test_shortest_odd_holes_grow_with_i():
    assert [shortest_induced_odd_cycle(d6i1(i)).p for i in (1, 2, 3)] == [5, 9, 13]
    assert [shortest_induced_odd_cycle(d6i5(i)).p for i in (1, 2, 3)] == [7, 11, 15]
    assert find_induced_c5(d6i1(2)) is None


@pytest.mark.parametrize(
    "fid",
    [FamilyId("D6i1", i) for i in (1, 2, 3)]
    + [FamilyId("D6i5", i) for i in (1, 2, 3)]
    + [FamilyId("B9i1", 1), FamilyId("B9i7", 1), FamilyId("PetersenMinusVertex"), FamilyId("LinePetersenMinusVertex")],
)
def test_family_contract(fid):
    report = validate_family_contract(fid)
    assert report.ok, report.problems
    assert report.chromatic_index == 4


def test_contract_matching_and_overfullness():
    for i in (1, 2, 3):
        assert validate_family_contract(FamilyId("D6i1", i)).matching == 3 * i
        assert validate_family_contract(FamilyId("D6i5", i)).matching == 3 * i + 2
    rep = validate_family_contract(FamilyId("PetersenMinusVertex"))
    assert rep.matching == 4 and not rep.overfull


def test_contract_budget_and_sets():
    with pytest.raises(OracleBudgetExceeded):
        validate_family_contract(FamilyId("D6i1", 4))
    with pytest.raises(NotGeneratable):
        validate_family_contract(FamilyId("OverfullC9Chords4"))
    with pytest.raises(NotGeneratable):
        gen_family(FamilyId("OverfullC9Chords4"))


def test_overfull_c9_members():
    members = overfull_c9_chords4_members()
    assert len(members) == OVERFULL_C9_MEMBER_COUNT
    for h in members:
        assert h.m == 13 and is_overfull(h) and chromatic_index(h) == 4
        assert is_overfull_c9_chords4(h)
    assert not is_overfull_c9_chords4(petersen_minus_vertex())
    assert not is_overfull_c9_chords4(cycle_graph(9))


def test_recognize_both_sides_under_relabelling():
    rng = random.Random(5)
    for fid in (FamilyId("D6i1", 2), FamilyId("D6i5", 1), FamilyId("PetersenMinusVertex")):
        h, _ = permuted(gen_family(fid), rng)
        assert recognize(h) == fid
        lg, _ = permuted(line_graph(h)[0], rng)
        assert recognize(lg) == line_family(fid)
    for h in overfull_c9_chords4_members():
        assert recognize(permuted(h, rng)[0]) == FamilyId("OverfullC9Chords4")
    assert recognize(cycle_graph(7)) is None
    assert recognize(line_graph(cycle_graph(9))[0]) is None
