import pytest
from hypothesis import given

from corpus import graphs
from vckernel.generators import odd_cycles
from vckernel.graph import DirectedGraph, UndirectedGraph
from vckernel.oracle import (
    OracleRefused,
    all_vertex_covers,
    check_equivalence,
    dominant_vcs,
    linked_bruteforce,
    lp_bruteforce,
    max_matching_bruteforce,
    min_vc_bruteforce,
    repset_bruteforce_check,
    vc_size,
)
from vckernel.tightcover import min_vertex_cover

C5 = odd_cycles(1, 2)
K5 = UndirectedGraph(range(5), [(u, v) for u in range(5) for v in range(u + 1, 5)])
P3 = UndirectedGraph(range(3), [(0, 1), (1, 2)])


def test_frozen_minimum_covers():
    rep = min_vc_bruteforce(C5)
    assert rep.min_vc_size == 3 and len(rep.witnesses) == 5
    assert rep.witnesses[0] == {0, 1, 3}
    assert vc_size(K5) == 4
    empty = min_vc_bruteforce(UndirectedGraph())
    assert empty.min_vc_size == 0 and empty.witnesses == (frozenset(),)


def test_dominant_covers_prefer_outside_d():
    assert dominant_vcs(P3, {0, 2}) == [frozenset({1})]
    # star with two leaves in D and the centre outside it
    tri_pendant = UndirectedGraph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert dominant_vcs(tri_pendant, {0, 1, 3}) == [frozenset({0, 2}), frozenset({1, 2})]


def test_equivalence_examples():
    assert check_equivalence(C5, 3, UndirectedGraph(), 0)
    assert not check_equivalence(C5, 2, UndirectedGraph(), 0)
    assert check_equivalence(K5, 3, UndirectedGraph([0, 1], [(0, 1)]), 0)


def test_cap_is_enforced():
    with pytest.raises(OracleRefused):
        vc_size(odd_cycles(3, 3), cap=20)
    with pytest.raises(OracleRefused):
        lp_bruteforce(odd_cycles(1, 6))


def test_small_oracles():
    assert max_matching_bruteforce(C5) == 2 and max_matching_bruteforce(K5) == 2
    assert lp_bruteforce(C5) == 5 and lp_bruteforce(P3) == 2
    assert len(all_vertex_covers(P3)) == 5  # {1} and every superset of it, plus {0,2}
    path = DirectedGraph(range(3), [(0, 1), (1, 2)])
    assert linked_bruteforce(path, {0}, [2]) and not linked_bruteforce(path, {0}, [1, 2])


@given(graphs(max_n=10))
def test_branching_solver_matches_enumeration(g):
    x = min_vertex_cover(g)
    assert all(u in x or v in x for u, v in g.edges)
    assert len(x) == vc_size(g)


def test_repset_check_catches_a_missing_representative():
    # sources 0 and 4 feed 3 and 2 separately; deleting one source strands its sink
    h = DirectedGraph(range(5), [(0, 1), (1, 3), (4, 2)])
    fam = [{3}, {2}]
    both = [frozenset({3}), frozenset({2})]
    assert repset_bruteforce_check(h, {0, 4}, 1, fam, both)
    assert not repset_bruteforce_check(h, {0, 4}, 1, fam, [frozenset({3})])
    assert not repset_bruteforce_check(h, {0, 4}, 1, fam, [frozenset({2})])
    # with ell = 0 only X_H = {} is queried, and either sink alone suffices
    assert repset_bruteforce_check(h, {0, 4}, 0, fam, [frozenset({2})])
    assert repset_bruteforce_check(h, {0}, 1, [], [])
