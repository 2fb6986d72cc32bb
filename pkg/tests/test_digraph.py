from itertools import combinations

import numpy as np
from hypothesis import given, strategies as st

from corpus import digraphs, planted_instances
from vckernel.decomposition import decomposition_from_parts
from vckernel.digraph import (
    build_h,
    compute_xop,
    is_closest,
    max_disjoint_paths,
    min_vertex_separator,
    min_vertex_separator_sink_side,
    reachable_set,
)
from vckernel.graph import DirectedGraph, UndirectedGraph
from vckernel.matching import Matching
from vckernel.oracle import is_closest_bruteforce, path_packing_bruteforce, separators_bruteforce
from vckernel.verify import dominant_cover_violations, overpay_violations

TWO_PATHS = DirectedGraph(range(4), [(0, 1), (0, 2), (1, 3), (2, 3)])  # s=0, m1=1, m2=2, t=3


def test_h_arc_through_singleton():
    # a=0, b=1 in A; d=2 singleton matched to a; b's own partner is 3
    g = UndirectedGraph(range(4), [(0, 2), (1, 2), (1, 3)])
    dec = decomposition_from_parts(g, [0, 1], [], [2, 3], Matching.from_edges([(0, 2), (1, 3)]))
    aux = build_h(g, dec)
    assert aux.h.arcs == [(1, 0)] and aux.witness == {(1, 0): 2}


def test_h_arc_through_triangle():
    # triangle x=0, y=1, z=2; a=3 matched to x; b=4 adjacent to x, matched to singleton d=5
    g = UndirectedGraph(range(6), [(0, 1), (1, 2), (0, 2), (3, 0), (4, 0), (4, 5)])
    m = Matching.from_edges([(3, 0), (1, 2), (4, 5)])
    dec = decomposition_from_parts(g, [3, 4], [], [0, 1, 2, 5], m)
    assert dec.a3 == {3} and dec.a1 == {4}
    aux = build_h(g, dec)
    assert aux.h.arcs == [(4, 3)] and aux.witness[4, 3] == 0
    assert aux.dump() == "p arc 2 1\na 4 3 0\n"


def test_h_empty_when_a_empty():
    g = UndirectedGraph(range(5), [(i, (i + 1) % 5) for i in range(5)])
    dec = decomposition_from_parts(g, [], [], range(5), Matching.from_edges([(0, 1), (2, 3)]))
    assert len(build_h(g, dec).h) == 0


def test_xop_examples():
    g = UndirectedGraph(range(6), [(0, 1), (1, 2), (0, 2), (3, 0), (4, 0), (4, 5)])
    dec = decomposition_from_parts(g, [3, 4], [], [0, 1, 2, 5], Matching.from_edges([(3, 0), (1, 2), (4, 5)]))
    assert compute_xop(dec, ()) == frozenset()
    assert compute_xop(dec, {4}) == frozenset()
    assert compute_xop(dec, {4, 5}) == {4}
    assert compute_xop(dec, {3}) == {3}


def test_reachability_examples():
    assert reachable_set(DirectedGraph([0, 1], [(0, 1)]), {0}, {0}) == frozenset()
    assert reachable_set(DirectedGraph([0, 1], [(0, 1)]), {0}) == {0, 1}
    path = DirectedGraph(range(3), [(0, 1), (1, 2)])
    assert reachable_set(path, {0}, {1}) == {0}


def test_separator_examples():
    assert min_vertex_separator(DirectedGraph([0]), {0}, {0}) == {0}
    assert min_vertex_separator(TWO_PATHS, {0}, {3}) == {0}
    assert min_vertex_separator_sink_side(TWO_PATHS, {0}, {3}) == {3}
    assert min_vertex_separator(TWO_PATHS, {1, 2}, {3}) == {3}
    assert min_vertex_separator(DirectedGraph(range(2)), {0}, {1}) == frozenset()


def test_closest_examples():
    assert is_closest(TWO_PATHS, {0}, ())
    assert is_closest(DirectedGraph([0]), {0}, {0})
    assert not is_closest(TWO_PATHS, {0}, {3})
    assert is_closest(TWO_PATHS, {0}, {0})
    assert not is_closest(TWO_PATHS, {0}, {1, 2})  # {0} is a smaller separator
    assert is_closest(TWO_PATHS, {1, 2}, {1, 2})


@given(digraphs(max_n=7), st.data())
def test_menger(h, data):
    verts = sorted(h)
    s = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    t = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    sep = min_vertex_separator(h, s, t)
    brute = separators_bruteforce(h, s, t)
    assert sep in brute and (s & t) <= sep
    assert len(sep) == min(map(len, brute)) == path_packing_bruteforce(h, s, t) == max_disjoint_paths(h, s, t)
    sink = min_vertex_separator_sink_side(h, s, t)
    assert sink in brute and len(sink) == len(sep)


@given(digraphs(max_n=7), st.data())
def test_closest_matches_bruteforce(h, data):
    verts = sorted(h)
    s = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    t = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    assert is_closest(h, s, t) == is_closest_bruteforce(h, s, t)


@given(digraphs(max_n=7), st.data())
def test_closest_sets_extend_by_a_path(h, data):
    verts = sorted(h)
    s = data.draw(st.sets(st.sampled_from(verts), min_size=1, max_size=3))
    for size in range(3):
        for t in map(frozenset, combinations(verts, size)):
            if not is_closest(h, s, t):
                continue
            for v in reachable_set(h, s, t) - t:
                assert path_packing_bruteforce(h, s, t | {v}) == len(t) + 1


def test_dominant_covers_on_planted_instances():
    for _, _, g1, dec in planted_instances(25, max_n=14, seed=100):
        assert dominant_cover_violations(g1, dec) == []


def test_overpay_bound_on_planted_instances():
    for _, _, g1, dec in planted_instances(15, max_n=13, seed=300):
        assert overpay_violations(g1, dec, slack=1) == []
