from itertools import combinations

from hypothesis import given, strategies as st

from corpus import factor_critical_graphs, graphs
from vckernel.decomposition import lp_value
from vckernel.generators import factor_critical_chords, odd_cycles
from vckernel.graph import UndirectedGraph
from vckernel.oracle import all_vertex_covers, lp_bruteforce, vc_size
from vckernel.tightcover import (
    TightCoverQuery,
    critical_sets,
    has_tight_vc,
    is_factor_critical,
    min_vertex_cover,
    minimal_bad_subsets,
    vc_with_forced,
)

C5 = odd_cycles(1, 2)
K5 = UndirectedGraph(range(5), [(i, j) for i in range(5) for j in range(i + 1, 5)])
TRIANGLE = odd_cycles(1, 1)


def test_factor_critical_examples():
    assert is_factor_critical(C5)
    assert is_factor_critical(K5)
    assert not is_factor_critical(UndirectedGraph(range(2), [(0, 1)]))
    assert not is_factor_critical(UndirectedGraph())
    assert is_factor_critical(UndirectedGraph([7]))


def test_forced_cover_examples():
    assert vc_with_forced(C5, (), 3) == {0, 1, 3}
    assert vc_with_forced(C5, {0, 1, 2}, 3) is None
    assert vc_with_forced(K5, (), 3) is None
    assert vc_with_forced(C5, {2}, 3) == {0, 2, 3}


def test_tight_cover_examples():
    assert has_tight_vc(C5) and has_tight_vc(TRIANGLE)
    assert not has_tight_vc(K5)
    assert TightCoverQuery(C5.vertices, frozenset({4})).run(C5) == {0, 2, 4}


def test_critical_set_examples():
    assert critical_sets(C5, 3) == [frozenset(s) for s in ({0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4})]
    assert critical_sets(K5, 3) == [frozenset()]
    assert critical_sets(TRIANGLE, 3) == [frozenset({0, 1, 2})]
    assert critical_sets(TRIANGLE, 2) == []


def test_minimal_bad_subsets_agree_with_enumeration():
    g = factor_critical_chords(9, 3, seed=4)
    assert minimal_bad_subsets(g, g.vertices, 3) == critical_sets(g, 3)


@given(graphs(max_n=12), st.data())
def test_vc_with_forced_matches_bruteforce(g, data):
    z = data.draw(st.sets(st.sampled_from(sorted(g)), max_size=3)) if g.n else set()
    covers = [x for x in all_vertex_covers(g) if z <= x]
    best = min(map(len, covers))
    for budget in (best - 1, best, best + 1):
        got = vc_with_forced(g, z, budget)
        if budget < best:
            assert got is None
        else:
            assert got is not None and g.is_vertex_cover(got) and z <= got
            assert got == min((x for x in covers if len(x) == best), key=sorted)


@given(graphs(max_n=12))
def test_min_vertex_cover_is_optimal(g):
    assert len(min_vertex_cover(g)) == vc_size(g)


@given(factor_critical_graphs(max_n=11))
def test_factor_critical_bounds(g):
    assert is_factor_critical(g)
    assert lp_value(g)[0] == g.n
    assert lp_bruteforce(g) >= g.n if g.n <= 11 else True
    assert vc_size(g) >= (g.n + 1) // 2
    assert has_tight_vc(g) == (vc_size(g) == (g.n + 1) // 2)


@given(factor_critical_graphs(max_n=11))
def test_tight_sets_are_covers_iff_no_critical_set(g):
    crit = critical_sets(g, None)
    size = (g.n + 1) // 2
    for xs in combinations(sorted(g), size):
        x = frozenset(xs)
        assert g.is_vertex_cover(x) == (not any(z <= x for z in crit))


@given(factor_critical_graphs(max_n=13))
def test_critical_sets_have_at_most_three_vertices(g):
    assert all(len(z) <= 3 for z in critical_sets(g, None))
