from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from corpus import digraphs, random_digraph
from vckernel.digraph import is_closest, is_linked, reachable_set
from vckernel.graph import DirectedGraph
from vckernel.oracle import repset_bruteforce_check
from vckernel.repset import (
    DEFAULT_PRIME,
    FieldMatrix,
    build_gammoid_digraph,
    canonical_triples,
    error_bound,
    gammoid_matrix,
    rank_mod_p,
    representative_family,
    representative_triples,
    solve_mod_p,
    validate_prime,
)

# s1=0, s2=1 both feed a=2, which feeds b=3 and c=4
FUNNEL = DirectedGraph(range(5), [(0, 2), (1, 2), (2, 3), (2, 4)])


def test_gammoid_digraph_sizes():
    inst = build_gammoid_digraph(DirectedGraph(), (), 0)
    assert len(inst.d) == 3 and len(inst.s) == 3 and not inst.d.arcs
    h = DirectedGraph([5, 9], [(5, 9)])
    inst = build_gammoid_digraph(h, {5}, 1)
    assert len(inst.d) == 12 and len(inst.s) == 6
    for j in (1, 2, 3):
        for i in (1, 2):
            assert inst.d.has_arc(inst.index[-i, j], inst.index[5, j])
        assert inst.d.has_arc(inst.index[5, j], inst.index[9, j])
    assert len(inst.d.arcs) == 3 * (1 + 2)


def test_lift_map():
    inst = build_gammoid_digraph(DirectedGraph([3, 5, 8]), (), 0)
    idx = inst.index
    assert inst.lift({8, 3, 5}) == (idx[3, 1], idx[5, 2], idx[8, 3])
    assert inst.lift({5, 3}) == (idx[3, 1], idx[5, 2], idx[5, 3])
    assert inst.lift({8}) == (idx[8, 1], idx[8, 2], idx[8, 3])


def test_gammoid_matrix_examples():
    a = gammoid_matrix(FUNNEL, {0, 1}, seed=1)
    assert a.shape == (2, 5)
    assert a.independent([0, 1])
    assert not a.independent([3, 4])
    assert not is_linked(FUNNEL, {0, 1}, {3, 4})
    assert a.independent([0, 3]) and is_linked(FUNNEL, {0, 1}, {0, 3})
    assert not a.independent([0, 1, 2])


def test_matrix_is_seed_deterministic():
    assert gammoid_matrix(FUNNEL, {0, 1}, seed=7) == gammoid_matrix(FUNNEL, {0, 1}, seed=7)
    assert gammoid_matrix(FUNNEL, {0, 1}, seed=7) != gammoid_matrix(FUNNEL, {0, 1}, seed=8)


def test_field_helpers():
    p = 101
    rng = np.random.default_rng(0)
    left = rng.integers(0, p, (4, 4)).tolist()
    right = rng.integers(0, p, (4, 2)).tolist()
    x = solve_mod_p(left, right, p)
    prod = (np.array(left, dtype=object) @ np.array(x, dtype=object)) % p
    assert prod.tolist() == right
    assert rank_mod_p([[1, 2], [2, 4]], 101) == 1
    assert rank_mod_p([[1, 0], [0, 2]], 2) == 1
    assert rank_mod_p([[1, 0], [0, 2]], 3) == 2
    with pytest.raises(ValueError):
        validate_prime(2**61)
    assert validate_prime(DEFAULT_PRIME) == DEFAULT_PRIME


def test_representative_family_small_cases():
    a = FieldMatrix(101, ((1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1)))
    assert representative_family(a, [], 0) == []
    assert representative_family(a, [(0, 1, 2)], 0) == [0]
    # rank 3 leaves one dimension: any two independent triples are parallel
    assert representative_family(a, [(0, 1, 2), (0, 1, 3), (1, 2, 3)], 0) == [0]
    # dependent triple dropped
    b = FieldMatrix(101, ((1, 1, 0), (0, 0, 1), (0, 0, 0)))
    assert representative_family(b, [(0, 1, 2)], 0) == []


def test_family_size_bound_at_ell_one():
    rng = np.random.default_rng(3)
    h = random_digraph(rng, 8, 0.3)
    fam = [set(t) for size in (1, 2, 3) for t in combinations(range(8), size)]
    out = representative_triples(h, {0, 1}, 1, fam, seed=3)
    assert len(out) <= comb(6, 3) == 20
    assert set(out) <= set(canonical_triples(fam))


def test_single_triple_survives_iff_reachable():
    # 5-vertex digraph: 0 -> 1 -> 2, 0 -> 3, 4 isolated; S_H = {0}
    h = DirectedGraph(range(5), [(0, 1), (1, 2), (0, 3)])
    assert representative_triples(h, {0}, 0, [{1, 2, 3}], seed=0) == [frozenset({1, 2, 3})]
    assert representative_triples(h, {0}, 0, [{2, 4}], seed=0) == []
    assert representative_triples(h, {0}, 0, [], seed=0) == []


@given(digraphs(max_n=6), st.data())
def test_reachability_equals_linkage_of_lift(h, data):
    verts = sorted(h)
    s_h = data.draw(st.sets(st.sampled_from(verts), min_size=1, max_size=2))
    ell = data.draw(st.integers(0, 2))
    inst = build_gammoid_digraph(h, s_h, ell)
    for size in range(ell + 1):
        for xs in combinations(verts, size):
            if not is_closest(h, s_h, xs):
                continue
            reach = reachable_set(h, s_h, xs)
            i_set = inst.copies(xs)
            for t in canonical_triples(combinations(verts, 2)) + canonical_triples(combinations(verts, 1)):
                y = set(inst.lift(t))
                linked = not (y & i_set) and is_linked(inst.d, inst.s, y | i_set)
                assert (t <= reach) == linked


@given(digraphs(max_n=6), st.integers(0, 2**32 - 1), st.data())
def test_representative_triples_end_to_end(h, seed, data):
    verts = sorted(h)
    s_h = data.draw(st.sets(st.sampled_from(verts), max_size=2))
    ell = data.draw(st.integers(0, 2))
    all_t = canonical_triples(t for size in (1, 2, 3) for t in combinations(verts, size))
    fam = data.draw(st.lists(st.sampled_from(all_t), unique=True, max_size=20))
    out = representative_triples(h, s_h, ell, fam, seed=seed)
    assert len(out) <= comb(3 * ell + 3, 3)
    assert repset_bruteforce_check(h, s_h, ell, fam, out)


def test_error_bound_shape():
    assert error_bound(5, 1, 0) == 0
    b = error_bound(5, 1, 10)
    assert 0 < b < 1e-15
    assert error_bound(5, 2, 10) > b
