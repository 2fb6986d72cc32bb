"""Seeded instance corpora and hypothesis strategies shared by the test modules."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from vckernel.decomposition import nice_decomposition, nt_reduce
from vckernel.generators import connected_gnp, decomposable, factor_critical_chords
from vckernel.graph import DirectedGraph, UndirectedGraph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> UndirectedGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return UndirectedGraph(range(n), chosen)


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 7) -> DirectedGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return DirectedGraph(range(n), chosen)


@st.composite
def factor_critical_graphs(draw, max_n: int = 11) -> UndirectedGraph:
    n = draw(st.sampled_from([v for v in range(3, max_n + 1, 2)]))
    extra = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**32 - 1))
    return factor_critical_chords(n, extra, seed)


def random_digraph(rng: np.random.Generator, n: int, p: float) -> DirectedGraph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return DirectedGraph(range(n), arcs)


def planted_instances(count: int, max_n: int, seed: int = 0, need_a: bool = True, **kw):
    """Seeded planted-shape graphs (after LP preprocessing) with at most ``max_n`` vertices.

    Yields ``(seed, g, g1, dec)`` with ``g1`` the preprocessed graph.
    """
    params = dict(n_unmatched=2, n_a=2, n_b_pairs=1, p_cross=0.6, sizes=(3, 5), clique_prob=0.1)
    params.update(kw)
    found = 0
    s = seed
    while found < count:
        s += 1
        g = decomposable(s, **params)
        if g.n > max_n:
            continue
        nt = nt_reduce(g, 0)
        if nt.graph.n == 0:
            continue
        dec = nice_decomposition(nt.graph)
        if need_a and not dec.a:
            continue
        found += 1
        yield s, g, nt.graph, dec


def random_connected(count: int, max_n: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        p = float(rng.uniform(0.05, 0.5))
        yield connected_gnp(n, p, rng)
