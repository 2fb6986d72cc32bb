"""Seeded instance families for tests, demos and the ``gen`` command."""

from __future__ import annotations

import numpy as np

from .decomposition import lp_value
from .graph import UndirectedGraph
from .matching import maximum_matching


def _rng(seed: int | np.random.Generator) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def odd_cycles(t: int, s: int) -> UndirectedGraph:
    """``t`` disjoint cycles of length ``2s + 1``."""
    if t < 0 or s < 1:
        raise ValueError("need t >= 0 and s >= 1")
    length = 2 * s + 1
    edges = [(c * length + i, c * length + (i + 1) % length) for c in range(t) for i in range(length)]
    return UndirectedGraph(range(t * length), edges)


def gnp(n: int, p: float, seed: int | np.random.Generator = 0) -> UndirectedGraph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return UndirectedGraph(range(n), zip(iu[keep].tolist(), ju[keep].tolist()))


def factor_critical_chords(n: int, extra: int, seed: int | np.random.Generator = 0) -> UndirectedGraph:
    """Odd cycle ``C_n`` plus ``extra`` distinct random chords; factor-critical by construction."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    rng = _rng(seed)
    cycle = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)}
    chords = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in cycle]
    extra = min(extra, len(chords))
    pick = rng.choice(len(chords), size=extra, replace=False) if extra else []
    return UndirectedGraph(range(n), sorted(cycle) + [chords[i] for i in sorted(pick)])


def connected_gnp(n: int, p: float, seed: int | np.random.Generator = 0) -> UndirectedGraph:
    """``G(n, p)`` plus a random spanning tree, so the result is connected."""
    rng = _rng(seed)
    g = gnp(n, p, rng)
    perm = rng.permutation(n)
    tree = [(int(perm[i]), int(perm[rng.integers(0, i)])) for i in range(1, n)]
    return UndirectedGraph(range(n), g.edges + [(min(e), max(e)) for e in tree])


def decomposable(
    seed: int | np.random.Generator = 0,
    n_unmatched: int = 2,
    n_a: int = 2,
    n_b_pairs: int = 1,
    p_cross: float = 0.4,
    sizes: tuple[int, ...] = (3, 5),
    clique_prob: float = 0.2,
) -> UndirectedGraph:
    """A graph with a planted nice-decomposition shape.

    Unmatched odd components (cycles with chords, occasionally ``K5``) hang off a
    set ``A``; every ``A``-vertex owns a private matched partner (a pendant
    vertex or another odd component); ``B`` is a set of matched pairs attached
    to ``A``.  Planted roles are only a tendency: the caller decomposes the
    result from scratch.
    """
    rng = _rng(seed)
    edges: list[tuple[int, int]] = []
    nxt = 0

    def odd_component() -> list[int]:
        nonlocal nxt
        if rng.random() < clique_prob:
            vs = list(range(nxt, nxt + 5))
            edges.extend((u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
        else:
            size = int(rng.choice(sizes))
            vs = list(range(nxt, nxt + size))
            edges.extend((vs[i], vs[(i + 1) % size]) for i in range(size))
            for i in range(size):
                for j in range(i + 2, size):
                    if (i, j) != (0, size - 1) and rng.random() < 0.2:
                        edges.append((vs[i], vs[j]))
        nxt += len(vs)
        return vs

    unmatched = [odd_component() for _ in range(n_unmatched)]
    a = list(range(nxt, nxt + n_a))
    nxt += n_a
    partners = []
    for v in a:
        if rng.random() < 0.6:
            partners.append([nxt])
            edges.append((v, nxt))
            nxt += 1
        else:
            comp = odd_component()
            edges.append((v, comp[0]))
            partners.append(comp)
    for comp in unmatched + partners:
        for v in a:
            for w in comp:
                if rng.random() < p_cross / len(comp) * 2:
                    edges.append((v, w))
    b = []
    for _ in range(n_b_pairs):
        edges.append((nxt, nxt + 1))
        b += [nxt, nxt + 1]
        nxt += 2
    for v in b:
        for u in a:
            if rng.random() < p_cross:
                edges.append((u, v))
    for i, u in enumerate(a):
        for v in a[i + 1:]:
            if rng.random() < p_cross / 2:
                edges.append((u, v))
    edges = sorted({(min(e), max(e)) for e in edges if e[0] != e[1]})
    return UndirectedGraph(range(nxt), edges)


def suggested_k(g: UndirectedGraph, ell: int = 0) -> int:
    """Budget giving parameter ``ell``: ``2 LP - MM + ell``."""
    two_lp, _ = lp_value(g)
    return two_lp - len(maximum_matching(g)) + ell


FAMILIES = {
    "odd-cycles": (odd_cycles, ("t", "s")),
    "gnp": (gnp, ("n", "p")),
    "factor-critical-chords": (factor_critical_chords, ("n", "extra")),
    "decomposable": (decomposable, ("n_unmatched", "n_a", "n_b_pairs")),
}
