"""Brute-force ground truth for small instances.

Nothing here shares code with the algorithms it checks beyond the graph types
(and, for closest-set enumeration, the separator test it is defined by).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .decomposition import NiceDecomposition
from .graph import DirectedGraph, UndirectedGraph, connected_components

DEFAULT_CAP = 20


class OracleRefused(RuntimeError):
    """Instance exceeds the configured brute-force cap."""


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise OracleRefused(f"{n} vertices exceed the brute-force cap of {cap}")


def _cover_masks(g: UndirectedGraph) -> tuple[list[int], np.ndarray, np.ndarray]:
    order = sorted(g)
    pos = {v: i for i, v in enumerate(order)}
    masks = np.arange(1 << len(order), dtype=np.uint32)
    ok = np.ones(masks.shape, dtype=bool)
    for u, v in g.edges:
        ok &= (((masks >> pos[u]) | (masks >> pos[v])) & 1).astype(bool)
    return order, masks[ok], np.bitwise_count(masks[ok])


def _unmask(order: list[int], mask: int) -> frozenset[int]:
    return frozenset(v for i, v in enumerate(order) if (mask >> i) & 1)


@dataclass(frozen=True)
class OracleReport:
    min_vc_size: int
    witnesses: tuple[frozenset[int], ...]
    dominant: tuple[frozenset[int], ...] = ()


def min_vc_bruteforce(
    g: UndirectedGraph, all_witnesses: bool = True, cap: int = DEFAULT_CAP
) -> OracleReport:
    """Minimum vertex cover size by enumerating every subset; optionally every optimum."""
    _check_cap(g.n, cap)
    order, covers, sizes = _cover_masks(g)
    best = int(sizes.min())
    chosen = covers[sizes == best]
    if not all_witnesses:
        chosen = chosen[:1]
    wit = sorted((_unmask(order, int(m)) for m in chosen), key=sorted)
    return OracleReport(best, tuple(wit))


def vc_size(g: UndirectedGraph, cap: int = DEFAULT_CAP) -> int:
    return min_vc_bruteforce(g, all_witnesses=False, cap=cap).min_vc_size


def vc_size_by_components(g: UndirectedGraph, cap: int = DEFAULT_CAP) -> int:
    """Cover size is additive over components, so only each component must fit under the cap."""
    return sum(vc_size(g.induced(c), cap) for c in connected_components(g))


def dominant_vcs(
    g: UndirectedGraph, dec: NiceDecomposition | Iterable[int], cap: int = DEFAULT_CAP
) -> list[frozenset[int]]:
    """Minimum covers with the fewest vertices in ``D``."""
    d = frozenset(dec.d if isinstance(dec, NiceDecomposition) else dec)
    report = min_vc_bruteforce(g, cap=cap)
    least = min(len(x & d) for x in report.witnesses)
    return [x for x in report.witnesses if len(x & d) == least]


def all_vertex_covers(g: UndirectedGraph, size: int | None = None, cap: int = DEFAULT_CAP) -> list[frozenset[int]]:
    _check_cap(g.n, cap)
    order, covers, sizes = _cover_masks(g)
    if size is not None:
        covers = covers[sizes == size]
    return [_unmask(order, int(m)) for m in covers]


def check_equivalence(
    g: UndirectedGraph, k: int, g2: UndirectedGraph, k2: int, cap: int = DEFAULT_CAP
) -> bool:
    return (vc_size(g, cap) <= k) == (vc_size(g2, cap) <= k2)


def max_matching_bruteforce(g: UndirectedGraph) -> int:
    """Largest set of pairwise disjoint edges, by memoised recursion over vertex subsets.

    The lowest remaining vertex is either left unmatched or matched to one of
    its remaining neighbours.
    """
    order = sorted(g)
    pos = {v: i for i, v in enumerate(order)}
    nbr = [sum(1 << pos[w] for w in g.neighbors(v)) for v in order]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        out = best(rest)
        cand = nbr[i] & rest
        while cand:
            j = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            out = max(out, 1 + best(rest & ~(1 << j)))
        return out

    return best((1 << len(order)) - 1)


def lp_bruteforce(g: UndirectedGraph, cap: int = 12) -> int:
    """Fractional cover optimum over ``{0, 1/2, 1}^V``, in half-units."""
    _check_cap(g.n, cap)
    order = sorted(g)
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    if n == 0:
        return 0
    grid = np.array(list(product((0, 1, 2), repeat=n)), dtype=np.int8)
    ok = np.ones(len(grid), dtype=bool)
    for u, v in g.edges:
        ok &= grid[:, pos[u]] + grid[:, pos[v]] >= 2
    return int(grid[ok].sum(axis=1).min())


def exposable_bruteforce(g: UndirectedGraph) -> frozenset[int]:
    """Vertices whose deletion keeps the maximum matching size."""
    mm = max_matching_bruteforce(g)
    return frozenset(v for v in g if max_matching_bruteforce(g.delete_vertices([v])) == mm)


# -- digraph oracles --------------------------------------------------------------

def _simple_paths(h: DirectedGraph, s: Iterable, t: Iterable) -> list[frozenset]:
    t = set(t)
    out = []

    def walk(v, seen: list) -> None:
        if v in t:
            out.append(frozenset(seen))
        for w in h.successors(v):
            if w not in seen:
                walk(w, seen + [w])

    for v in s:
        if v in h:
            walk(v, [v])
    return out


def path_packing_bruteforce(h: DirectedGraph, s: Iterable, t: Iterable) -> int:
    """Maximum number of pairwise vertex-disjoint ``S -> T`` paths, by exhaustive search.

    Only minimal paths matter (no interior ``T``-vertex), and a path is a vertex set here.
    """
    s, t = set(s), set(t)
    paths = [p for p in _simple_paths(h, s, t) if len(p & t) == 1 and len(p & s) >= 1]
    paths = sorted(set(paths), key=lambda p: (len(p), sorted(map(repr, p))))

    def pack(i: int, used: frozenset) -> int:
        if i == len(paths):
            return 0
        rest = pack(i + 1, used)
        if paths[i] & used:
            return rest
        return max(rest, 1 + pack(i + 1, used | paths[i]))

    return pack(0, frozenset())


def separators_bruteforce(h: DirectedGraph, s: Iterable, t: Iterable, max_size: int | None = None) -> list[frozenset]:
    """Every ``S,T``-separator (of size at most ``max_size``), enumerated by subset size."""
    s, t = set(s), set(t)
    paths = _simple_paths(h, s, t)
    verts = sorted(h, key=repr)
    top = len(verts) if max_size is None else max_size
    out = []
    for size in range(top + 1):
        for xs in combinations(verts, size):
            x = frozenset(xs)
            if all(p & x for p in paths):
                out.append(x)
    return out


def is_closest_bruteforce(h: DirectedGraph, s: Iterable, t: Iterable) -> bool:
    t = frozenset(t)
    seps = separators_bruteforce(h, s, t, max_size=len(t))
    return t in seps and all(x == t for x in seps)


def repset_bruteforce_check(
    h: DirectedGraph, s_h: Iterable[int], ell: int, family: Iterable[Iterable[int]],
    t_star: Iterable[Iterable[int]], cap: int = 10,
) -> bool:
    """Every closest ``X_H`` (``|X_H| <= ell``) that leaves some member fully reachable
    also leaves some member of ``t_star`` fully reachable."""
    from .digraph import is_closest, reachable_set

    _check_cap(len(h), cap)
    if ell > 3:
        raise OracleRefused(f"ell = {ell} exceeds the enumeration cap of 3")
    s_h = frozenset(s_h)
    family = [frozenset(t) for t in family]
    t_star = [frozenset(t) for t in t_star]
    verts = sorted(h)
    for size in range(ell + 1):
        for xs in combinations(verts, size):
            if not is_closest(h, s_h, xs):
                continue
            reach = reachable_set(h, s_h, xs)
            if any(t <= reach for t in family) and not any(t <= reach for t in t_star):
                return False
    return True


def linked_bruteforce(h: DirectedGraph, s: Iterable, t: Sequence) -> bool:
    t = set(t)
    return path_packing_bruteforce(h, s, t) == len(t)
