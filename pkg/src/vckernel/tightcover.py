"""Covers of factor-critical components: tight covers, forced vertices, critical sets.

The exact cover search branches on the smallest vertex that still has an
uncovered edge (take it, or take all of its neighbours) and prunes with the
LP bound of the residual graph.  Taking the vertex first makes the first
optimum found the lexicographically smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .decomposition import exposable_vertices, lp_value
from .graph import GraphError, UndirectedGraph


def is_factor_critical(g: UndirectedGraph) -> bool:
    """Every ``G - v`` has a perfect matching (so ``|V|`` is odd and every vertex is exposable)."""
    if g.n % 2 == 0:
        return False
    return exposable_vertices(g) == g.vertices


Residual = Mapping[int, frozenset[int]]


def _drop(adj: Residual, gone: Iterable[int]) -> dict[int, frozenset[int]]:
    gone = frozenset(gone)
    out = {}
    for v, nb in adj.items():
        if v in gone:
            continue
        nb = nb - gone
        if nb:
            out[v] = nb
    return out


def _greedy_matching_size(adj: Residual) -> int:
    used: set[int] = set()
    size = 0
    for v, nb in adj.items():
        if v in used:
            continue
        for w in nb:
            if w not in used:
                used.update((v, w))
                size += 1
                break
    return size


def _lower_bound(adj: Residual, slack: int) -> int:
    """A lower bound on the cover size of ``adj``; stops early once it exceeds ``slack``."""
    mm = _greedy_matching_size(adj)
    if mm > slack:
        return mm
    half, _ = lp_value(UndirectedGraph._from_adj(adj))
    return max(mm, (half + 1) // 2)


def _min_cover(adj: Residual, limit: int) -> list[int] | None:
    """Lexicographically smallest minimum cover of ``adj`` if it has at most ``limit`` vertices."""
    best: list[list[int] | None] = [None]
    bound = [limit + 1]  # only strictly smaller covers are accepted

    def search(res: Residual, chosen: list[int]) -> None:
        if not res:
            if len(chosen) < bound[0]:
                best[0] = chosen
                bound[0] = len(chosen)
            return
        room = bound[0] - 1 - len(chosen)
        if room < 0 or _lower_bound(res, room) > room:
            return
        v = min(res)
        search(_drop(res, (v,)), chosen + [v])
        nv = res[v]
        if len(chosen) + len(nv) < bound[0]:
            search(_drop(res, nv), sorted(chosen + list(nv)))

    search({v: nb for v, nb in adj.items() if nb}, [])
    return sorted(best[0]) if best[0] is not None else None


def min_vertex_cover(g: UndirectedGraph) -> frozenset[int]:
    """Exact minimum vertex cover (lexicographically smallest), by branch and bound."""
    cover = _min_cover({v: g.neighbors(v) for v in g}, g.n)
    assert cover is not None
    return frozenset(cover)


def vc_with_forced(
    gc: UndirectedGraph, z: Iterable[int], budget: int
) -> frozenset[int] | None:
    """A vertex cover of ``gc`` containing ``z`` with at most ``budget`` vertices, if one exists.

    The answer is ``z`` plus the lexicographically smallest minimum cover of ``gc - z``.
    """
    z = frozenset(z)
    if not z <= gc.vertices:
        raise GraphError(f"forced vertices {sorted(z - gc.vertices)} are not in the graph")
    if budget < len(z):
        return None
    rest = gc.delete_vertices(z)
    found = _min_cover({v: rest.neighbors(v) for v in rest}, budget - len(z))
    return None if found is None else z | frozenset(found)


def tight_size(gc: UndirectedGraph) -> int:
    return (gc.n + 1) // 2


def has_tight_vc(gc: UndirectedGraph) -> bool:
    return vc_with_forced(gc, (), tight_size(gc)) is not None


@dataclass(frozen=True)
class TightCoverQuery:
    component: frozenset[int]
    forced: frozenset[int]

    @property
    def budget(self) -> int:
        return (len(self.component) + 1) // 2 - len(self.forced)

    def run(self, g: UndirectedGraph) -> frozenset[int] | None:
        """Cover of ``G[component]`` of tight size containing ``forced``, if any."""
        if len(self.forced) > 3 or not self.forced <= self.component:
            raise GraphError("forced set must be a subset of the component with at most 3 vertices")
        return vc_with_forced(g.induced(self.component), self.forced, (len(self.component) + 1) // 2)


# -- exhaustive enumeration over bitmasks (small graphs only) ---------------------

def _masks_covering(order: list[int], g: UndirectedGraph) -> np.ndarray:
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    masks = np.arange(1 << n, dtype=np.uint32)
    ok = np.ones(1 << n, dtype=bool)
    for u, v in g.edges:
        ok &= ((masks >> pos[u]) | (masks >> pos[v])) & 1 == 1
    return ok


def good_masks(gc: UndirectedGraph) -> tuple[list[int], np.ndarray]:
    """Indicator over all vertex subsets: contained in some tight cover."""
    order = sorted(gc)
    n = len(order)
    if n > 22:
        raise ValueError(f"exhaustive enumeration refused for {n} vertices")
    masks = np.arange(1 << n, dtype=np.uint32)
    good = _masks_covering(order, gc) & (np.bitwise_count(masks) == tight_size(gc))
    # downward closure, one coordinate at a time
    for i in range(n):
        view = good.reshape(-1, 2, 1 << i)
        view[:, 0, :] |= view[:, 1, :]
    return order, good


def critical_sets(gc: UndirectedGraph, max_size: int | None = 3) -> list[frozenset[int]]:
    """Minimal sets contained in no tight cover, of size at most ``max_size`` (``None``: any size).

    Exhaustive over all ``2^n`` subsets; meant for small graphs and property checks.
    """
    order, good = good_masks(gc)
    n = len(order)
    minimal = ~good
    for i in range(n):
        view = minimal.reshape(-1, 2, 1 << i)
        gview = good.reshape(-1, 2, 1 << i)
        view[:, 1, :] &= gview[:, 0, :]
    idx = np.nonzero(minimal)[0]
    sizes = np.bitwise_count(idx.astype(np.uint32))
    if max_size is not None:
        idx = idx[sizes <= max_size]
    out = [frozenset(order[i] for i in range(n) if (mask >> i) & 1) for mask in idx.tolist()]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def minimal_bad_subsets(
    gc: UndirectedGraph, candidates: Iterable[int], max_size: int = 3,
    known_covers: list[frozenset[int]] | None = None,
) -> list[frozenset[int]]:
    """Inclusion-minimal ``Z`` within ``candidates`` (``|Z| <= max_size``) lying in no tight cover.

    Uses the exact search, not enumeration, so it scales to larger components.
    ``known_covers`` caches tight covers found along the way.
    """
    covers = known_covers if known_covers is not None else []
    k = tight_size(gc)
    pool = sorted(set(candidates))
    bad: list[frozenset[int]] = []
    for size in range(0, max_size + 1):
        for z in combinations(pool, size):
            zs = frozenset(z)
            if any(b <= zs for b in bad) or any(zs <= c for c in covers):
                continue
            cover = vc_with_forced(gc, zs, k)
            if cover is None:
                bad.append(zs)
            else:
                covers.append(cover)
    return bad
