"""LP relaxation, LP-based preprocessing and (nice) Gallai-Edmonds decompositions.

Fractional values are stored in half-units: 0, 1, 2 stand for 0, 1/2, 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .graph import GraphError, UndirectedGraph, connected_components
from .matching import (
    Matching,
    augment_to_maximum,
    hall_match_singletons,
    matching_after_deleting,
    maximum_matching,
)


class DecompositionError(ValueError):
    """A decomposition invariant does not hold; ``invariant`` names which one."""

    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(f"{invariant}: {detail}" if detail else invariant)
        self.invariant = invariant


@dataclass(frozen=True)
class FractionalCover:
    values: Mapping[int, int]
    cost: int  # half-units

    def value(self, v: int) -> float:
        return self.values[v] / 2

    def is_feasible(self, g: UndirectedGraph) -> bool:
        return all(self.values[u] + self.values[v] >= 2 for u, v in g.edges)


def lp_value(g: UndirectedGraph) -> tuple[int, FractionalCover]:
    """Optimal half-integral fractional vertex cover; cost returned in half-units.

    Uses the bipartite double cover: ``2 LP(G)`` equals its maximum matching size,
    and a Koenig minimum vertex cover of it yields the optimal half-integral point.
    """
    verts = list(g)
    if not verts:
        return 0, FractionalCover({}, 0)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    rows, cols = [], []
    for u, v in g.edges:
        iu, iv = index[u], index[v]
        rows += [iu, iv]
        cols += [iv, iu]
    if not rows:
        return 0, FractionalCover({v: 0 for v in verts}, 0)
    adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    right_of = maximum_bipartite_matching(adj, perm_type="column")  # row -> column
    left_of = np.full(n, -1)
    for r, c in enumerate(right_of):
        if c >= 0:
            left_of[c] = r
    # Koenig: alternate from exposed left copies.
    z_left = np.zeros(n, dtype=bool)
    z_right = np.zeros(n, dtype=bool)
    queue = deque(i for i in range(n) if right_of[i] < 0)
    for i in queue:
        z_left[i] = True
    indptr, indices = adj.indptr, adj.indices
    while queue:
        i = queue.popleft()
        for j in indices[indptr[i]:indptr[i + 1]]:
            if not z_right[j]:
                z_right[j] = True
                r = left_of[j]
                if r >= 0 and not z_left[r]:
                    z_left[r] = True
                    queue.append(r)
    half = (~z_left).astype(int) + z_right.astype(int)
    values = {v: int(half[index[v]]) for v in verts}
    return int(half.sum()), FractionalCover(values, int(half.sum()))


class NTReduction(NamedTuple):
    graph: UndirectedGraph
    k: int
    forced_in: frozenset[int]
    removed_out: frozenset[int]

    @property
    def definite_no(self) -> bool:
        return self.k < 0


def nt_reduce(g: UndirectedGraph, k: int) -> NTReduction:
    """Repeatedly drop the 1-valued vertices into the solution and the 0-valued ones out.

    Stops at an all-half optimum, which certifies ``LP(G') = |V(G')|/2``.
    """
    forced: set[int] = set()
    removed: set[int] = set()
    cur = g
    while cur.n:
        _, x = lp_value(cur)
        ones = {v for v, val in x.values.items() if val == 2}
        zeros = {v for v, val in x.values.items() if val == 0}
        if not ones and not zeros:
            break
        forced |= ones
        removed |= zeros
        cur = cur.delete_vertices(ones | zeros)
    return NTReduction(cur, k - len(forced), frozenset(forced), frozenset(removed))


class GallaiEdmonds(NamedTuple):
    a: frozenset[int]
    b: frozenset[int]
    d: frozenset[int]


def exposable_vertices(g: UndirectedGraph, m: Matching | None = None) -> frozenset[int]:
    """Vertices left exposed by some maximum matching (one matching call per vertex)."""
    m = m if m is not None else maximum_matching(g)
    size = len(m)
    return frozenset(
        v for v in g
        if m.mate(v) is None or len(matching_after_deleting(g, m, v)) == size
    )


def gallai_edmonds(g: UndirectedGraph) -> GallaiEdmonds:
    d = exposable_vertices(g)
    a = g.neighborhood(d)
    return GallaiEdmonds(a, g.vertices - a - d, d)


def _canon(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(sets, key=min))


@dataclass(frozen=True)
class NiceDecomposition:
    a: frozenset[int]
    b: frozenset[int]
    d: frozenset[int]
    m: Matching
    a1: frozenset[int]
    a3: frozenset[int]
    c1: tuple[frozenset[int], ...]
    c1hat: tuple[frozenset[int], ...]
    c3: tuple[frozenset[int], ...]
    c3hat: tuple[frozenset[int], ...]
    # D-vertex -> index of its G[D] component, for quick lookups
    comp_of: Mapping[int, frozenset[int]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def components(self) -> tuple[frozenset[int], ...]:
        return _canon(self.c1 + self.c1hat + self.c3 + self.c3hat)


class Classification(NamedTuple):
    a1: frozenset[int]
    a3: frozenset[int]
    c1: tuple[frozenset[int], ...]
    c1hat: tuple[frozenset[int], ...]
    c3: tuple[frozenset[int], ...]
    c3hat: tuple[frozenset[int], ...]


def classify_components(
    g: UndirectedGraph, a: Iterable[int], d: Iterable[int], m: Matching
) -> Classification:
    """Split the components of ``G[D]`` into matched/unmatched singletons/non-singletons."""
    a = frozenset(a)
    comps = connected_components(g.induced(d))
    a1, a3 = set(), set()
    c1, c1hat, c3, c3hat = [], [], [], []
    for comp in comps:
        matched_to = [m.mate(v) for v in comp if m.mate(v) in a]
        single = len(comp) == 1
        if matched_to:
            (a1 if single else a3).update(matched_to)
            (c1 if single else c3).append(comp)
        else:
            (c1hat if single else c3hat).append(comp)
    return Classification(frozenset(a1), frozenset(a3), tuple(c1), tuple(c1hat), tuple(c3), tuple(c3hat))


def _assemble(a, b, d, m: Matching, cls: Classification) -> NiceDecomposition:
    comp_of = {v: comp for comp in cls.c1 + cls.c1hat + cls.c3 + cls.c3hat for v in comp}
    return NiceDecomposition(
        frozenset(a), frozenset(b), frozenset(d), m, *cls, comp_of=comp_of
    )


def nice_decomposition(g: UndirectedGraph) -> NiceDecomposition:
    """Nice decomposition of a graph with ``LP(G) = |V|/2``.

    Singleton components of ``G[D]`` are first matched into ``A`` (Hall), then the
    matching is grown to a maximum one without exposing them.  A violated
    precondition surfaces as :class:`~vckernel.matching.HallViolation`.
    """
    a, b, d = gallai_edmonds(g)
    gd = g.induced(d)
    singletons = [v for v in d if gd.degree(v) == 0]
    m1 = hall_match_singletons(g, singletons)
    m = augment_to_maximum(g, m1)
    dec = _assemble(a, b, d, m, classify_components(g, a, d, m))
    if dec.c1hat:  # cannot happen once Hall succeeded
        raise DecompositionError("no_unmatched_singletons", f"{list(map(sorted, dec.c1hat))}")
    return dec


def decomposition_from_parts(
    g: UndirectedGraph, a: Iterable[int], b: Iterable[int], d: Iterable[int], m: Matching
) -> NiceDecomposition:
    """Wrap externally supplied ``(A, B, D, M)``; pair with :func:`decomposition_violations`."""
    return _assemble(a, b, d, m, classify_components(g, a, d, m))


def vc_lower_bound(dec: NiceDecomposition) -> int:
    return len(dec.m) + len(dec.c3hat)


def inherit_after_delete(dec: NiceDecomposition, c: Iterable[int]) -> NiceDecomposition:
    """Decomposition of ``G - C`` for an unmatched component ``C`` of ``G[D]``."""
    c = frozenset(c)
    if c in dec.c3hat:
        c3hat = tuple(x for x in dec.c3hat if x != c)
        c1hat = dec.c1hat
    elif c in dec.c1hat:
        c1hat = tuple(x for x in dec.c1hat if x != c)
        c3hat = dec.c3hat
    else:
        raise DecompositionError("unmatched_component", f"{sorted(c)} is not an unmatched component")
    m = Matching({u: v for u, v in dec.m.partner.items() if u not in c})
    comp_of = {v: comp for v, comp in dec.comp_of.items() if v not in c}
    return NiceDecomposition(
        dec.a, dec.b, dec.d - c, m, dec.a1, dec.a3, dec.c1, c1hat, dec.c3, c3hat, comp_of=comp_of
    )


def decomposition_violations(
    g: UndirectedGraph, dec: NiceDecomposition, nice: bool = True
) -> list[str]:
    """Names of the decomposition invariants that fail (empty list when valid)."""
    from .tightcover import is_factor_critical

    bad: list[str] = []
    a, b, d, m = dec.a, dec.b, dec.d, dec.m
    if (a & b) or (a & d) or (b & d) or (a | b | d) != g.vertices:
        return ["partition"]
    if not m.is_valid_for(g):
        return ["matching_valid"]
    if len(m) != len(maximum_matching(g)):
        bad.append("m_maximum")
    if g.neighborhood(d) != a:
        bad.append("a_is_neighborhood_of_d")
    comps = connected_components(g.induced(d))
    if not all(is_factor_critical(g.induced(c)) for c in comps):
        bad.append("d_components_factor_critical")
    if any(m.mate(v) not in b for v in b):
        bad.append("m_perfect_on_b")
    if any(len(m.restrict(c)) != (len(c) - 1) // 2 for c in comps):
        bad.append("m_near_perfect_on_components")
    if any(m.mate(v) not in d for v in a):
        bad.append("a_matched_into_d")
    cls = classify_components(g, a, d, m)
    if (dec.a1, dec.a3, set(dec.c1), set(dec.c1hat), set(dec.c3), set(dec.c3hat)) != (
        cls.a1, cls.a3, set(cls.c1), set(cls.c1hat), set(cls.c3), set(cls.c3hat)
    ):
        bad.append("classification")
    if (dec.a1 | dec.a3) != a or (dec.a1 & dec.a3):
        bad.append("a1_a3_split")
    if nice and dec.c1hat:
        bad.append("no_unmatched_singletons")
    return bad


def check_decomposition(g: UndirectedGraph, dec: NiceDecomposition, nice: bool = True) -> None:
    bad = decomposition_violations(g, dec, nice)
    if bad:
        raise DecompositionError(bad[0], ", ".join(bad))
