"""Maximum matching in general graphs via Edmonds' blossom contraction.

The search is seeded: ``augment_to_maximum`` grows a given matching along
augmenting paths only, so no previously matched vertex becomes exposed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import GraphError, UndirectedGraph


class HallViolation(Exception):
    """No matching saturates the requested side; ``witness`` has ``|N(witness)| < |witness|``."""

    def __init__(self, witness: frozenset[int], neighborhood: frozenset[int]):
        super().__init__(
            f"Hall condition fails: {len(witness)} vertices {sorted(witness)} "
            f"have only {len(neighborhood)} neighbours"
        )
        self.witness = witness
        self.neighborhood = neighborhood


@dataclass(frozen=True)
class Matching:
    """A matching stored as a symmetric partner map."""

    partner: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Matching":
        partner: dict[int, int] = {}
        for u, v in edges:
            if u == v or u in partner or v in partner:
                raise GraphError(f"edge ({u}, {v}) conflicts with the matching")
            partner[u] = v
            partner[v] = u
        return cls(partner)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.partner.items() if u < v)

    @property
    def saturated(self) -> frozenset[int]:
        return frozenset(self.partner)

    def mate(self, v: int) -> int | None:
        return self.partner.get(v)

    def __contains__(self, edge: object) -> bool:
        u, v = edge  # type: ignore[misc]
        return self.partner.get(u) == v

    def __len__(self) -> int:
        return len(self.partner) // 2

    def restrict(self, vertices: Iterable[int]) -> "Matching":
        """Edges of the matching with both endpoints in ``vertices``."""
        keep = set(vertices)
        return Matching({u: v for u, v in self.partner.items() if u in keep and v in keep})

    def is_valid_for(self, g: UndirectedGraph) -> bool:
        return all(
            self.partner.get(v) == u and g.has_edge(u, v) for u, v in self.partner.items()
        )


def _search(adj: list, match: list[int], root: int, live: list[int]) -> tuple[int, list[int]]:
    """BFS for an augmenting path from exposed ``root``.

    Returns the far end of the path (or -1) and the parent links to follow.
    """
    size = len(match)
    used = [False] * size
    parent = [-1] * size
    base = list(range(size))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * size
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * size
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in live:
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def _augment(match: list[int], end: int, parent: list[int]) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        nxt = match[pv]
        match[v] = pv
        match[pv] = v
        v = nxt


def _arrays(g: UndirectedGraph, m0: Matching) -> tuple[list, list[int], list[int]]:
    size = g.id_bound
    adj: list = [()] * size
    for v in g:
        adj[v] = sorted(g.neighbors(v))
    match = [-1] * size
    for u, v in m0.partner.items():
        match[u] = v
    return adj, match, list(g)


def _to_matching(match: list[int]) -> Matching:
    return Matching({v: w for v, w in enumerate(match) if w != -1})


def augment_to_maximum(g: UndirectedGraph, m0: Matching | None = None) -> Matching:
    """Grow ``m0`` along augmenting paths until it is a maximum matching of ``g``.

    Every vertex saturated by ``m0`` stays saturated.
    """
    m0 = m0 if m0 is not None else Matching()
    if not m0.is_valid_for(g):
        raise GraphError("initial matching is not a matching of the graph")
    adj, match, live = _arrays(g, m0)
    # A root with no augmenting path never gains one later, so one pass suffices.
    for root in live:
        if match[root] != -1 or not adj[root]:
            continue
        end, parent = _search(adj, match, root, live)
        if end != -1:
            _augment(match, end, parent)
    return _to_matching(match)


def greedy_matching(g: UndirectedGraph) -> Matching:
    partner: dict[int, int] = {}
    for u, v in g.edges:
        if u not in partner and v not in partner:
            partner[u] = v
            partner[v] = u
    return Matching(partner)


def maximum_matching(g: UndirectedGraph) -> Matching:
    return augment_to_maximum(g, greedy_matching(g))


def matching_after_deleting(g: UndirectedGraph, m: Matching, v: int) -> Matching:
    """Maximum matching of ``g - v`` given a maximum matching ``m`` of ``g``.

    Only the mate of ``v`` can start an augmenting path in ``g - v``, so a single
    blossom search decides whether the size drops by one.
    """
    h = g.delete_vertices([v])
    u = m.mate(v)
    if u is None:
        return Matching({a: b for a, b in m.partner.items()})
    rest = Matching({a: b for a, b in m.partner.items() if a not in (u, v)})
    adj, match, live = _arrays(h, rest)
    end, parent = _search(adj, match, u, live)
    if end != -1:
        _augment(match, end, parent)
    return _to_matching(match)


def hall_match_singletons(g: UndirectedGraph, i: Iterable[int]) -> Matching:
    """Match every vertex of the independent set ``i`` into ``N(i)``.

    Raises :class:`HallViolation` carrying a set that violates Hall's condition
    when no saturating matching exists.
    """
    left = sorted(set(i))
    left_set = set(left)
    for v in left:
        if g.neighbors(v) & left_set:
            raise GraphError(f"vertex {v} has a neighbour inside the supposedly independent set")
    mate_right: dict[int, int] = {}
    mate_left: dict[int, int] = {}

    def try_augment(v: int, seen: set[int]) -> bool:
        for w in sorted(g.neighbors(v)):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate_right or try_augment(mate_right[w], seen):
                mate_right[w] = v
                mate_left[v] = w
                return True
        return False

    for v in left:
        if not try_augment(v, set()):
            # Alternating reachability from v gives a Hall-violating set.
            reach_left = {v}
            reach_right: set[int] = set()
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for w in g.neighbors(x):
                    if w not in reach_right:
                        reach_right.add(w)
                        y = mate_right.get(w)
                        if y is not None and y not in reach_left:
                            reach_left.add(y)
                            queue.append(y)
            raise HallViolation(frozenset(reach_left), frozenset(reach_right))
    return Matching.from_edges(mate_left.items())
