"""The auxiliary digraph on ``A``, overpay sets, reachability and vertex separators.

Separators are computed by max-flow on the vertex-split network: each vertex
``v`` becomes ``v_in -> v_out`` with capacity one, every other arc is uncapacitated.
A separator may contain vertices of ``S`` and ``T``; ``S & T`` is always in it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .decomposition import NiceDecomposition
from .graph import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class AuxDigraph:
    h: DirectedGraph
    witness: Mapping[tuple[int, int], int]

    def dump(self) -> str:
        """Directed DIMACS-like text: ``a u v w`` per arc, ``w`` the witness in ``D``."""
        lines = [f"p arc {len(self.h)} {len(self.witness)}"]
        lines += [f"a {u} {v} {self.witness[u, v]}" for u, v in self.h.arcs]
        return "\n".join(lines) + "\n"


def build_h(g: UndirectedGraph, dec: NiceDecomposition) -> AuxDigraph:
    """Arc ``(u, v)`` between ``A``-vertices when ``u`` is adjacent to ``M(v)`` by a non-matching edge."""
    witness: dict[tuple[int, int], int] = {}
    for v in sorted(dec.a):
        w = dec.m.mate(v)
        # M(v) is in D and matched to v, so {u, w} is outside M for every other u
        for u in sorted(g.neighbors(w) & dec.a):
            if u != v:
                witness[u, v] = w
    return AuxDigraph(DirectedGraph(sorted(dec.a), witness), witness)


def compute_xop(dec: NiceDecomposition, x: Iterable[int]) -> frozenset[int]:
    x = frozenset(x)
    from_a1 = {v for v in dec.a1 & x if dec.m.mate(v) in x}
    return frozenset(from_a1) | (dec.a3 & x)


def _digraph(h: AuxDigraph | DirectedGraph) -> DirectedGraph:
    return h.h if isinstance(h, AuxDigraph) else h


def reachable_set(
    h: AuxDigraph | DirectedGraph, sources: Iterable[Hashable], removed: Iterable[Hashable] = ()
) -> frozenset:
    """Vertices reachable in ``H - removed`` from the surviving sources (sources included)."""
    d = _digraph(h)
    removed = set(removed)
    seen = {s for s in sources if s in d and s not in removed}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in d.successors(v):
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


class _SplitFlow:
    """Max-flow on the vertex-split network of a digraph (BFS augmenting paths)."""

    def __init__(self, d: DirectedGraph, s: Iterable, t: Iterable):
        self.order = sorted(d, key=repr) if not all(isinstance(v, int) for v in d) else sorted(d)
        idx = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        self.idx = idx
        self.source, self.sink = 2 * n, 2 * n + 1
        big = n + 1
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(2 * n + 2)]
        for v, i in idx.items():
            self._arc(2 * i, 2 * i + 1, 1)
        for u, v in d.arcs:
            self._arc(2 * idx[u] + 1, 2 * idx[v], big)
        for v in set(s):
            if v in idx:
                self._arc(self.source, 2 * idx[v], big)
        for v in set(t):
            if v in idx:
                self._arc(2 * idx[v] + 1, self.sink, big)
        self.value = self._run()

    def _arc(self, a: int, b: int, c: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def _run(self) -> int:
        flow = 0
        while True:
            prev = {self.source: -1}
            queue = deque([self.source])
            while queue and self.sink not in prev:
                x = queue.popleft()
                for e in self.out[x]:
                    y = self.head[e]
                    if self.cap[e] > 0 and y not in prev:
                        prev[y] = e
                        queue.append(y)
            if self.sink not in prev:
                return flow
            # every augmenting path crosses a unit vertex arc, so push one unit
            y = self.sink
            while y != self.source:
                e = prev[y]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                y = self.head[e ^ 1]
            flow += 1

    def _closure(self, start: int, forward: bool) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for e in self.out[x]:
                y = self.head[e]
                # forward: residual arc x->y; backward: residual arc y->x
                residual = self.cap[e] if forward else self.cap[e ^ 1]
                if residual > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def source_side_cut(self) -> frozenset:
        r = self._closure(self.source, True)
        return frozenset(v for v, i in self.idx.items() if 2 * i in r and 2 * i + 1 not in r)

    def sink_side_cut(self) -> frozenset:
        r = self._closure(self.sink, False)
        return frozenset(v for v, i in self.idx.items() if 2 * i + 1 in r and 2 * i not in r)


def max_disjoint_paths(h: AuxDigraph | DirectedGraph, s: Iterable, t: Iterable) -> int:
    """Maximum number of fully vertex-disjoint ``S -> T`` paths."""
    return _SplitFlow(_digraph(h), s, t).value


def is_linked(h: AuxDigraph | DirectedGraph, s: Iterable, t: Iterable) -> bool:
    """``T`` is linked to ``S``: ``|T|`` disjoint paths from ``S`` ending in distinct ``T``-vertices."""
    t = set(t)
    return max_disjoint_paths(h, s, t) == len(t)


def min_vertex_separator(h: AuxDigraph | DirectedGraph, s: Iterable, t: Iterable) -> frozenset:
    """The minimum ``S,T``-separator closest to ``S``."""
    return _SplitFlow(_digraph(h), s, t).source_side_cut()


def min_vertex_separator_sink_side(h: AuxDigraph | DirectedGraph, s: Iterable, t: Iterable) -> frozenset:
    """The minimum ``S,T``-separator closest to ``T``."""
    return _SplitFlow(_digraph(h), s, t).sink_side_cut()


def is_closest(h: AuxDigraph | DirectedGraph, s: Iterable, t: Iterable) -> bool:
    """``T`` is the unique minimum ``S,T``-separator."""
    t = frozenset(t)
    flow = _SplitFlow(_digraph(h), s, t)
    return flow.value == len(t) and flow.source_side_cut() == t and flow.sink_side_cut() == t
