"""Undirected and directed graphs with stable integer vertex ids.

Vertex ids are dense non-negative integers.  Deleting vertices never renumbers
the survivors, so sets computed on ``G`` remain valid identifiers on ``G - X``.
Graph values are treated as immutable; every operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Raised when a graph invariant or an operation precondition is violated."""


class DimacsParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class UndirectedGraph:
    """Simple undirected graph stored as an adjacency map ``vertex -> frozenset``."""

    __slots__ = ("_adj", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) has an endpoint that is not a vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(n) for v, n in sorted(adj.items())}
        self._m = sum(len(n) for n in self._adj.values()) // 2

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> "UndirectedGraph":
        g = cls.__new__(cls)
        g._adj = dict(adj)
        g._m = sum(len(n) for n in g._adj.values()) // 2
        return g

    # -- basic queries -------------------------------------------------------
    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in sorted order."""
        return [(u, v) for u in self._adj for v in sorted(self._adj[u]) if u < v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def id_bound(self) -> int:
        """One more than the largest live id (0 for the empty graph)."""
        return max(self._adj) + 1 if self._adj else 0

    def neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        """Open neighbourhood ``N(X)``: neighbours of ``X`` outside ``X``."""
        vs = set(vs)
        out: set[int] = set()
        for v in vs:
            out |= self._adj[v]
        return frozenset(out - vs)

    def is_vertex_cover(self, x: Iterable[int]) -> bool:
        x = set(x)
        return all(u in x or v in x for u, v in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges)))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------------
    def delete_vertices(self, s: Iterable[int]) -> "UndirectedGraph":
        return delete_vertices(self, s)

    def induced(self, keep: Iterable[int]) -> "UndirectedGraph":
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise GraphError(f"vertices {sorted(missing)} are not live")
        return UndirectedGraph._from_adj({v: self._adj[v] & keep for v in sorted(keep)})

    def canonical(self) -> str:
        """Text form listing vertices and sorted edges, for snapshot comparison."""
        lines = ["v " + " ".join(map(str, self._adj))]
        lines += [f"e {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


class DirectedGraph:
    """Simple digraph without self-arcs.  ``succ``/``pred`` maps are kept in sync."""

    __slots__ = ("_succ", "_pred")

    def __init__(self, vertices: Iterable = (), arcs: Iterable[tuple] = ()):
        succ: dict = {v: set() for v in vertices}
        pred: dict = {v: set() for v in succ}
        for u, v in arcs:
            if u == v:
                raise GraphError(f"self-arc at vertex {u}")
            if u not in succ or v not in succ:
                raise GraphError(f"arc ({u}, {v}) has an endpoint that is not a vertex")
            succ[u].add(v)
            pred[v].add(u)
        self._succ = {v: frozenset(s) for v, s in succ.items()}
        self._pred = {v: frozenset(s) for v, s in pred.items()}

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._succ)

    @property
    def arcs(self) -> list[tuple]:
        return sorted((u, v) for u, out in self._succ.items() for v in out)

    def successors(self, v) -> frozenset:
        return self._succ[v]

    def predecessors(self, v) -> frozenset:
        return self._pred[v]

    def has_arc(self, u, v) -> bool:
        return u in self._succ and v in self._succ[u]

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __iter__(self):
        return iter(self._succ)

    def __len__(self) -> int:
        return len(self._succ)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._succ == other._succ

    def __repr__(self) -> str:
        return f"DirectedGraph(n={len(self)}, arcs={len(self.arcs)})"

    def delete_vertices(self, s: Iterable) -> "DirectedGraph":
        s = set(s)
        keep = [v for v in self._succ if v not in s]
        return DirectedGraph(keep, [(u, v) for u, v in self.arcs if u not in s and v not in s])


# -- module-level operations ---------------------------------------------------

def delete_vertices(g: UndirectedGraph, s: Iterable[int]) -> UndirectedGraph:
    """Return ``G - S``.  Every id in ``S`` must be a live vertex of ``G``."""
    s = frozenset(s)
    dead = s - g.vertices
    if dead:
        raise GraphError(f"cannot delete non-live vertices {sorted(dead)}")
    if not s:
        return g
    return UndirectedGraph._from_adj(
        {v: nb - s for v, nb in g._adj.items() if v not in s}
    )


def connected_components(g: UndirectedGraph) -> list[frozenset[int]]:
    """Components in canonical order: sorted by minimum member id."""
    seen: set[int] = set()
    out = []
    for root in g:
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def parse_dimacs(data: str | bytes) -> tuple[UndirectedGraph, int | None]:
    """Parse DIMACS edge format into a graph on ids ``0..n-1``.

    Returns the graph and the budget ``k`` if a ``c k <int>`` comment is present.
    Duplicate edge lines collapse to one edge.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    n = None
    k = None
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            if len(parts) == 3 and parts[1] == "k":
                try:
                    k = int(parts[2])
                except ValueError:
                    raise DimacsParseError(line_no, f"bad budget comment {line!r}") from None
            continue
        if tag == "p":
            if n is not None:
                raise DimacsParseError(line_no, "duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError(line_no, f"malformed header {line!r}")
            try:
                n, m_decl = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError(line_no, f"malformed header {line!r}") from None
            if n < 0 or m_decl < 0:
                raise DimacsParseError(line_no, "negative counts in header")
            continue
        if tag == "e":
            if n is None:
                raise DimacsParseError(line_no, "edge line before problem line")
            if len(parts) != 3:
                raise DimacsParseError(line_no, f"malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError(line_no, f"malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(line_no, f"endpoint out of range 1..{n}")
            if u == v:
                raise DimacsParseError(line_no, f"self-loop at vertex {u}")
            edges.add(_edge(u - 1, v - 1))
            continue
        raise DimacsParseError(line_no, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(0, "missing problem line")
    return UndirectedGraph(range(n), sorted(edges)), k


def to_dimacs(g: UndirectedGraph, k: int | None = None, comments: Iterable[str] = ()) -> str:
    """Serialise to DIMACS.  Live ids are relabelled ``1..n`` in increasing order."""
    index = {v: i + 1 for i, v in enumerate(g)}
    lines = [f"c {c}" for c in comments]
    if k is not None:
        lines.append(f"c k {k}")
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {index[u]} {index[v]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
