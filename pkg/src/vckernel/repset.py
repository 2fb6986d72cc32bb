"""Prime-field linear algebra, gammoid representation and representative triple families.

The strict gammoid of ``(D, S)`` is represented as the dual of a transversal
matroid: rows ``u`` in ``V(D) - S``, columns ``v`` in ``V(D)``, with a random
nonzero entry wherever ``v = u`` or ``(v, u)`` is an arc.  Bringing that matrix
to the form ``[I | B]`` (non-source columns first) and taking ``[-B^T | I]``
gives a matrix whose column sets are independent exactly when linked to ``S``,
up to a one-sided Schwartz-Zippel error: independence in the matrix always
implies linkage, a linked set may look dependent with probability at most
``|V(D) - S| / (p - 1)``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import DirectedGraph

log = logging.getLogger(__name__)

DEFAULT_PRIME = 2305843009213693951  # 2^61 - 1


def validate_prime(p: int) -> int:
    from sympy import isprime

    if p < 3 or not isprime(p):
        raise ValueError(f"field size {p} is not an odd prime")
    return p


def rng_for(seed: int, *stream: int) -> random.Random:
    """Deterministic generator for one named stream derived from the run seed."""
    state = np.random.SeedSequence([seed, *stream]).generate_state(4, dtype=np.uint64)
    return random.Random(int.from_bytes(state.tobytes(), "little"))


class SingularMatrix(ArithmeticError):
    pass


@dataclass(frozen=True)
class FieldMatrix:
    """Dense matrix over ``GF(p)`` stored as tuples of Python ints."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def submatrix(self, cols: Sequence[int]) -> list[list[int]]:
        return [[r[j] for j in cols] for r in self.rows]

    def rank(self, cols: Sequence[int] | None = None) -> int:
        cols = range(self.shape[1]) if cols is None else cols
        return rank_mod_p(self.submatrix(list(cols)), self.p)

    def independent(self, cols: Iterable[int]) -> bool:
        cols = list(cols)
        return len(set(cols)) == len(cols) and self.rank(cols) == len(cols)


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    """Rank by Gaussian elimination; ``mat`` is modified in place."""
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if mat[r][c] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], p - 2, p)
        prow = [x * inv % p for x in mat[rank]]
        mat[rank] = prow
        for r in range(rank + 1, n_rows):
            f = mat[r][c] % p
            if f:
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], prow)]
        rank += 1
        if rank == n_rows:
            break
    return rank


def solve_mod_p(left: list[list[int]], right: list[list[int]], p: int) -> list[list[int]]:
    """``left^{-1} right`` for square ``left`` by Gauss-Jordan; raises :class:`SingularMatrix`."""
    n = len(left)
    aug = [list(lr) + list(rr) for lr, rr in zip(left, right)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c]), None)
        if pivot is None:
            raise SingularMatrix(f"pivot missing in column {c}")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = pow(aug[c][c], p - 2, p)
        prow = [x * inv % p for x in aug[c]]
        aug[c] = prow
        for r in range(n):
            if r != c:
                f = aug[r][c]
                if f:
                    aug[r] = [(x - f * y) % p for x, y in zip(aug[r], prow)]
    return [row[n:] for row in aug]


# -- gammoids ---------------------------------------------------------------------

@dataclass(frozen=True)
class GammoidInstance:
    """Three disjoint copies of ``H`` plus ``ell + 1`` sources feeding ``S_H`` in each copy.

    ``copy_of[x] = (v, j)``: vertex ``v`` of ``H`` in copy ``j`` (1..3); sources
    carry ``v = -i`` for source number ``i`` (1..ell+1).
    """

    d: DirectedGraph
    s: frozenset[int]
    copy_of: Mapping[int, tuple[int, int]]
    index: Mapping[tuple[int, int], int]
    ell: int

    def lift(self, t: Iterable[int]) -> tuple[int, int, int]:
        """Columns of the three-copy lift of a set of one to three ``H``-vertices."""
        ts = sorted(set(t))
        if len(ts) == 3:
            picks = [(ts[0], 1), (ts[1], 2), (ts[2], 3)]
        elif len(ts) == 2:
            picks = [(ts[0], 1), (ts[1], 2), (ts[1], 3)]
        elif len(ts) == 1:
            picks = [(ts[0], 1), (ts[0], 2), (ts[0], 3)]
        else:
            raise ValueError(f"lift needs 1..3 vertices, got {ts}")
        return tuple(self.index[x] for x in picks)  # type: ignore[return-value]

    def copies(self, xs: Iterable[int]) -> frozenset[int]:
        """All three copies of each ``H``-vertex in ``xs``."""
        return frozenset(self.index[x, j] for x in xs for j in (1, 2, 3))


def build_gammoid_digraph(h: DirectedGraph, s_h: Iterable[int], ell: int) -> GammoidInstance:
    if ell < 0:
        raise ValueError("ell must be non-negative")
    s_h = sorted(set(s_h))
    base = sorted(h) + [-i for i in range(1, ell + 2)]
    block = len(base)
    index: dict[tuple[int, int], int] = {}
    for j in (1, 2, 3):
        for pos, v in enumerate(base):
            index[v, j] = (j - 1) * block + pos
    copy_of = {x: key for key, x in index.items()}
    arcs = []
    for j in (1, 2, 3):
        arcs += [(index[u, j], index[v, j]) for u, v in h.arcs]
        arcs += [(index[-i, j], index[s, j]) for i in range(1, ell + 2) for s in s_h]
    s = frozenset(index[-i, j] for j in (1, 2, 3) for i in range(1, ell + 2))
    return GammoidInstance(DirectedGraph(range(3 * block), arcs), s, copy_of, index, ell)


def gammoid_matrix(
    d: DirectedGraph, s: Iterable[int], seed: int, prime: int = DEFAULT_PRIME,
    stream: Sequence[int] = (), max_tries: int = 8,
) -> FieldMatrix:
    """Random representation of the strict gammoid of ``(d, s)``; one column per vertex.

    ``d`` must have vertices ``0..N-1``.  Rows correspond to ``s`` in sorted order.
    """
    verts = sorted(d)
    if verts != list(range(len(verts))):
        raise ValueError("gammoid digraph must use vertex ids 0..N-1")
    s_sorted = sorted(set(s))
    s_set = set(s_sorted)
    outside = [v for v in verts if v not in s_set]
    row_of = {u: i for i, u in enumerate(outside)}
    p = prime
    rng = rng_for(seed, *stream)
    for attempt in range(max_tries):
        # transversal matrix: row u, column v when v = u or (v, u) is an arc
        t = [[0] * len(verts) for _ in outside]
        for u in outside:
            t[row_of[u]][u] = rng.randrange(1, p)
            for v in sorted(d.predecessors(u)):
                t[row_of[u]][v] = rng.randrange(1, p)
        left = [[row[v] for v in outside] for row in t]
        right = [[row[v] for v in s_sorted] for row in t]
        try:
            b = solve_mod_p(left, right, p)  # |outside| x |S|
        except SingularMatrix:
            log.info("transversal block singular on attempt %d, resampling", attempt)
            continue
        rows = []
        for i, sv in enumerate(s_sorted):
            row = [0] * len(verts)
            for r, u in enumerate(outside):
                row[u] = (-b[r][i]) % p
            row[sv] = 1
            rows.append(tuple(row))
        return FieldMatrix(p, tuple(rows))
    raise SingularMatrix(f"no nonsingular sample in {max_tries} attempts")


# -- representative families ---------------------------------------------------------

def _det3(c0: Sequence[int], c1: Sequence[int], c2: Sequence[int], i: int, j: int, k: int, p: int) -> int:
    return (
        c0[i] * (c1[j] * c2[k] - c1[k] * c2[j])
        - c0[j] * (c1[i] * c2[k] - c1[k] * c2[i])
        + c0[k] * (c1[i] * c2[j] - c1[j] * c2[i])
    ) % p


def wedge_vector(a: FieldMatrix, cols: Sequence[int]) -> list[int]:
    """All 3x3 minors of the three given columns, rows in lexicographic triple order."""
    c0, c1, c2 = (a.column(j) for j in cols)
    n = a.shape[0]
    return [_det3(c0, c1, c2, i, j, k, a.p) for i, j, k in combinations(range(n), 3)]


class _EchelonBasis:
    def __init__(self, p: int):
        self.p = p
        self.rows: list[tuple[int, list[int]]] = []

    def insert(self, vec: list[int]) -> bool:
        """Add ``vec`` if it is independent of the basis; return whether it was added."""
        p = self.p
        vec = list(vec)
        for piv, row in self.rows:
            f = vec[piv]
            if f:
                vec = [(x - f * y) % p for x, y in zip(vec, row)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        inv = pow(vec[piv], p - 2, p)
        self.rows.append((piv, [x * inv % p for x in vec]))
        return True


def representative_family(
    a: FieldMatrix, family: Sequence[Sequence[int]], r: int
) -> list[int]:
    """Indices into ``family`` of an ``r``-representative subfamily of column triples.

    A triple is kept when its wedge vector is independent of those already kept,
    so at most ``C(r + 3, 3)`` survive.  Dependent triples have zero wedge vector
    and are dropped.
    """
    if a.shape[0] != r + 3:
        raise ValueError(f"matrix rank must be r + 3 = {r + 3}, got {a.shape[0]} rows")
    basis = _EchelonBasis(a.p)
    dim = comb(r + 3, 3)
    kept: list[int] = []
    for i, cols in enumerate(family):
        if len(kept) == dim:
            break
        vec = wedge_vector(a, cols)
        if not any(vec):
            log.debug("triple %s is dependent, dropped", tuple(cols))
            continue
        if basis.insert(vec):
            kept.append(i)
    return kept


def canonical_triples(family: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    uniq = {frozenset(t) for t in family}
    if any(not 1 <= len(t) <= 3 for t in uniq):
        raise ValueError("family members must have one to three vertices")
    return sorted(uniq, key=lambda t: (len(t), sorted(t)))


def representative_triples(
    h: DirectedGraph, s_h: Iterable[int], ell: int, family: Iterable[Iterable[int]],
    seed: int = 0, prime: int = DEFAULT_PRIME, stream: Sequence[int] = (),
) -> list[frozenset[int]]:
    """Subfamily preserving, for every closest ``X_H`` with ``|X_H| <= ell``, some fully reachable member."""
    fam = canonical_triples(family)
    if not fam:
        return []
    inst = build_gammoid_digraph(h, s_h, ell)
    a = gammoid_matrix(inst.d, inst.s, seed, prime, stream)
    lifted = [inst.lift(t) for t in fam]
    assert len(set(lifted)) == len(lifted), "lift is injective"
    keep = representative_family(a, lifted, 3 * ell)
    return [fam[i] for i in keep]


def error_bound(n_h: int, ell: int, family_size: int, prime: int = DEFAULT_PRIME) -> Fraction:
    """Union bound on one call of :func:`representative_triples` going wrong.

    One event per pair (candidate ``X_H`` with ``|X_H| <= ell``, family member),
    plus one for the sampled block, each at most ``rows / (p - 1)`` where
    ``rows = 3 |V_H|`` is the degree of the relevant minors.
    """
    if family_size == 0:
        return Fraction(0)
    n_x = sum(comb(n_h, i) for i in range(ell + 1))
    return Fraction((n_x * family_size + 1) * 3 * n_h, prime - 1)
