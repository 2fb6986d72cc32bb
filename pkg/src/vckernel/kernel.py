"""The kernelization pipeline for Vertex Cover above ``2 LP - MM``.

``kernelize`` applies LP preprocessing, builds a nice decomposition, selects the
relevant unmatched components in ``ell + 1`` rounds and deletes the rest,
adjusting ``k`` so that the parameter ``ell`` is unchanged.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

from .decomposition import (
    NiceDecomposition,
    lp_value,
    nice_decomposition,
    nt_reduce,
    vc_lower_bound,
)
from .digraph import build_h
from .graph import UndirectedGraph
from .matching import HallViolation, maximum_matching
from .repset import DEFAULT_PRIME, error_bound, representative_triples
from .tightcover import has_tight_vc, minimal_bad_subsets

log = logging.getLogger(__name__)

REDUCED, DEFINITE_NO, DEFINITE_YES = "reduced", "definite-no", "definite-yes"

# Emitted in place of a graph when the answer is already known.
NO_INSTANCE = (UndirectedGraph([0, 1], [(0, 1)]), 0)
YES_INSTANCE = (UndirectedGraph(), 0)


class InternalInvariantError(RuntimeError):
    """A pipeline invariant failed; indicates a bug, not a bad input."""


def compute_ell(g: UndirectedGraph, k: int) -> int:
    two_lp, _ = lp_value(g)
    return k - (two_lp - len(maximum_matching(g)))


@dataclass(frozen=True)
class Round:
    index: int
    n_candidates: int  # |T^i|
    n_representatives: int  # |T^{i*}|
    n_selected: int  # |C_rel^i|
    error_bound: Fraction = Fraction(0)


@dataclass(frozen=True)
class Selection:
    c_rel: tuple[frozenset[int], ...]
    c_rel0: tuple[frozenset[int], ...]
    rounds: tuple[Round, ...]
    definite_no: bool = False

    @property
    def error_bound(self) -> Fraction:
        return sum((r.error_bound for r in self.rounds), Fraction(0))


def _subsets_upto3(items: list[int]) -> list[frozenset[int]]:
    return [frozenset(t) for size in (1, 2, 3) for t in combinations(items, size)]


def select_relevant(
    g: UndirectedGraph, dec: NiceDecomposition, ell: int,
    seed: int = 0, prime: int = DEFAULT_PRIME,
) -> Selection:
    """Choose the unmatched non-singleton components that must be kept."""
    comps = sorted(dec.c3hat, key=min)
    c_rel0 = tuple(c for c in comps if not has_tight_vc(g.induced(c)))
    if len(c_rel0) > ell:
        return Selection((), c_rel0, (), definite_no=True)

    remaining = [c for c in comps if c not in c_rel0]
    a_sorted = sorted(dec.a)
    # For each component: the minimal sets near A that no tight cover contains,
    # then every T (1-3 vertices of A) whose neighbourhood swallows one of them.
    eligible: dict[frozenset[int], set[frozenset[int]]] = {}
    if a_sorted:
        all_t = _subsets_upto3(a_sorted)
        nbr = {v: g.neighbors(v) for v in a_sorted}
        for c in remaining:
            gc = g.induced(c)
            near = g.neighborhood(dec.a) & c
            bad = minimal_bad_subsets(gc, near, 3)
            elig = set()
            if bad:
                for t in all_t:
                    nt = frozenset().union(*(nbr[v] for v in t)) & c
                    if any(z <= nt for z in bad):
                        elig.add(t)
            eligible[c] = elig

    h = build_h(g, dec).h if a_sorted else None
    selected: list[frozenset[int]] = list(c_rel0)
    rounds = []
    for i in range(1, ell + 2):
        family = set().union(*(eligible[c] for c in remaining)) if remaining and a_sorted else set()
        reps: list[frozenset[int]] = []
        bound = Fraction(0)
        if family:
            reps = representative_triples(h, dec.a3, ell, family, seed, prime, stream=(i,))
            bound = error_bound(len(a_sorted), ell, len(family), prime)
        picked: list[frozenset[int]] = []
        for t in reps:
            c = next(c for c in remaining if t in eligible[c])
            if c not in picked:
                picked.append(c)
        picked.sort(key=min)
        remaining = [c for c in remaining if c not in picked]
        selected += picked
        rounds.append(Round(i, len(family), len(reps), len(picked), bound))
    return Selection(tuple(sorted(selected, key=min)), c_rel0, tuple(rounds))


def remove_irrelevant(
    g: UndirectedGraph, k: int, dec: NiceDecomposition, c_rel: Iterable[frozenset[int]]
) -> tuple[UndirectedGraph, int]:
    c_rel = set(c_rel)
    if not c_rel <= set(dec.c3hat):
        raise ValueError("relevant components must be unmatched non-singleton components")
    irrelevant = [c for c in dec.c3hat if c not in c_rel]
    gone = frozenset().union(*irrelevant) if irrelevant else frozenset()
    return g.delete_vertices(gone), k - sum((len(c) + 1) // 2 for c in irrelevant)


@dataclass(frozen=True)
class KernelOutput:
    g_out: UndirectedGraph
    k_out: int
    verdict: str
    ell_initial: int  # parameter of the raw input
    ell_in: int  # parameter after LP preprocessing
    ell_out: int
    p_out: int
    c_rel: tuple[frozenset[int], ...] = ()
    c_rel0: tuple[frozenset[int], ...] = ()
    rounds: tuple[Round, ...] = ()
    error_bound: Fraction = Fraction(0)
    forced_in: frozenset[int] = frozenset()
    removed_out: frozenset[int] = frozenset()
    n_c3hat: int = 0
    seed: int = 0
    prime: int = DEFAULT_PRIME
    timings: dict = field(default_factory=dict, compare=False, repr=False)

    def stats(self, with_timings: bool = False) -> dict:
        out = {
            "schema": "vckernel/1",
            "verdict": self.verdict,
            "n_out": self.g_out.n,
            "m_out": self.g_out.m,
            "k_out": self.k_out,
            "ell_initial": self.ell_initial,
            "ell_in": self.ell_in,
            "ell_out": self.ell_out,
            "p_out": self.p_out,
            "forced_in": len(self.forced_in),
            "removed_out": len(self.removed_out),
            "c3hat": self.n_c3hat,
            "c_rel0": len(self.c_rel0),
            "c_rel": len(self.c_rel),
            "c_rel_sizes": [len(c) for c in self.c_rel],
            "rounds": [
                {"i": r.index, "T": r.n_candidates, "T_star": r.n_representatives, "C_rel": r.n_selected}
                for r in self.rounds
            ],
            "error_bound": float(self.error_bound),
            "seed": self.seed,
            "prime": self.prime,
        }
        if with_timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out


def _definite(verdict: str, ell_initial: int, ell_in: int, **extra) -> KernelOutput:
    g, k = NO_INSTANCE if verdict == DEFINITE_NO else YES_INSTANCE
    e = compute_ell(g, k)
    return KernelOutput(g, k, verdict, ell_initial, ell_in, e, k - len(maximum_matching(g)), **extra)


def kernelize(
    g: UndirectedGraph, k: int, seed: int = 0, prime: int = DEFAULT_PRIME
) -> KernelOutput:
    clock = time.perf_counter
    timings: dict[str, float] = {}
    t0 = clock()
    ell_initial = compute_ell(g, k)
    nt = nt_reduce(g, k)
    timings["lp_preprocessing"] = clock() - t0
    common = dict(seed=seed, prime=prime, forced_in=nt.forced_in, removed_out=nt.removed_out, timings=timings)
    if nt.definite_no:
        return _definite(DEFINITE_NO, ell_initial, ell_initial, **common)
    g1, k1 = nt.graph, nt.k
    if g1.n == 0:
        return _definite(DEFINITE_YES, ell_initial, compute_ell(g1, k1), **common)

    t0 = clock()
    try:
        dec = nice_decomposition(g1)
    except HallViolation as exc:
        raise InternalInvariantError(f"LP preprocessing left a Hall violation: {exc}") from exc
    timings["decomposition"] = clock() - t0
    two_lp, _ = lp_value(g1)
    if two_lp != g1.n or vc_lower_bound(dec) != two_lp - len(dec.m):
        raise InternalInvariantError("decomposition lower bound disagrees with 2LP - MM")
    ell = k1 - vc_lower_bound(dec)
    if ell > ell_initial:
        raise InternalInvariantError("LP preprocessing increased the parameter")
    if ell < 0:
        return _definite(DEFINITE_NO, ell_initial, ell, n_c3hat=len(dec.c3hat), **common)

    t0 = clock()
    sel = select_relevant(g1, dec, ell, seed, prime)
    timings["selection"] = clock() - t0
    extra = dict(c_rel0=sel.c_rel0, rounds=sel.rounds, error_bound=sel.error_bound, n_c3hat=len(dec.c3hat))
    if sel.definite_no:
        return _definite(DEFINITE_NO, ell_initial, ell, **extra, **common)

    g2, k2 = remove_irrelevant(g1, k1, dec, sel.c_rel)
    ell_out = compute_ell(g2, k2)
    if ell_out != ell:
        raise InternalInvariantError(f"parameter changed from {ell} to {ell_out} by deletion")
    p_out = k2 - len(maximum_matching(g2))
    cap = ell + (ell + 1) * comb(3 * ell + 3, 3)
    if len(sel.c_rel) > cap:
        raise InternalInvariantError(f"{len(sel.c_rel)} relevant components exceed the bound {cap}")
    log.info("ell %d: kept %d of %d components, %d -> %d vertices", ell, len(sel.c_rel), len(dec.c3hat), g.n, g2.n)
    if g2.n == 0:
        # nothing kept and k2 = ell >= 0
        return _definite(DEFINITE_YES, ell_initial, ell, **extra, **common)
    return KernelOutput(g2, k2, REDUCED, ell_initial, ell, ell_out, p_out, c_rel=sel.c_rel, **extra, **common)
