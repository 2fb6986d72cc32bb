"""Per-instance battery of structural checks against the brute-force oracles.

Each check yields a :class:`PropertyResult` with status ``pass``, ``fail`` or
``skip`` (instance above the oracle cap, or the check does not apply).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .decomposition import (
    NiceDecomposition,
    decomposition_violations,
    gallai_edmonds,
    lp_value,
    nice_decomposition,
    nt_reduce,
    vc_lower_bound,
)
from .digraph import build_h, compute_xop, is_closest, reachable_set
from .graph import UndirectedGraph
from .kernel import REDUCED, compute_ell, kernelize
from .matching import maximum_matching
from .oracle import (
    DEFAULT_CAP,
    OracleRefused,
    all_vertex_covers,
    dominant_vcs,
    exposable_bruteforce,
    lp_bruteforce,
    max_matching_bruteforce,
    vc_size,
)
from .repset import DEFAULT_PRIME
from .tightcover import critical_sets


@dataclass(frozen=True)
class PropertyResult:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status.upper():4} {self.name}{tail}"


class _Skip(Exception):
    pass


def dominant_cover_violations(g: UndirectedGraph, dec: NiceDecomposition, cap: int = DEFAULT_CAP) -> list[str]:
    """Reachability in ``H - X_op`` versus membership in ``X``, and closeness of ``X_op``."""
    h = build_h(g, dec)
    out = []
    for x in dominant_vcs(g, dec, cap=cap):
        xop = compute_xop(dec, x)
        reach = reachable_set(h, dec.a3, xop)
        for v in sorted(dec.a):
            if (v in reach) == (v in x):
                out.append(f"X={sorted(x)}: vertex {v} reachable={v in reach} but in X={v in x}")
        if not is_closest(h, dec.a3, xop):
            out.append(f"X={sorted(x)}: X_op={sorted(xop)} is not closest to A3")
    return out


def overpay_violations(g: UndirectedGraph, dec: NiceDecomposition, slack: int = 2, cap: int = DEFAULT_CAP) -> list[str]:
    """For covers ``X`` up to ``slack`` above optimum: ``|X_op|`` and active components at most ``|X| - bound``."""
    lb = vc_lower_bound(dec)
    best = vc_size(g, cap)
    out = []
    for size in range(best, best + slack + 1):
        for x in all_vertex_covers(g, size, cap):
            ell = len(x) - lb
            xop = compute_xop(dec, x)
            active = sum(1 for c in dec.c3hat if len(x & c) > (len(c) + 1) // 2)
            if len(xop) > ell or active > ell:
                out.append(f"X={sorted(x)}: |X_op|={len(xop)}, active={active}, ell={ell}")
    return out


def run_battery(
    g: UndirectedGraph,
    k: int | None = None,
    decomposition: NiceDecomposition | None = None,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> list[PropertyResult]:
    results: list[PropertyResult] = []

    def check(name: str, fn: Callable[[], str | None], need: int | None = None) -> None:
        if need is not None and g.n > need:
            results.append(PropertyResult(name, "skip", f"{g.n} vertices above cap {need}"))
            return
        try:
            problem = fn()
        except (_Skip, OracleRefused) as exc:
            results.append(PropertyResult(name, "skip", str(exc)))
            return
        results.append(PropertyResult(name, "fail" if problem else "pass", problem or ""))

    def lp_check():
        two_lp, x = lp_value(g)
        if not x.is_feasible(g):
            return "returned fractional cover is infeasible"
        brute = lp_bruteforce(g, cap=min(cap, 12))
        return None if brute == two_lp else f"2LP={two_lp}, brute force {brute}"

    def matching_check():
        mm, brute = len(maximum_matching(g)), max_matching_bruteforce(g)
        return None if mm == brute else f"MM={mm}, brute force {brute}"

    def ge_check():
        d = gallai_edmonds(g).d
        brute = exposable_bruteforce(g)
        return None if d == brute else f"D={sorted(d)}, brute force {sorted(brute)}"

    check("lp_optimum", lp_check, need=min(cap, 12))
    check("maximum_matching", matching_check, need=min(cap, 16))
    check("gallai_edmonds_exposable", ge_check, need=min(cap, 14))

    nt = nt_reduce(g, k if k is not None else 0)
    g1 = nt.graph

    def nt_decision():
        if k is None:
            raise _Skip("no budget given")
        same = (vc_size(g, cap) <= k) == (vc_size(g1, cap) <= nt.k)
        return None if same else "LP preprocessing changed the answer"

    def nt_ell():
        if k is None:
            raise _Skip("no budget given")
        before, after = compute_ell(g, k), compute_ell(g1, nt.k)
        return None if after <= before else f"ell grew from {before} to {after}"

    check("lp_preprocessing_equivalent", nt_decision, need=cap)
    check("lp_preprocessing_parameter", nt_ell)

    if decomposition is not None:
        dec, host = decomposition, g
    else:
        dec, host = nice_decomposition(g1), g1

    def dec_check():
        bad = decomposition_violations(host, dec)
        return ", ".join(bad) if bad else None

    check("nice_decomposition", dec_check)
    if results[-1].status == "fail":
        return results

    def bound_check():
        two_lp, _ = lp_value(host)
        lb = vc_lower_bound(dec)
        if lb != two_lp - len(dec.m):
            return f"|M|+|C3hat|={lb} but 2LP-MM={two_lp - len(dec.m)}"
        best = vc_size(host, cap)
        return None if best >= lb else f"VC={best} below bound {lb}"

    check("vc_lower_bound", bound_check, need=cap)
    check("dominant_cover_reachability", lambda: "; ".join(dominant_cover_violations(host, dec, cap)) or None, need=cap)
    check("overpay_bound", lambda: "; ".join(overpay_violations(host, dec, cap=cap)) or None, need=min(cap, 16))

    def critical_check():
        bad = []
        for c in dec.c3hat:
            if len(c) > 13:
                continue
            big = [sorted(z) for z in critical_sets(host.induced(c), None) if len(z) > 3]
            if big:
                bad.append(f"component {sorted(c)} has critical sets {big}")
        return "; ".join(bad) or None

    check("critical_sets_small", critical_check)

    def kernel_check():
        if k is None:
            raise _Skip("no budget given")
        out = kernelize(g, k, seed, prime)
        if (vc_size(g, cap) <= k) != (vc_size(out.g_out, cap) <= out.k_out):
            return f"verdict {out.verdict} is not equivalent to the input"
        if out.verdict == REDUCED:
            if out.ell_out != out.ell_in:
                return f"ell changed {out.ell_in} -> {out.ell_out}"
            if out.p_out != out.ell_out + len(out.c_rel):
                return "p_out accounting mismatch"
        return None

    check("kernel_equivalence", kernel_check, need=cap)
    return results


def iter_lines(results: list[PropertyResult]) -> Iterator[str]:
    for r in results:
        yield r.line()
