"""Command-line entry points: ``kernelize``, ``verify``, ``gen`` and ``stats``.

Exit codes: 0 success, 2 usage, 3 parse error, 4 internal invariant (or a
verified property failing).  I/O failures exit with 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .decomposition import (
    DecompositionError,
    decomposition_from_parts,
    lp_value,
    nice_decomposition,
    nt_reduce,
)
from .generators import FAMILIES, suggested_k
from .graph import DimacsParseError, GraphError, parse_dimacs, to_dimacs
from .kernel import InternalInvariantError, compute_ell, kernelize
from .matching import HallViolation, Matching, maximum_matching
from .oracle import DEFAULT_CAP
from .repset import DEFAULT_PRIME, validate_prime
from .verify import run_battery

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3, 4
SCHEMA = "vckernel/1"

log = logging.getLogger("vckernel")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None
    out: str | None
    stats_out: str | None
    seed: int
    prime: int
    oracle_cap: int


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_instance(args) -> tuple:
    g, k_comment = parse_dimacs(_read(args.input))
    k = args.k if args.k is not None else k_comment
    return g, k


def _config(args) -> RunConfig:
    return RunConfig(
        args.command, getattr(args, "input", None), getattr(args, "out", None),
        getattr(args, "stats_out", None), args.seed, args.prime, args.oracle_cap,
    )


def run_kernelize(args) -> int:
    cfg = _config(args)
    g, k = _load_instance(args)
    if k is None:
        raise UsageError("no budget: pass --k or include a 'c k <int>' comment")
    result = kernelize(g, k, cfg.seed, cfg.prime)
    stats = result.stats(with_timings=args.timings)
    comments = [f"vckernel verdict {result.verdict}", f"seed {cfg.seed} prime {cfg.prime}"]
    _write(cfg.out, to_dimacs(result.g_out, result.k_out, comments))
    if cfg.stats_out is not None:
        _write(cfg.stats_out, _dump_json(stats))
    elif cfg.out not in (None, "-"):
        sys.stdout.write(_dump_json(stats))
    return EXIT_OK


def _decomposition_fixture(path: str, g):
    data = json.loads(_read(path))
    try:
        m = Matching.from_edges(tuple(e) for e in data.get("m", []))
    except GraphError as exc:
        raise DecompositionError("matching_valid", str(exc)) from exc
    return decomposition_from_parts(g, data["a"], data["b"], data["d"], m)


def run_verify(args) -> int:
    cfg = _config(args)
    g, k = _load_instance(args)
    dec = _decomposition_fixture(args.decomposition, g) if args.decomposition else None
    results = run_battery(g, k, dec, cfg.oracle_cap, cfg.seed, cfg.prime)
    for r in results:
        print(r.line())
        if r.status == "skip":
            log.warning("skipped %s: %s", r.name, r.detail)
    if cfg.stats_out:
        _write(cfg.stats_out, _dump_json({
            "schema": SCHEMA, "seed": cfg.seed, "prime": cfg.prime, "oracle_cap": cfg.oracle_cap,
            "results": [{"name": r.name, "status": r.status, "detail": r.detail} for r in results],
        }))
    return EXIT_INVARIANT if any(r.status == "fail" for r in results) else EXIT_OK


def _parse_params(text: str | None) -> dict[str, str]:
    out = {}
    for part in (text or "").split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, val = part.partition("=")
        if not sep:
            raise UsageError(f"parameter {part!r} is not key=value")
        out[key.strip()] = val.strip()
    return out


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def run_generate(args) -> int:
    cfg = _config(args)
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {sorted(FAMILIES)}")
    fn, required = FAMILIES[args.family]
    params = {k: _number(v) for k, v in _parse_params(args.params).items()}
    missing = [p for p in required if p not in params and args.family != "decomposable"]
    if missing:
        raise UsageError(f"family {args.family} needs parameters {missing}")
    if args.family in ("gnp", "factor-critical-chords", "decomposable"):
        params["seed"] = cfg.seed
    try:
        g = fn(**params)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid parameters for {args.family}: {exc}") from exc
    k = suggested_k(g, args.ell)
    desc = ",".join(f"{key}={val}" for key, val in sorted(params.items()))
    _write(cfg.out, to_dimacs(g, k, [f"vckernel gen {args.family} {desc} ell {args.ell}"]))
    return EXIT_OK


def run_stats(args) -> int:
    cfg = _config(args)
    g, k = _load_instance(args)
    two_lp, _ = lp_value(g)
    mm = len(maximum_matching(g))
    out = {"schema": SCHEMA, "n": g.n, "m": g.m, "two_lp": two_lp, "mm": mm, "lower_bound": two_lp - mm}
    if k is not None:
        out.update(k=k, ell=compute_ell(g, k))
        nt = nt_reduce(g, k)
        out.update(nt_n=nt.graph.n, nt_k=nt.k, forced_in=len(nt.forced_in), removed_out=len(nt.removed_out))
        if nt.graph.n:
            dec = nice_decomposition(nt.graph)
            out.update(
                a=len(dec.a), b=len(dec.b), d=len(dec.d), a1=len(dec.a1), a3=len(dec.a3),
                c1=len(dec.c1), c3=len(dec.c3), c3hat=len(dec.c3hat),
            )
    _write(cfg.stats_out, _dump_json(out))
    return EXIT_OK


def _prime(text: str) -> int:
    try:
        return validate_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _seed(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--prime", type=_prime, default=DEFAULT_PRIME)
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="vckernel", description="Vertex Cover kernelization above 2LP - MM.")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernelize", parents=[common], help="reduce a DIMACS instance")
    k.add_argument("input", help="DIMACS file, or - for stdin")
    k.add_argument("--k", type=int)
    k.add_argument("--out")
    k.add_argument("--stats-out")
    k.add_argument("--timings", action="store_true", help="include wall-clock timings in the stats")
    k.set_defaults(func=run_kernelize)

    v = sub.add_parser("verify", parents=[common], help="run the oracle battery on an instance")
    v.add_argument("input")
    v.add_argument("--k", type=int)
    v.add_argument("--decomposition", help="JSON {a, b, d, m} to check instead of computing one")
    v.add_argument("--stats-out")
    v.set_defaults(func=run_verify)

    gsub = sub.add_parser("gen", parents=[common], help="write a generated instance")
    gsub.add_argument("--family", required=True)
    gsub.add_argument("--params", default="")
    gsub.add_argument("--ell", type=int, default=0, help="parameter of the suggested budget")
    gsub.add_argument("--out")
    gsub.set_defaults(func=run_generate)

    s = sub.add_parser("stats", parents=[common], help="LP, matching and decomposition summary")
    s.add_argument("input")
    s.add_argument("--k", type=int)
    s.add_argument("--stats-out")
    s.set_defaults(func=run_stats)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DimacsParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InternalInvariantError, DecompositionError, HallViolation) as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
