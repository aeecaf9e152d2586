"""Command-line interface.

Exit codes: 0 success, 1 violations found, 2 usage or input error,
3 proof invariant violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .constructions import TREE_SHAPES, build_special, special_checks, verify_special
from .exact import iota_exact
from .exceptions import (
    IsolationError,
    PatternTooSmall,
    ProofInvariantViolated,
    SpecialPairInput,
)
from .graph import CANONICAL_LIMIT, canonical_form, format_edge_list, read_edge_list
from .harness import (
    Corpus,
    default_workers,
    enumerate_connected,
    find_extremal,
    random_corpus,
    verify_corpus,
)
from .patterns import BUILTIN_NAMES, builtin_pattern
from .proof import bound, isolate
from .validation import check_pattern

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

log = logging.getLogger("isolation_kit")


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (choose one)")
    src.add_argument("--exhaustive", type=int, metavar="N", help="all connected graphs on N vertices")
    src.add_argument("--min-n", type=int, metavar="M", help="with --exhaustive: cover M..N vertices")
    src.add_argument("--n", type=int, help="random source: vertex count")
    src.add_argument("--m", type=int, help="random source: edge count")
    src.add_argument("--count", type=int, default=10, help="random source: number of graphs")
    src.add_argument("--seed", type=int, default=0, help="random source: seed")
    src.add_argument("--graph", action="append", default=[], metavar="FILE", help="edge-list file (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isolation-kit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="constructive isolating set with its bound certificate")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--fallback-exact", action="store_true", help="recover with the exact solver on rejection")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve-exact", help="exact isolation number by brute force")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bound", help="print floor((m+1)/(k+2))")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("generate-special", help="write an (m,F)-special graph")
    p.add_argument("--pattern", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tree", choices=TREE_SHAPES, default="path")
    p.add_argument("--pure", action="store_true", help="edgeless remainder (needs k+2 | m+1)")
    p.add_argument("--remainder", default=None, metavar="path|FILE", help="remainder graph (default: path)")
    p.add_argument("--attach", choices=("dominator", "random"), default="dominator")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE", help="edge-list output; a .json sidecar is written next to it")
    p.add_argument("--check", action="store_true", help="verify the build (exact check when n <= 14)")

    p = sub.add_parser("verify", help="check the bound over a corpus")
    p.add_argument("--pattern", action="append", required=True, help="pattern (repeatable or comma-separated)")
    _add_source_args(p)
    p.add_argument("--exact", action="store_true", help="also compute exact isolation numbers")
    p.add_argument("--out", metavar="CSV", help="row report")
    p.add_argument("--summary", metavar="JSON", help="summary report (default: next to --out)")
    p.add_argument("--fail-fast", action="store_true", help="abort on the first proof invariant violation")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("find-extremal", help="graphs whose isolation number equals the bound")
    p.add_argument("--pattern", required=True)
    _add_source_args(p)
    p.add_argument("--out", metavar="FILE", help="write the graphs as concatenated edge lists")

    sub.add_parser("patterns", help="list built-in patterns")
    return parser


def _patterns(values: list[str]):
    names = [part for value in values for part in value.split(",") if part]
    return [check_pattern(name) for name in names]


def _corpus(args) -> Corpus:
    chosen = sum(x is not None and x != [] for x in (args.exhaustive, args.n, args.graph))
    if chosen != 1:
        raise IsolationError("choose exactly one source: --exhaustive, --n/--m, or --graph")
    if args.exhaustive is not None:
        lo = args.min_n if args.min_n is not None else args.exhaustive
        graphs = []
        for n in range(lo, args.exhaustive + 1):
            graphs.extend(enumerate_connected(n).graphs)
        return Corpus({"kind": "exhaustive", "n": args.exhaustive, "min_n": lo}, graphs)
    if args.n is not None:
        if args.m is None:
            raise IsolationError("--n requires --m")
        return random_corpus(args.n, args.m, args.count, args.seed)
    return Corpus({"kind": "files", "paths": args.graph}, [read_edge_list(p) for p in args.graph])


def _print_trace(trace, stream) -> None:
    for step in trace:
        print(f"  {'  ' * max(step.depth, 0)}{step.case_tag} center={step.center} {step.bindings}", file=stream)


def cmd_solve(args) -> int:
    F = check_pattern(args.pattern)
    G = read_edge_list(args.graph)
    payload = {"pattern": F.name, "k": F.k, "n": G.n, "m": G.m, "bound": bound(G.m, F.k)}
    try:
        cert = isolate(G, F)
    except PatternTooSmall:
        cert = None
    except SpecialPairInput as exc:
        if not args.fallback_exact:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
        cert = None
    except ProofInvariantViolated as exc:
        if not args.fallback_exact:
            print(f"proof invariant violated: {exc}", file=sys.stderr)
            _print_trace(exc.trace, sys.stderr)
            return EXIT_INVARIANT
        cert = None
    if cert is None:
        res = iota_exact(G, F)
        payload.update(method="oracle", set=sorted(res.witness), size=res.iota, iota=res.iota, isolating=True)
    else:
        payload.update(method="proof", **cert.as_dict())
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"pattern {F.name} (k={F.k}), graph n={G.n} m={G.m}")
    print(f"method: {payload['method']}")
    if payload["method"] == "oracle":
        print(f"iota={payload['iota']}")
    print(f"set: {' '.join(map(str, payload['set']))}")
    print(f"size: {payload['size']}  bound: {payload['bound']}")
    print(f"isolating: {'yes' if payload['isolating'] else 'no'}")
    if cert is not None:
        print("cases:")
        _print_trace(cert.trace, sys.stdout)
    return EXIT_OK


def cmd_solve_exact(args) -> int:
    F = check_pattern(args.pattern)
    G = read_edge_list(args.graph)
    res = iota_exact(G, F)
    if args.format == "json":
        print(json.dumps({"pattern": F.name, "iota": res.iota, "witness": sorted(res.witness),
                          "explored": res.explored, "bound": bound(G.m, F.k)}, indent=2, sort_keys=True))
    else:
        print(f"iota={res.iota}")
        print(f"witness: {' '.join(map(str, sorted(res.witness)))}")
        print(f"explored: {res.explored}")
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.m < 0 or args.k < 0:
        raise IsolationError("--m and --k must be non-negative")
    print(bound(args.m, args.k))
    return EXIT_OK


def cmd_generate(args) -> int:
    F = check_pattern(args.pattern)
    if args.pure and args.remainder:
        raise IsolationError("--pure and --remainder are mutually exclusive")
    if args.pure:
        remainder = "edgeless"
    elif args.remainder in (None, "path"):
        remainder = "path"
    else:
        remainder = read_edge_list(args.remainder)
    built = build_special(F, args.m, tree=args.tree, remainder=remainder, attach=args.attach, seed=args.seed)
    meta = built.to_dict()
    meta["pattern"] = F.name
    if args.check:
        checks = special_checks(built, F)
        meta["checks"] = checks
        meta["verified"] = verify_special(built, F)
    text = format_edge_list(built.graph)
    if args.out:
        out = Path(args.out)
        out.write_text(text, encoding="utf-8")
        out.with_suffix(".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(f"wrote {out} (n={built.graph.n}, m={built.graph.m}, q={built.spec.q}, r={built.spec.r})")
    else:
        sys.stdout.write(text)
    if args.check and not meta["verified"]:
        print(f"special-graph verification failed: {meta['checks']}", file=sys.stderr)
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_verify(args) -> int:
    patterns = _patterns(args.pattern)
    corpus = _corpus(args)
    workers = args.workers if args.workers is not None else default_workers()
    try:
        report = verify_corpus(corpus, patterns, use_exact=args.exact, fail_fast=args.fail_fast, workers=workers)
    except ProofInvariantViolated as exc:
        print(f"proof invariant violated: {exc}", file=sys.stderr)
        _print_trace(exc.trace, sys.stderr)
        return EXIT_INVARIANT
    if args.out:
        Path(args.out).write_text(report.to_csv(), encoding="utf-8")
    summary_path = args.summary or (str(Path(args.out).with_suffix(".json")) if args.out else None)
    if summary_path:
        Path(summary_path).write_text(report.summary_json(), encoding="utf-8")
    s = report.summary()
    print(f"rows: {s['rows']}  violations: {s['violations']}  equality: {s['equality_count']}  "
          f"special: {s['special_rows']}")
    for tag, count in s["case_histogram"].items():
        print(f"  {tag}: {count}")
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_find_extremal(args) -> int:
    F = check_pattern(args.pattern)
    found = find_extremal(F, _corpus(args))
    chunks = []
    for G in found:
        hexform = canonical_form(G).hex() if G.n <= CANONICAL_LIMIT else ""
        print(f"{hexform or '-'}  n={G.n} m={G.m} edges={G.edges()}")
        chunks.append(f"# {hexform}\n" + format_edge_list(G))
    if args.out:
        Path(args.out).write_text("".join(chunks), encoding="utf-8")
    print(f"{len(found)} extremal graph(s)")
    return EXIT_OK


def cmd_patterns(args) -> int:
    print(f"{'name':<6}{'k':>3}{'ell':>5}  dominators  edges")
    for name in BUILTIN_NAMES:
        F = builtin_pattern(name)
        doms = ",".join(map(str, F.dominators))
        print(f"{name:<6}{F.k:>3}{F.ell:>5}  {doms:<10}  {F.f.edges()}")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "solve-exact": cmd_solve_exact,
    "bound": cmd_bound,
    "generate-special": cmd_generate,
    "verify": cmd_verify,
    "find-extremal": cmd_find_extremal,
    "patterns": cmd_patterns,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ProofInvariantViolated as exc:
        print(f"proof invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (IsolationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
