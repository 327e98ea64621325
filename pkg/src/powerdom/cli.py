"""Command-line interface.

Exit codes: 0 success, 1 a checked property failed, 2 unreadable input or
unknown vertex, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .exact import Exceeded, gamma_p_exact
from .generators import FamilySpec, UnknownTag, build, named_corpus, random_corpus
from .harness import cross_validate, property_suite
from .monitor import format_trace, monitor
from .solver import power_dominate
from .structure import analyze
from .triangulation import TriangulationError, parse, serialize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _seeds(tokens: List[str]) -> List[int]:
    out = []
    for tok in tokens:
        out.extend(int(x) for x in tok.replace(",", " ").split())
    return out


def cmd_solve(args) -> int:
    g = parse(_read(args.file))
    if args.exact:
        res = gamma_p_exact(g, k_max=args.k_max, prune_dominated=args.prune_dominated)
        d = res.to_dict()
        d["n"] = g.n
        if args.explain:
            d["trace"] = format_trace(monitor(g, res.witness).trace).splitlines()
        _emit(d)
        return EXIT_OK
    report = power_dominate(g)
    _emit(report.to_dict(explain=args.explain))
    return EXIT_OK if not report.diagnostics else EXIT_INTERNAL


def cmd_analyze(args) -> int:
    g = parse(_read(args.file))
    d = analyze(g)
    _emit(d)
    return EXIT_INTERNAL if "error" in d else EXIT_OK


def cmd_generate(args) -> int:
    spec = FamilySpec(args.family, args.name, args.n, args.k, args.seed, args.flips, args.gadget)
    text = serialize(build(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_trace(args) -> int:
    g = parse(_read(args.file))
    seeds = _seeds(args.seeds)
    state = monitor(g, seeds)
    sys.stdout.write(format_trace(state.trace))
    return EXIT_OK


def cmd_cross_validate(args) -> int:
    records = cross_validate(args.max_n, args.count, args.seed, args.jobs)
    for r in records:
        _emit(r.to_dict())
    return EXIT_OK if all(r.ok for r in records) else EXIT_FAIL


def cmd_property_suite(args) -> int:
    specs = [] if args.no_named else named_corpus()
    specs += [FamilySpec("lower_bound", k=k, gadget=gd) for k in args.lower_bound for gd in ("bad", "good", "ugly")]
    if args.count:
        specs += random_corpus(args.count, args.n_min, args.n_max, args.seed)
    records = property_suite(specs, args.star_max_n, args.jobs)
    failed = {}
    for r in records:
        _emit(r.to_dict())
        for name, ok in r.checks.items():
            failed.setdefault(name, 0)
            failed[name] += not ok
    summary = {"instances": len(records), "failures": failed, "passed": all(r.ok for r in records)}
    if not records:
        summary["warning"] = "empty corpus"
    _emit({"summary": summary})
    return EXIT_OK if summary["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="powerdom", description="Power domination on maximal planar graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="power dominating set of a rotrep file ('-' for stdin)")
    s.add_argument("file")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--constructive", action="store_true", help="three-stage construction (default)")
    mode.add_argument("--exact", action="store_true", help="exhaustive minimum search")
    s.add_argument("--explain", action="store_true", help="include trace and detected structures")
    s.add_argument("--prune-dominated", action="store_true", help="exact mode: skip dominated candidates")
    s.add_argument("--k-max", type=int, default=None, help="exact mode: largest set size tried")
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("analyze", help="3-vertices, b-vertices and configurations as JSON")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    gen = sub.add_parser("generate", help="write a generated triangulation in rotrep format")
    gen.add_argument(
        "--family", required=True,
        choices=["named", "lower_bound", "b_path", "facial_triakis", "random_stacked", "random_mixed"],
    )
    gen.add_argument("--name", help="tag for --family named, e.g. octahedron or tower(5)")
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--flips", type=int, default=0)
    gen.add_argument("--gadget", default="bad", choices=["bad", "good", "ugly"])
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    t = sub.add_parser("trace", help="DOM/PROP propagation trace for a seed set")
    t.add_argument("file")
    t.add_argument("seeds", nargs="*", help="seed vertices, space or comma separated")
    t.set_defaults(func=cmd_trace)

    cv = sub.add_parser("cross-validate", help="constructive vs exact on small instances")
    cv.add_argument("--max-n", type=int, default=14)
    cv.add_argument("--count", type=int, default=200)
    cv.add_argument("--seed", type=int, default=0)
    cv.add_argument("--jobs", type=int, default=1)
    cv.set_defaults(func=cmd_cross_validate)

    ps = sub.add_parser("property-suite", help="structural and accounting laws over a corpus")
    ps.add_argument("--count", type=int, default=100)
    ps.add_argument("--n-min", type=int, default=6)
    ps.add_argument("--n-max", type=int, default=60)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--lower-bound", type=int, nargs="*", default=[1, 2, 3], metavar="K")
    ps.add_argument("--no-named", action="store_true", help="leave out the named graphs")
    ps.add_argument("--star-max-n", type=int, default=14, help="largest n for the induced-subgraph check")
    ps.add_argument("--jobs", type=int, default=1)
    ps.set_defaults(func=cmd_property_suite)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (TriangulationError, UnknownTag, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        # unknown vertex ids and malformed seed lists
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except Exceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except AssertionError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
