"""Command-line interface.

Subcommands: orbits | count | table | example | theorems | fiber | figure.

Exit codes: 0 success, 1 internal error, 2 usage (argparse), 3 trial
disagreement, 4 non-generic line failure, 5 cache corruption.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from .errors import CacheError, HexagramError, NonGenericLinesError, UsageError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREEMENT = 3
EXIT_NON_GENERIC = 4
EXIT_CACHE = 5

WORKED_EXAMPLE = {
    "triple": "(1,23),(1,45),(2,45)",
    "prime": 101,
    "lines": ((1, 35, 48), (1, 5, 26), (1, 32, 52)),
}


def _add_run_options(sp):
    sp.add_argument("--primes", default="32003,43051,48619",
                    help="comma-separated trial primes")
    sp.add_argument("--trials", type=int, default=3, help="trials per triple")
    sp.add_argument("--seed", type=int, default=1, help="master seed")
    sp.add_argument("--retries", type=int, default=5, help="retry limit per trial")
    sp.add_argument("--path", choices=("six", "four", "both"), default="six",
                    help="compute path: 6-variable ideal, 4-variable chart, or both")
    sp.add_argument("--workers", type=int, default=1, help="parallel trial workers")
    sp.add_argument("--cache", default=None, help="trial cache file (JSONL)")


def _config(args):
    from .pipeline import RunConfig
    primes = tuple(int(p) for p in str(args.primes).split(",") if p)
    return RunConfig(primes=primes, trials=args.trials, retry_limit=args.retries,
                     seed=args.seed, path=args.path, workers=args.workers)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hexagram",
        description="Enumerative geometry of Pascal's hexagram over prime fields")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("orbits", help="list the 77 label-triple orbits")

    sp = sub.add_parser("count", help="intersection number of one triple")
    sp.add_argument("triple", help="e.g. '(1,23),(1,45),(2,45)'")
    _add_run_options(sp)
    sp.add_argument("--solve-at", type=int, default=None, metavar="P",
                    help="also print the explicit solutions of one seeded "
                         "instance at this prime")

    sp = sub.add_parser("table", help="reproduce the 77-entry table")
    _add_run_options(sp)
    sp.add_argument("--triples", default=None,
                    help="semicolon-separated subset of representative triples")
    sp.add_argument("--limit", type=int, default=None,
                    help="only the first N orbits")
    sp.add_argument("--format", choices=("table", "records"), default="table")
    sp.add_argument("--out", default=None,
                    help="directory for report.txt, records.jsonl and the figure")

    sub.add_parser("example", help="replay the worked F_101 example")

    sp = sub.add_parser("theorems", help="run the classical-theorem verifier suite")
    sp.add_argument("--primes", default="32003,43051,48619")
    sp.add_argument("--hexads", type=int, default=100)
    sp.add_argument("--seed", type=int, default=1)

    sp = sub.add_parser("fiber", help="fiber degrees of the concurrency curves")
    sp.add_argument("--pattern", choices=("steiner", "kirkman", "row14", "all"),
                    default="all")
    sp.add_argument("--primes", default="32003,43051")
    sp.add_argument("--letters", default="a,b")
    sp.add_argument("--configs", type=int, default=2,
                    help="random (point, lines, value) draws per setting")
    sp.add_argument("--seed", type=int, default=1)

    sp = sub.add_parser("figure", help="render a hexagram diagram (SVG)")
    sp.add_argument("--params", default="-5,-3,-1,1,3,5",
                    help="six rational conic parameters a..f")
    sp.add_argument("--labels", default="k(1,23),k(2,13),k(3,12)",
                    help="comma-separated pascal labels to draw")
    sp.add_argument("--out", default="hexagram.svg")
    return ap


def cmd_orbits(args) -> int:
    from .report import orbit_listing
    orbit_listing()
    return EXIT_OK


def cmd_count(args) -> int:
    from .labels import parse_triple
    from .pipeline import intersection_number, random_instance, solve_points
    triple = parse_triple(args.triple)
    config = _config(args)
    cached = None
    writer = None
    if args.cache:
        from .cache import CacheWriter, load_cache
        cached = load_cache(args.cache)
        writer = CacheWriter(args.cache).append
    result = intersection_number(triple, config, cached=cached, sink=writer)
    print(result.report())
    if args.solve_at:
        inst = random_instance(triple, args.solve_at, config.seed)
        sol = solve_points(inst)
        print(sol.describe())
    return EXIT_DISAGREEMENT if result.disagreement else EXIT_OK


def cmd_table(args) -> int:
    from .labels import parse_triple
    from .report import render_records, render_rows, table_report
    config = _config(args)
    only = None
    if args.triples:
        only = [parse_triple(t) for t in args.triples.split(";") if t.strip()]
    if args.limit is not None:
        from .labels import enumerate_orbits
        chosen = [o.representative for o in enumerate_orbits()[: args.limit]]
        only = chosen if only is None else [t for t in only if t in chosen]
    cache_path = args.cache
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        if cache_path is None:
            cache_path = out_dir / "records.jsonl"

    def progress(rec):
        print(f"  done {rec.triple} p={rec.prime} -> {rec.count} "
              f"({rec.millis} ms)", file=sys.stderr)

    rows = table_report(config, cache_path=cache_path, only=only,
                        progress=progress)
    if args.format == "records":
        render_records(rows)
    else:
        render_rows(rows)
    if out_dir:
        with (out_dir / "report.txt").open("w") as fh:
            render_rows(rows, stream=fh)
        from .figures import table_figure
        table_figure(rows, out_dir / "intersection_numbers.svg")
        print(f"report written to {out_dir}", file=sys.stderr)
    if any(r.disagreement for r in rows):
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_example(args) -> int:
    from .labels import parse_triple
    from .pipeline import TripleInstance, solve_points
    inst = TripleInstance(parse_triple(WORKED_EXAMPLE["triple"]),
                          WORKED_EXAMPLE["lines"], WORKED_EXAMPLE["prime"])
    print(f"labels {WORKED_EXAMPLE['triple']}, lines "
          f"{WORKED_EXAMPLE['lines']}, p = {WORKED_EXAMPLE['prime']}")
    sol = solve_points(inst)
    print(sol.describe())
    return EXIT_OK


def cmd_theorems(args) -> int:
    from .conic import random_hexad
    from .errors import DegenerateGeometryError
    from .fields import GF
    from .theorems import (all_kirkman_points, all_steiner_points,
                           verify_trivial_concurrency)
    primes = [int(p) for p in args.primes.split(",") if p]
    rng = random.Random(args.seed)
    for p in primes:
        field = GF(p)
        done = 0
        while done < args.hexads:
            try:
                h = random_hexad(field, rng)
                all_steiner_points(h)
                all_kirkman_points(h)
                verify_trivial_concurrency(h)
            except DegenerateGeometryError:
                continue
            done += 1
        print(f"p = {p}: Steiner (20), Kirkman (60) and the common-point "
              f"triple hold on {done} random hexads")
    return EXIT_OK


def cmd_fiber(args) -> int:
    from .theorems import (TRIVIAL_TRIPLE, fiber_degree, kirkman_triple,
                           random_curve_spec, steiner_triple)
    patterns = {
        "steiner": steiner_triple(1, 2, 3),
        "kirkman": kirkman_triple(1, 2, 3, 4),
        "row14": TRIVIAL_TRIPLE,
    }
    wanted = patterns if args.pattern == "all" else {args.pattern: patterns[args.pattern]}
    primes = [int(p) for p in args.primes.split(",") if p]
    letters = [s.strip() for s in args.letters.split(",") if s.strip()]
    for name, triple in wanted.items():
        values = set()
        for p in primes:
            for letter in letters:
                for k in range(args.configs):
                    spec = random_curve_spec(triple, p, args.seed + 7 * k,
                                             fixed_letter=letter)
                    deg = fiber_degree(spec)
                    values.add(deg)
                    print(f"{name}: p={p} letter={letter} config={k} "
                          f"fiber degree = {deg}")
        stable = "stable" if len(values) == 1 else f"UNSTABLE {sorted(values)}"
        print(f"{name}: {stable}")
    return EXIT_OK


def cmd_figure(args) -> int:
    from .figures import hexagram_figure
    from .labels import parse_labels
    from fractions import Fraction
    params = [Fraction(s) for s in args.params.split(",")]
    out = hexagram_figure(params, parse_labels(args.labels), args.out)
    print(f"wrote {out}")
    return EXIT_OK


_HANDLERS = {
    "orbits": cmd_orbits,
    "count": cmd_count,
    "table": cmd_table,
    "example": cmd_example,
    "theorems": cmd_theorems,
    "fiber": cmd_fiber,
    "figure": cmd_figure,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return _HANDLERS[args.command](args)
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except NonGenericLinesError as exc:
        print(f"non-generic failure: {exc}", file=sys.stderr)
        return EXIT_NON_GENERIC
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except HexagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
