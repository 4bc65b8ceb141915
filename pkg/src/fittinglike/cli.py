"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a size cap
was hit where the computation cannot be skipped.

Every ``--max-*`` flag falls back to ``FITTINGLIKE_MAX_ORDER``,
``FITTINGLIKE_MAX_ELEMENTS`` and ``FITTINGLIKE_MAX_DEGREE``.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .catalog import CATALOG, get_entry
from .config import CapExceeded, Caps, GroupError, using_caps
from .functorials import evaluate
from .group import Group
from .heights import h_gamma
from .parsing import ParseError, parse_functorial, parse_group_file
from .radicals import radical
from .suite import SUITES, resolve_suites, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_group(source: str) -> Group:
    """A ``.grp`` path, or a catalog name such as ``S4``."""
    p = Path(source)
    if p.is_file():
        return parse_group_file(p.read_text(encoding="utf-8"))
    try:
        return get_entry(source).load()
    except GroupError:
        raise InputError(f"{source!r} is neither a readable file nor a catalog name") from None


def _caps(args: argparse.Namespace) -> Caps:
    caps = Caps.from_env()
    over = {k: getattr(args, k) for k in ("max_order", "max_elements", "max_degree") if getattr(args, k) is not None}
    return dataclasses.replace(caps, **over)


def _print_subgroup(s) -> None:
    print(f"order: {s.order}")
    gens = " ".join(str(p) for p in s.generators) or "()"
    print(f"generators: {gens}")


def cmd_compute(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    if bool(args.radical) == bool(args.functorial):
        raise InputError("give exactly one of --radical or --functorial")
    if args.radical:
        try:
            res = radical(g, args.radical)
        except GroupError as exc:
            if isinstance(exc, CapExceeded):
                raise
            raise InputError(str(exc)) from None
        _print_subgroup(res.value)
        for k, v in res.witness.items():
            print(f"{k}: {v}")
    else:
        _print_subgroup(evaluate(parse_functorial(args.functorial), g))
    return EXIT_OK


def cmd_height(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    print(h_gamma(g, parse_functorial(args.functorial)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        suites = resolve_suites(args.suite)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    entries = list(CATALOG)
    if args.only:
        try:
            entries = [get_entry(n) for n in args.only]
        except GroupError as exc:
            raise InputError(str(exc)) from None

    def progress(gr) -> None:
        fails = sum(r.status == "FAIL" for r in gr.results)
        skips = sum(r.status == "SKIPPED" for r in gr.results)
        if not args.quiet:
            print(f"{gr.name:<14} order {gr.order:<5} {len(gr.results) - fails - skips} pass, "
                  f"{fails} fail, {skips} skipped", file=sys.stderr)

    report = run_suite(entries, caps=_caps(args), suites=suites, progress=progress, workers=args.jobs)
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
    counts = report.counts()
    print(f"PASS {counts['PASS']}  FAIL {counts['FAIL']}  SKIPPED {counts['SKIPPED']}")
    for name, r in report.results():
        if r.status == "FAIL":
            print(f"FAIL {name} {r.suite}/{r.check}: {r.details}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace) -> int:
    for e in CATALOG:
        print(f"{e.name:<14} {e.order:>5}  {e.construction.describe()}")
    return EXIT_OK


def cmd_parse_check(args: argparse.Namespace) -> int:
    if not args.functorial and not args.group:
        raise InputError("give --functorial and/or --group")
    if args.functorial:
        print(parse_functorial(args.functorial))
    if args.group:
        p = Path(args.group)
        if not p.is_file():
            raise InputError(f"no such file: {args.group}")
        g = parse_group_file(p.read_text(encoding="utf-8"))
        print(f"degree: {g.degree}")
        print(f"order: {g.order}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fittinglike", description=__doc__.splitlines()[0])
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-order", type=int, help="subgroup enumeration cap (default 200)")
    caps.add_argument("--max-elements", type=int, help="element enumeration cap (default 10^6)")
    caps.add_argument("--max-degree", type=int, help="quotient degree and Cayley table cap (default 5000)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[caps], help="evaluate a named radical or a functorial")
    p.add_argument("--group", required=True, help=".grp file or catalog name")
    p.add_argument("--radical", help="F, Fstar, Ftilde, Phi, Soc, ASoc, or a cross-check variant")
    p.add_argument("--functorial", help="expression such as 'Phi_pi{2} * Fstar'")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("height", parents=[caps], help="height along a functorial series")
    p.add_argument("--group", required=True)
    p.add_argument("--functorial", default="Fstar")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("verify", parents=[caps], help="run verification suites over the catalog")
    p.add_argument("--suite", nargs="+", default=["all"], help=f"all or any of: {', '.join(SUITES)}")
    p.add_argument("--only", nargs="+", help="restrict to these catalog names")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="groups to run concurrently")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="catalog commands")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list", help="list catalog entries").set_defaults(func=cmd_catalog)

    p = sub.add_parser("parse-check", help="parse an expression or a group file and echo it")
    p.add_argument("--functorial")
    p.add_argument("--group")
    p.set_defaults(func=cmd_parse_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = _caps(args) if hasattr(args, "max_order") else Caps.from_env()
    try:
        with using_caps(caps):
            return args.func(args)
    except (InputError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
