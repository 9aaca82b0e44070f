"""Command line entry point: ``cosetlattice analyze | scan | verify-paper``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analysis import AnalysisOptions, analyze_interval, scan_catalog
from .catalog import find_entry, fixture_path, load_catalog
from .config import load_config, set_limits
from .errors import CatalogError, ConsistencyError, CosetLatticeError

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _parser():
    p = argparse.ArgumentParser(prog="cosetlattice", description="Lattice invariants of subgroup intervals [H, G].")
    p.add_argument("--config", help="JSON file with limit overrides")
    p.add_argument("--max-group-order", type=int, help="enumeration cap (overrides config)")
    p.add_argument("--max-faces", type=int, help="order complex face cap (overrides config)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze [G_0, G] for one catalog entry")
    a.add_argument("--catalog", default=None, help="catalog file (default: bundled fixtures)")
    a.add_argument("--degree", type=int, required=True)
    a.add_argument("--id", type=int, required=True)
    a.add_argument("--homology", action="store_true")
    a.add_argument("--cm", action="store_true")
    a.add_argument("--el", action="store_true")
    a.add_argument("--no-lambda", action="store_true")

    s = sub.add_parser("scan", help="analyze every entry of a catalog into a JSON-lines log")
    s.add_argument("--catalog", default=None)
    s.add_argument("--filter", choices=["boolean"], default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", required=True)
    s.add_argument("--homology", action="store_true")
    s.add_argument("--no-cm", action="store_true", help="skip the Cohen-Macaulay check")
    s.add_argument("--el", action="store_true")

    v = sub.add_parser("verify-paper", help="run the acceptance checks against the published values")
    v.add_argument("--out", help="write the report (JSON) here")
    v.add_argument("--catalog", default=None, help="fixture catalog to use (default: bundled)")
    v.add_argument("--no-homology", action="store_true", help="skip checks that need Betti numbers")
    v.add_argument("--no-stretch", action="store_true", help="skip the PSL(4,2) Borel check")
    return p


def _catalog(path):
    return load_catalog(path or fixture_path())


def _cmd_analyze(args):
    entry = find_entry(_catalog(args.catalog), args.degree, args.id)
    opts = AnalysisOptions(homology=args.homology, cm=args.cm, el=args.el, lam=not args.no_lambda)
    print(json.dumps(analyze_interval(entry, opts), indent=2))
    return EXIT_OK


def _cmd_scan(args):
    entries = _catalog(args.catalog)
    opts = AnalysisOptions(homology=args.homology, cm=not args.no_cm, el=args.el)
    summary = scan_catalog(entries, filter=args.filter, jobs=args.jobs, out_path=args.out, options=opts)
    print(json.dumps(summary, indent=2))
    return EXIT_OK


def _cmd_verify(args):
    from .verify import FAIL, run_all

    entries = _catalog(args.catalog)
    results = run_all(homology=not args.no_homology, stretch=not args.no_stretch, entries=entries)
    for c in results:
        print(c.line)
    failed = [c for c in results if c.status == FAIL]
    skipped = [c for c in results if c.status != FAIL and c.status != "pass"]
    print(f"{len(results) - len(failed) - len(skipped)} passed, {len(failed)} failed, {len(skipped)} skipped")
    if args.out:
        Path(args.out).write_text(json.dumps([c.__dict__ for c in results], indent=2) + "\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.config:
            load_config(args.config)
        set_limits(max_group_order=args.max_group_order, max_faces=args.max_faces)
        handler = {"analyze": _cmd_analyze, "scan": _cmd_scan, "verify-paper": _cmd_verify}[args.command]
        return handler(args)
    except (CatalogError, KeyError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as err:
        print(f"mismatch: {err}", file=sys.stderr)
        return EXIT_MISMATCH
    except CosetLatticeError as err:
        print(f"error: {err.code}: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
