"""Command-line entry point.

Exit status: 0 on success or a passing check, 1 when a check or suite finds a
counterexample, 2 on usage, input or I/O errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from hng_c5 import exceptional_shape, find_induced_c5, in_any_family
from hng_config import config
from hng_enumeration import ensure_catalog
from hng_errors import HngError, MissingDependency
from hng_graph import Graph, graph6_decode, graph6_encode
from hng_invariants import invariant_record
from hng_logging import setup_logging
from hng_membership import hereditary_ng_defect, in_hng
from hng_miner import PREDICATES, ObstructionSet, ensure_obstructions, load_obstructions, mine_minimal_fis
from hng_structure import THEOREMS, check_characterization, fast_invariants, line_graph
from hng_types import InvariantPayload
from hng_utils import json_dumps, write_lines_atomic
from hng_validation import int_arg
from hng_verify import SUITES, SuiteOptions, emit_report, run_suite

logger = logging.getLogger("hng")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
OBSTRUCTION_SETS = ("hng1", "claw", "triangle", "line")


def _catalog_dir(args: argparse.Namespace) -> Optional[Path]:
    return None if args.no_cache else config.CATALOG_DIR


def _obstruction_dir(args: argparse.Namespace) -> Optional[Path]:
    return None if args.no_cache else config.OBSTRUCTION_DIR


def _cached_set(name: str, args: argparse.Namespace) -> Optional[ObstructionSet]:
    if args.no_cache:
        return None
    try:
        return load_obstructions(name, config.OBSTRUCTION_DIR)
    except MissingDependency:
        logger.debug(f"No cached {name} set; using the exact scan")
        return None


def _print_json(data) -> None:
    sys.stdout.write(json_dumps(data))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    for n in range(1, args.nmax + 1):
        catalog = ensure_catalog(n, _catalog_dir(args), args.workers, args.progress)
        print(f"n={n}: {len(catalog)} graphs")
        if n == args.nmax and args.out:
            lines = catalog.graph6_lines()
            write_lines_atomic(args.out, lines)
            logger.info(f"Wrote {len(lines)} order-{n} graph(s) to {args.out}")
        elif n == args.nmax and args.graph6:
            for line in catalog.graph6_lines():
                print(line)
    return EXIT_OK


def cmd_mine(args: argparse.Namespace) -> int:
    found = mine_minimal_fis(args.predicate, args.nmax, cache_dir=_catalog_dir(args), workers=args.workers,
                             progress=args.progress)
    lines = found.graph6_lines()
    if args.out:
        write_lines_atomic(args.out, lines)
        logger.info(f"Wrote {len(lines)} obstruction(s) to {args.out}")
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_derive(args: argparse.Namespace) -> int:
    result = ensure_obstructions(args.set, args.nmax, directory=_obstruction_dir(args),
                                 catalog_dir=_catalog_dir(args), workers=args.workers, progress=args.progress)
    _print_json(result.sidecar())
    return EXIT_OK


def invariants_payload(g: Graph, F: Optional[ObstructionSet] = None) -> Dict:
    record = invariant_record(g)
    payload = InvariantPayload(
        graph6=graph6_encode(g),
        order=g.order,
        edges=g.edge_count,
        omega=record.omega,
        alpha=record.alpha,
        chi=record.chi,
        theta=record.theta,
        nu=record.nu,
        flags=record.flags,
    )
    data: Dict = dict(payload)
    if g.order <= config.SCAN_ORDER_CAP:
        report = hereditary_ng_defect(g)
        data.update(defect=report.defect, hereditary_defect=report.hereditary_defect, witness=list(report.witness))
        if report.hereditary_defect <= 1:
            fast = fast_invariants(g, F).to_dict()
            exact = {"omega": record.omega, "alpha": record.alpha, "chi": record.chi, "theta": record.theta}
            data["fast"] = dict(fast, agrees=fast == exact)
    return data


def cmd_invariants(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    _print_json(invariants_payload(g, _cached_set("hng1", args)))
    return EXIT_OK


def cmd_membership(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    report = hereditary_ng_defect(g)
    _print_json({
        "graph6": graph6_encode(g),
        "a": args.a,
        "defect": report.defect,
        "hereditary_defect": report.hereditary_defect,
        "witness": list(report.witness),
        "in_ng": report.defect <= args.a,
        "in_hng": in_hng(g, args.a),
    })
    return EXIT_OK


def cmd_profile_c5(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    found = find_induced_c5(g)
    family = in_any_family(g)
    _print_json({
        "graph6": graph6_encode(g),
        "profile": found.to_dict() if found else None,
        "family": family.value if family else None,
        "exceptional_shape": exceptional_shape(g),
    })
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    sets: Dict[str, ObstructionSet] = {}
    # each characterisation is named after the obstruction set it needs
    needed = args.theorem
    if args.no_cache:
        sets[needed] = ensure_obstructions(needed, args.nmax)
    else:
        sets[needed] = load_obstructions(needed, config.OBSTRUCTION_DIR)
    if args.theorem == "line" and line_graph(g).order > config.SCAN_ORDER_CAP:
        hng1 = _cached_set("hng1", args)
        if hng1 is not None:
            sets["hng1"] = hng1
    result = check_characterization(args.theorem, g, sets)
    _print_json(result.to_dict())
    return EXIT_OK if result.consistent else EXIT_FAIL


def cmd_fast_invariants(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    _print_json(dict(fast_invariants(g, _cached_set("hng1", args)).to_dict(), graph6=graph6_encode(g)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    options = SuiteOptions(
        nmax=args.nmax,
        amax=args.amax,
        seed=args.seed,
        samples=args.samples,
        workers=args.workers,
        catalog_dir=_catalog_dir(args),
        obstruction_dir=_obstruction_dir(args),
        progress=args.progress,
    )
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    suffix = "json" if args.format == "json" else "txt"
    failed: List[str] = []
    for name in names:
        report = run_suite(name, options)
        if args.out and len(names) > 1:
            out: Optional[Path] = Path(args.out) / f"{name}.{suffix}"
        else:
            out = Path(args.out) if args.out else None
        text = emit_report(report, args.format, out, include_timing=args.timing)
        if out is None:
            sys.stdout.write(text)
        if not report.passed:
            failed.append(name)
    if failed:
        logger.warning(f"Failing suites: {', '.join(failed)}")
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hng_cli.py", description=config.APP_TITLE)
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.APP_VERSION}")
    parser.add_argument("--cache-dir", type=Path, default=None, help="overrides HNG_CACHE_DIR")
    parser.add_argument("--no-cache", action="store_true", help="keep catalogs and sets in memory only")
    parser.add_argument("--workers", type=int_arg(1, 256), default=config.WORKERS)
    parser.add_argument("--progress", action="store_true")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="build graph catalogs up to order --n")
    p.add_argument("--n", "--nmax", dest="nmax", type=int_arg(1, config.ENUM_ORDER_CAP), default=config.DEFAULT_NMAX)
    p.add_argument("--graph6", action="store_true", help="print the top-order catalog")
    p.add_argument("--out", type=Path, default=None, help="write the top-order catalog as graph6 lines")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("mine", help="minimal obstructions of a hereditary predicate")
    p.add_argument("--class", "--predicate", dest="predicate", required=True, help=f"{', '.join(sorted(PREDICATES))} or hng-<a>")
    p.add_argument("--nmax", type=int_arg(1, config.ENUM_ORDER_CAP), default=config.DEFAULT_NMAX)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=cmd_mine)

    p = sub.add_parser("derive", help="derive and cache an obstruction set")
    p.add_argument("--set", choices=OBSTRUCTION_SETS, required=True)
    p.add_argument("--nmax", type=int_arg(1, 8), default=8)
    p.set_defaults(handler=cmd_derive)

    for name, handler, help_text in (
        ("invariants", cmd_invariants, "exact invariants, defects and class flags"),
        ("profile-c5", cmd_profile_c5, "types of outside vertices against the first induced C5"),
        ("fast-invariants", cmd_fast_invariants, "ω, α, χ, θ by the 1-HNG algorithms"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph6")
        p.set_defaults(handler=handler)

    p = sub.add_parser("membership", help="a-NG and a-HNG membership")
    p.add_argument("graph6")
    p.add_argument("--a", type=int_arg(0, 64), default=1)
    p.set_defaults(handler=cmd_membership)

    p = sub.add_parser("check", help="evaluate the clauses of a characterisation")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--nmax", type=int_arg(1, 8), default=8, help="order for sets derived with --no-cache")
    p.add_argument("graph6")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--nmax", type=int_arg(1, config.ENUM_ORDER_CAP), default=config.DEFAULT_NMAX)
    p.add_argument("--amax", type=int_arg(1, 16), default=config.DEFAULT_AMAX)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--samples", type=int_arg(0), default=config.DEFAULT_SAMPLES)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="report file, or directory with --suite all")
    p.add_argument("--timing", action="store_true", help="include per-phase timings")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir is not None:
        config.CACHE_DIR = args.cache_dir.resolve()
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else config.log_level
    log_dir = None
    if not args.no_cache:
        config.ensure_directories()
        log_dir = config.LOG_DIR
    setup_logging(log_dir, level)
    try:
        return args.handler(args)
    except MissingDependency as e:
        print(f"error: {e}", file=sys.stderr)
        if e.hint:
            print(f"hint: {e.hint}", file=sys.stderr)
        return EXIT_USAGE
    except HngError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
