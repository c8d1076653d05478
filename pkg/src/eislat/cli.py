"""Command-line driver: verification suites, null-vector reduction and
classification of negative vectors.

Coordinates are Eisenstein integers written as '3', '-1+2w', '2-wb' or
'1+2*w' (w = omega, wb = omega-bar), given as one comma-separated argument.
Put '--' before an argument that starts with '-'.

Exit codes: 0 success, 1 verification failure or invalid mathematical input,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .eisenstein import parse_eis
from .hermitian import DIAG5, HYP5, LatVec, diag_to_hyp
from .matrix import to_pairs
from .suites import DEFAULT_SEED, SCHEMA, SUITES, SuiteConfig, run

SUITE_CHOICES = list(SUITES) + ["all"]


def _parse_coords(text: str) -> tuple:
    parts = [p for p in text.split(",")]
    if len(parts) != 5:
        raise ValueError(f"expected 5 comma-separated coordinates, got {len(parts)}")
    return tuple(parse_eis(p) for p in parts)


def _dump(obj: dict, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _fail(msg: str, path: str | None, **data) -> int:
    print(f"error: {msg}", file=sys.stderr)
    _dump({"schema": SCHEMA, "error": msg, **data}, path)
    return 1


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = SuiteConfig(bound=args.bound, seed=args.seed)
    t0 = time.perf_counter()
    report = run(names, cfg)
    if args.timings:
        # timings go to stderr only, so the JSON stays reproducible
        print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    for s in report["suites"]:
        for c in s["checks"]:
            if c["status"] == "fail":
                print(f"FAIL [{s['suite']}] {c['name']}", file=sys.stderr)
    _dump(report, args.json)
    return 0 if report["passed"] else 1


def cmd_reduce_null(args) -> int:
    from .gamma import ReductionError, reduce_null

    try:
        coords = _parse_coords(args.vector)
    except ValueError as exc:
        return _fail(str(exc), args.json)
    if args.frame == "diag":
        coords = diag_to_hyp(LatVec(coords, DIAG5)).coords
    if HYP5.norm(coords) != 0:
        return _fail("vector is not null", args.json, norm=HYP5.norm(coords))
    try:
        cert = reduce_null(coords, normalize_unit=args.to_rho, powers=(1,) if args.basic else (1, 2, 3, 4, 5), extended=not args.basic)
    except ReductionError as exc:
        return _fail(str(exc), args.json)
    out = {"schema": SCHEMA, "certificate": cert.to_json(), "verified": cert.verify()}
    _dump(out, args.json)
    return 0 if out["verified"] else 1


def cmd_classify(args) -> int:
    from .classify import gluing_profile, identify, is_primitive, orthogonal_short_roots

    try:
        coords = _parse_coords(args.vector)
    except ValueError as exc:
        return _fail(str(exc), args.json)
    v = LatVec(coords, DIAG5)
    if v.norm() >= 0:
        return _fail("vector must have negative norm", args.json, norm=v.norm())
    roots = orthogonal_short_roots(v)
    name = identify(v)
    out = {
        "schema": SCHEMA,
        "vector": to_pairs(v.coords),
        "norm": v.norm(),
        "orthogonal_short_roots": len(roots),
        "primitive": is_primitive(v),
        "gluing": gluing_profile(v).to_json() if is_primitive(v) else None,
        "identification": {"diagonal": "diagonal point", "fermat": "Fermat point"}.get(name),
    }
    _dump(out, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eislat", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"eislat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and print a JSON report")
    v.add_argument("suite_pos", nargs="?", choices=SUITE_CHOICES, metavar="SUITE", help=f"one of {', '.join(SUITE_CHOICES)}")
    v.add_argument("--suite", choices=SUITE_CHOICES, default=None, help="same as the positional SUITE (default: all)")
    v.add_argument("--bound", type=int, default=3, help="root enumeration bound on norm(v0) (default: 3)")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default: {DEFAULT_SEED})")
    v.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    v.add_argument("--timings", action="store_true", help="print elapsed time to stderr")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce-null", help="reduce a primitive null vector to a unit multiple of rho")
    r.add_argument("vector", help="five comma-separated coordinates")
    r.add_argument("--frame", choices=["hyp", "diag"], default="hyp", help="coordinate frame of the input (default: hyp)")
    r.add_argument("--to-rho", action="store_true", help="continue to rho itself instead of a unit multiple")
    r.add_argument("--basic", action="store_true", help="only hexflections in height-1 roots with simple translations")
    r.add_argument("--json", metavar="PATH", help="also write the certificate to PATH")
    r.set_defaults(func=cmd_reduce_null)

    c = sub.add_parser("classify", help="orthogonal short roots and gluing data of a negative vector (DIAG5 frame)")
    c.add_argument("vector", help="five comma-separated coordinates")
    c.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    c.set_defaults(func=cmd_classify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.suite and args.suite_pos and args.suite != args.suite_pos:
            parser.error("conflicting suite names")
        args.suite = args.suite or args.suite_pos or "all"
        if args.bound < 1:
            parser.error("--bound must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
