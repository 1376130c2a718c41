"""Command-line entry point: ``smult <command> ...``."""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from . import monomial as mono
from .config import load_suite_file, parse_rational, shipped_suite
from .errors import SmultError
from .harness import (
    THEOREMS,
    decimal_string,
    exit_code,
    rational,
    report_csv,
    run_suite,
    summary,
    table_command,
)
from .limits import HQuery, e_estimate, endpoint_multiplicities, h_estimate, interpolation_profile
from .ring import ModuleSpec, RingPresentation, parse_ring, quadric, ring_from_fields


def load_ring(text: str, p=None) -> RingPresentation:
    """Inline spec, ``quadric:D``, ``regular:N``, or a file holding either."""
    if os.path.isfile(text):
        with open(text, "r", encoding="utf-8") as fh:
            body = fh.read()
        if text.endswith(".toml"):
            import tomli
            table = tomli.loads(body)
            ring = ring_from_fields(table.get("ring", table))
        else:
            lines = [ln.split("#", 1)[0].strip() for ln in body.splitlines()]
            ring = parse_ring("; ".join(ln for ln in lines if ln))
    elif text.startswith("quadric:"):
        ring = quadric(p or 3, int(text.split(":", 1)[1]))
    elif text.startswith("regular:"):
        ring = RingPresentation.polynomial(p or 3, int(text.split(":", 1)[1]))
    else:
        ring = parse_ring(text)
    if p is not None and p != ring.p:
        ring = dataclasses.replace(ring, p=p, poly_relations=tuple(
            dataclasses.replace(f, p=p) for f in ring.poly_relations))
    return ring


def _ideal(text: str, ring: RingPresentation):
    return ring.maximal_ideal() if text.strip() == "m" else mono.parse_ideal(text, ring.nvars)


def _module(text, ring: RingPresentation) -> ModuleSpec:
    if not text:
        return ModuleSpec.free(ring.nvars)
    parts = [t.strip() for t in text.split(";") if t.strip()]
    summands = [mono.MonomialIdeal.zero(ring.nvars) if t in ("0", "R") else _ideal(t, ring)
                for t in parts]
    return ModuleSpec(tuple(summands))


def _s_list(text: str) -> list:
    return [parse_rational(x) for x in text.split(",") if x.strip()]


def _e_range(args) -> list:
    return list(range(args.e_min, args.e_max + 1))


def _print_estimate(est, label=""):
    print("e,q,length,normalized,decimal")
    for x in est.samples:
        print(f"{x.e},{x.q},{x.length},{rational(x.normalized)},{decimal_string(x.normalized, 12)}")
    print(f"richardson{label},{rational(est.richardson)},{decimal_string(est.richardson, 12)}")
    if est.gap is not None:
        print(f"gap,{rational(est.gap)},{decimal_string(est.gap, 12)}")


def _query(args, s):
    ring = load_ring(args.ring, args.p)
    return HQuery(ring, _module(args.module, ring), _ideal(args.I, ring), _ideal(args.J, ring),
                  s, _e_range(args), args.dim)


def cmd_hs(args) -> int:
    for s in _s_list(args.s):
        print(f"# s = {rational(s)}")
        _print_estimate(h_estimate(_query(args, s)))
    return 0


def cmd_es(args) -> int:
    for s in _s_list(args.s):
        print(f"# s = {rational(s)}")
        _print_estimate(e_estimate(_query(args, s)))
    return 0


def cmd_endpoints(args) -> int:
    ring = load_ring(args.ring, args.p)
    I = _ideal(args.I, ring)
    module = _module(args.module, ring)
    hk, hs = endpoint_multiplicities(ring, module, I, _e_range(args), args.dim)
    print("# Hilbert-Kunz")
    _print_estimate(hk)
    print("# Hilbert-Samuel")
    _print_estimate(hs)
    if ring.dim >= 1 and args.dim is None:
        print("# interpolation (reported, not asserted)")
        print("s,e_s,target,target_value,distance")
        for pt in interpolation_profile(ring, I, _e_range(args), module=module):
            print(f"{rational(pt.s)},{rational(pt.e_s)},{pt.target},"
                  f"{rational(pt.target_value)},{rational(pt.distance)}")
    return 0


def cmd_table(args) -> int:
    ring = load_ring(args.ring, args.p)
    text = table_command(ring, _ideal(args.I, ring), _ideal(args.J, ring), _s_list(args.s),
                         _e_range(args), _module(args.module, ring), args.dim)
    _emit(text, args.out)
    return 0


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _override(specs, args):
    if args.tolerance is None:
        return specs
    tol = parse_rational(args.tolerance)
    return [dataclasses.replace(s, tolerance=tol) for s in specs]


def _finish(reports, args) -> int:
    csv_text = report_csv(reports)
    if args.out:
        _emit(csv_text, args.out)
    else:
        sys.stdout.write(csv_text)
    print(summary(reports), file=sys.stderr if not args.out else sys.stdout)
    return exit_code(reports)


def cmd_check(args) -> int:
    if args.theorem not in THEOREMS:
        print(f"unknown theorem id {args.theorem!r}; choose from {', '.join(THEOREMS)}",
              file=sys.stderr)
        return 2
    suite = load_suite_file(args.config) if args.config else shipped_suite()
    specs = [c for c in suite.checks if c.theorem_id == args.theorem]
    if not specs:
        print(f"no {args.theorem} check in the configuration", file=sys.stderr)
        return 2
    return _finish(run_suite(_override(specs, args), args.workers), args)


def cmd_suite(args) -> int:
    suite = load_suite_file(args.config)
    return _finish(run_suite(_override(suite.checks, args), args.workers), args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smult", description="h-functions and s-multiplicities of presented rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_args(p, with_j=True, with_s=True):
        p.add_argument("--ring", required=True,
                       help="inline spec 'p=3; n=2; mono=(x1*x2); dim=1', quadric:D, "
                            "regular:N, or a file")
        p.add_argument("--p", type=int, help="override the characteristic")
        p.add_argument("--I", default="m", help="ideal I, e.g. '(x1^2, x2)'; m = maximal")
        if with_j:
            p.add_argument("--J", default="m", help="ideal J for the bracket power")
        if with_s:
            p.add_argument("--s", default="1", help="comma-separated rationals")
        p.add_argument("--module", default=None,
                       help="summands J_i separated by ';' (0 = free); default R")
        p.add_argument("--dim", type=int, default=None, help="normalizing dimension")
        p.add_argument("--e-min", type=int, default=1)
        p.add_argument("--e-max", type=int, default=3)

    for name, fn, doc in (("hs", cmd_hs, "h_s samples and extrapolation"),
                          ("es", cmd_es, "s-multiplicity samples")):
        p = sub.add_parser(name, help=doc)
        ring_args(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("endpoints", help="Hilbert-Kunz and Hilbert-Samuel estimates")
    ring_args(p, with_j=False, with_s=False)
    p.set_defaults(func=cmd_endpoints)

    p = sub.add_parser("table", help="CSV of samples over an s grid")
    ring_args(p)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_table)

    for name, fn in (("check", cmd_check), ("suite", cmd_suite)):
        p = sub.add_parser(name, help="run theorem checks" if name == "suite"
                           else "run the checks for one theorem id")
        if name == "check":
            p.add_argument("theorem", help="theorem id, e.g. T4.2")
            p.add_argument("--config", help="suite file (default: shipped examples)")
        else:
            p.add_argument("config", help="suite file (TOML)")
        p.add_argument("--tolerance", help="absolute tolerance for every check")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="write report CSV here")
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SmultError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
