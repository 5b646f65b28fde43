"""Command-line front end.

Exit codes: 0 success, 1 at least one verification check failed, 2 usage,
parse or semantic error.
"""

import argparse
import re
import sys

from ffmin.algebra import NEG_INF
from ffmin.curveparse import parse_curve, parse_element, parse_place_spec, parse_places
from ffmin.elements import brute_force_min, euclidean_reduce, minimum
from ffmin.errors import (
    CapExceededError,
    CurveError,
    ParseError,
    PlaceError,
    ReductionError,
)
from ffmin.riemannroch import gap_sequence, mu, mu_singleton
from ffmin.semigroup import semigroup_gaps
from ffmin.verify import SweepConfig, check_cor5_semigroup, family_sweep, single_curve_report


def _fmt(v):
    if v == NEG_INF:
        return "-inf"
    if isinstance(v, (list, tuple)):
        return ", ".join(str(x) for x in v)
    return str(v)


def _table(rows, out):
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k.ljust(width)}  {_fmt(v)}", file=out)


def _single_place(text, curve):
    places = parse_place_spec(text, curve)
    if len(places) != 1:
        labels = ", ".join(P.label() for P in places)
        raise PlaceError(
            f"place spec {text!r} is ambiguous here (expands to {labels}); "
            "pick one with x=<c>,y=<c> or inf+/inf-"
        )
    return places[0]


def cmd_gaps(args, out):
    curve = parse_curve(args.curve).curve()
    P = _single_place(args.place, curve)
    gs = gap_sequence(curve, P)
    _table(
        [
            ("curve", curve.equation()),
            ("place", P.label()),
            ("gaps", list(gs.gaps)),
            ("mu", mu_singleton(curve, P)),
        ],
        out,
    )
    return 0


def cmd_mu(args, out):
    curve = parse_curve(args.curve).curve()
    places = parse_places(args.places, curve)
    res = mu(curve, places, height_bound=args.height)
    _table(
        [
            ("curve", curve.equation()),
            ("places", [P.label() for P in places]),
            ("mu", res.value),
            ("witness", res.witness.render()),
            ("exhaustive", res.exhaustive),
        ],
        out,
    )
    return 0


def cmd_reduce(args, out):
    curve = parse_curve(args.curve).curve()
    x = parse_element(args.element, curve)
    res = euclidean_reduce(x)
    _table(
        [
            ("curve", curve.equation()),
            ("element", x.render()),
            ("y", res.y.render()),
            ("value", res.value),
        ],
        out,
    )
    return 0


def cmd_minimum(args, out):
    curve = parse_curve(args.curve).curve()
    if args.places:
        places = parse_places(args.places, curve)
    else:
        from ffmin.curve import infinity_places

        places = infinity_places(curve)[1]
    res = minimum(curve, places)
    _table(
        [
            ("curve", curve.equation()),
            ("places", [P.label() for P in places]),
            ("status", res.status.value),
            ("value", res.value),
            ("method", res.method.value),
            ("witness", res.witness.render() if res.witness else "-"),
        ],
        out,
    )
    return 0


def cmd_semigroup(args, out):
    s = semigroup_gaps(args.m, args.r)
    _table(
        [
            ("generators", (s.m, s.r)),
            ("gaps", list(s.gaps)),
            ("genus", s.genus),
            ("frobenius", s.frobenius),
        ],
        out,
    )
    return 0


_FAMILY_RE = re.compile(r"p=(\d+),deg=(\d+)(?:\.\.(\d+))?$")


def cmd_verify(args, out):
    cor5 = []
    for spec in args.cor5 or []:
        m = re.fullmatch(r"(\d+),(\d+)", spec)
        if not m:
            raise ParseError(f"bad --cor5 descriptor {spec!r} (use m,r)")
        cor5.append((int(m.group(1)), int(m.group(2))))
    if args.family:
        fm = _FAMILY_RE.fullmatch(args.family)
        if not fm:
            raise ParseError(f"bad --family spec {args.family!r} (use p=<p>,deg=<a>..<b>)")
        p = int(fm.group(1))
        lo = int(fm.group(2))
        hi = int(fm.group(3)) if fm.group(3) else lo
        config = SweepConfig(thm2_samples=args.samples)
        report = family_sweep(p, list(range(lo, hi + 1)), seed=args.seed, config=config)
        for mm, rr in cor5:
            report.add(check_cor5_semigroup(mm, rr))
    elif args.curve:
        curve = parse_curve(args.curve).curve()
        report = single_curve_report(curve, seed=args.seed, samples=args.samples, cor5=cor5)
    else:
        raise ParseError("verify needs a curve or --family")
    if args.json:
        out.write(report.to_ndjson())
    else:
        for o in report.sorted_outcomes():
            status = "PASS" if o.passed else ("SKIP" if o.passed is None else "FAIL")
            print(f"{status} {o.check_id:<16} {o.curve}", file=out)
        s = report.summary()
        print(
            f"total {s['total']}  passed {s['passed']}  failed {s['failed']}"
            f"  skipped {s['skipped']}",
            file=out,
        )
    return 0 if report.failed == 0 else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ffmin",
        description="Euclidean minima, Riemann-Roch spaces and Weierstrass gaps "
        "of hyperelliptic function fields over prime fields.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gaps", help="Weierstrass gap sequence at a rational place")
    sp.add_argument("curve")
    sp.add_argument("--place", required=True)
    sp.set_defaults(func=cmd_gaps)

    sp = sub.add_parser("mu", help="speciality index of a place set")
    sp.add_argument("curve")
    sp.add_argument("--places", required=True)
    sp.add_argument("--height", type=int, default=None)
    sp.set_defaults(func=cmd_mu)

    sp = sub.add_parser("reduce", help="best integral approximation of an element")
    sp.add_argument("curve")
    sp.add_argument("--element", required=True)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("minimum", help="Euclidean minimum for a place set")
    sp.add_argument("curve")
    sp.add_argument("--places", default=None)
    sp.set_defaults(func=cmd_minimum)

    sp = sub.add_parser("semigroup", help="gap data of the numerical semigroup <m, r>")
    sp.add_argument("m", type=int)
    sp.add_argument("r", type=int)
    sp.set_defaults(func=cmd_semigroup)

    sp = sub.add_parser("verify", help="run the named bound checks")
    sp.add_argument("curve", nargs="?", default=None)
    sp.add_argument("--family", default=None, help="p=<p>,deg=<a>..<b>")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--cor5", action="append", default=None, metavar="m,r")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args, sys.stdout)
    except (ParseError, CurveError, PlaceError, ReductionError, CapExceededError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
