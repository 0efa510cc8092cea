"""Command-line front end: build graphs and diagrams, run the verification
suites, sweep epsilon vectors, and export JSON/DOT/TikZ.

Exit codes: 0 all assertions pass, 1 a verification assertion failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .diagrams import diagram_theta, diagram_y
from .graphs import (
    GradingParams,
    GraphError,
    ParityTable,
    build_theta,
    build_y,
    order,
)
from .pairing import (
    HairyGraphSpec,
    PlainGraph,
    cardinality_report,
    counting_formula,
    enumerate_structures,
    matchings,
    pairing_value,
    stu_resolutions,
    verify_theta,
    verify_y,
    FormalSum,
)
from .ribbons import from_signed_diagram, standard_cross_changes, sweep_epsilon

SCHEMA = "graphpair/1"


def _frac(s: str) -> Fraction:
    return Fraction(s)


def _weights(s: str) -> list:
    return [_frac(w) for w in s.split(",") if w.strip()]


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _parity(args) -> ParityTable:
    if getattr(args, "parity_table", None):
        with open(args.parity_table) as f:
            return ParityTable.from_json_dict(json.load(f))
    return ParityTable.from_dimensions(GradingParams(args.n, args.j))


def _family(args) -> HairyGraphSpec:
    if args.theta is not None:
        return HairyGraphSpec("theta", tuple(args.theta))
    if args.y is not None:
        return HairyGraphSpec("y", tuple(args.y))
    raise GraphError("pass --theta p q r or --y p1 p2 p3 p4 p5 p6")


def _add_common(sp, family=False):
    sp.add_argument("--n", type=int, default=5, help="ambient dimension (default 5)")
    sp.add_argument("--j", type=int, default=3, help="source dimension (default 3)")
    sp.add_argument("--parity-table", help="path to a parity table JSON file")
    sp.add_argument("--out", help="write output to this path instead of stdout")
    sp.add_argument("--format", choices=("json", "dot", "tikz"), default="json")
    if family:
        sp.add_argument("--theta", type=int, nargs=3, metavar=("P", "Q", "R"))
        sp.add_argument("--y", type=int, nargs=6, metavar=tuple(f"P{i}" for i in range(1, 7)))


def _report_payload(rep, args):
    return rep.to_json_dict(include_timing=getattr(args, "timing", False))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="graphpair",
        description="graph-on-chord-diagram pairing toolkit for 2- and 3-loop hairy families",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("build-theta", help="build the 2-loop hairy graph")
    sp.add_argument("p", type=int), sp.add_argument("q", type=int), sp.add_argument("r", type=int)
    _add_common(sp)

    sp = sub.add_parser("build-y", help="build the 3-loop hairy graph")
    for i in range(1, 7):
        sp.add_argument(f"p{i}", type=int)
    _add_common(sp)

    sp = sub.add_parser("diagram", help="chord diagram of a hairy family member")
    _add_common(sp, family=True)

    sp = sub.add_parser("enum-structures", help="graph-on-diagram structures")
    _add_common(sp, family=True)
    sp.add_argument("--good-only", action="store_true")

    sp = sub.add_parser("pair", help="pairing value of a graph JSON against a diagram")
    sp.add_argument("--graph", required=True, help="path to a PlainGraph JSON file")
    _add_common(sp, family=True)

    sp = sub.add_parser("counting", help="counting formula over the resolution family")
    _add_common(sp, family=True)
    sp.add_argument("--weights", type=_weights, required=True)
    sp.add_argument("--good-only", action="store_true")

    sp = sub.add_parser("verify-theta", help="2-loop counting identity report")
    sp.add_argument("p", type=int), sp.add_argument("q", type=int), sp.add_argument("r", type=int)
    _add_common(sp)
    sp.add_argument("--weights", type=_weights)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("verify-y", help="3-loop counting identity report")
    for i in range(1, 7):
        sp.add_argument(f"p{i}", type=int)
    _add_common(sp)
    sp.add_argument("--weights", type=_weights)
    sp.add_argument("--good-only", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("ribbon", help="ribbon presentation of a family diagram")
    _add_common(sp, family=True)
    sp.add_argument("--cross-changes", action="store_true", help="apply the standard recipe")

    sp = sub.add_parser("sweep-epsilon", help="degeneracy table over all epsilon vectors")
    _add_common(sp, family=True)

    sp = sub.add_parser("census", help="per-line structure counts vs closed forms")
    sp.add_argument("--max-t", type=int, default=4)
    sp.add_argument("--out")

    sp = sub.add_parser("export", help="export graph/diagram/ribbon in a chosen format")
    _add_common(sp, family=True)
    sp.add_argument("--what", choices=("graph", "diagram", "ribbon"), default="diagram")

    try:
        args = ap.parse_args(argv)
        return _dispatch(args)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    pt = _parity(args) if hasattr(args, "n") else None

    if args.cmd == "build-theta":
        g = build_theta(args.p, args.q, args.r)
        _emit(args, g.to_dot() if args.format == "dot" else {"schema": SCHEMA, **g.to_json_dict(), "order": order(g)})
        return 0

    if args.cmd == "build-y":
        g = build_y(args.p1, args.p2, args.p3, args.p4, args.p5, args.p6)
        _emit(args, g.to_dot() if args.format == "dot" else {"schema": SCHEMA, **g.to_json_dict(), "order": order(g)})
        return 0

    if args.cmd == "diagram":
        d = _family(args).diagram()
        _emit(args, d.to_tikz() if args.format == "tikz" else {"schema": SCHEMA, **d.to_json_dict()})
        return 0

    if args.cmd == "enum-structures":
        spec = _family(args)
        ss = enumerate_structures(spec.diagram(), args.good_only)
        _emit(
            args,
            {
                "schema": SCHEMA,
                "family": spec.family,
                "hairs": list(spec.hairs),
                "good_only": args.good_only,
                "count": len(ss),
                "structures": [
                    {"parents": [list(p) for p in s.parents], "good": s.is_good_structure()}
                    for s in ss
                ],
            },
        )
        return 0

    if args.cmd == "pair":
        with open(args.graph) as f:
            g = PlainGraph.from_json_dict(json.load(f))
        d = _family(args).diagram()
        ms = matchings(g, d, pt)
        _emit(
            args,
            {
                "schema": SCHEMA,
                "matchings": len(ms),
                "value": {"num": pairing_value(g, d, pt), "den": 1},
            },
        )
        return 0

    if args.cmd == "counting":
        spec = _family(args)
        res = stu_resolutions(spec, args.good_only)
        if len(args.weights) != len(res):
            raise GraphError(f"need {len(res)} weights, got {len(args.weights)}")
        rep = (
            verify_theta(*spec.hairs, weights=args.weights, pt=pt)
            if spec.family == "theta"
            else verify_y(spec.hairs, args.weights, pt, args.good_only)
        )
        _emit(args, {"schema": SCHEMA, "value": {"num": rep.value.numerator, "den": rep.value.denominator}})
        return 0 if rep.passed else 1

    if args.cmd in ("verify-theta", "verify-y"):
        if args.cmd == "verify-theta":
            spec = HairyGraphSpec("theta", (args.p, args.q, args.r))
            good_only = False
        else:
            spec = HairyGraphSpec("y", (args.p1, args.p2, args.p3, args.p4, args.p5, args.p6))
            good_only = args.good_only
        n_res = len(stu_resolutions(spec, good_only))
        weights = args.weights
        if weights is None:
            rng = random.Random(args.seed)
            weights = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n_res)]
        if args.cmd == "verify-theta":
            rep = verify_theta(*spec.hairs, weights=weights, pt=pt)
        else:
            rep = verify_y(spec.hairs, weights, pt, good_only)
        _emit(args, _report_payload(rep, args))
        return 0 if rep.passed else 1

    if args.cmd == "ribbon":
        p = from_signed_diagram(_family(args).diagram())
        if args.cross_changes:
            p = standard_cross_changes(p)
        _emit(args, {"schema": SCHEMA, **p.to_json_dict()})
        return 0

    if args.cmd == "sweep-epsilon":
        spec = _family(args)
        p = from_signed_diagram(spec.diagram())
        rows = sweep_epsilon(p)
        ok = all(
            row["degenerate"] == (not all(e == 1 for e in row["epsilon"])) for row in rows
        )
        _emit(
            args,
            {
                "schema": SCHEMA,
                "family": spec.family,
                "hairs": list(spec.hairs),
                "rows": rows,
                "negative-entries-imply-degenerate": ok,
            },
        )
        return 0 if ok else 1

    if args.cmd == "census":
        _emit(args, {"schema": SCHEMA, **cardinality_report(args.max_t)})
        return 0

    if args.cmd == "export":
        spec = _family(args)
        if args.what == "graph":
            g = build_theta(*spec.hairs) if spec.family == "theta" else build_y(*spec.hairs)
            _emit(args, g.to_dot() if args.format == "dot" else {"schema": SCHEMA, **g.to_json_dict()})
        elif args.what == "diagram":
            d = spec.diagram()
            _emit(args, d.to_tikz() if args.format == "tikz" else {"schema": SCHEMA, **d.to_json_dict()})
        else:
            _emit(args, {"schema": SCHEMA, **from_signed_diagram(spec.diagram()).to_json_dict()})
        return 0

    raise GraphError(f"unknown command {args.cmd}")


if __name__ == "__main__":
    sys.exit(main())
