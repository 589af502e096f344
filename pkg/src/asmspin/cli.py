"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (the validator witness is
printed to stderr), 2 on a usage error.  Counts print as decimal strings
and rationals as "p/q" strings, so no output ever assumes a machine word
width.  All commands are deterministic; --threads is accepted for
interface stability and never changes any result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bijections, jsonio, size3
from .counting import (
    DEFAULT_MAX_STATES,
    CountQuery,
    count,
    enumerate_asm,
    partition_function,
    semimagic_weights,
    uniform_weights,
)
from .core import AsmMatrix, ComplementaryEdgePair, CornerSumMatrix, EdgeMatrixPair, MonotoneTriangle
from .ehrhart import interpolate
from .errors import AsmError
from .paths import count_fpl_expansions
from .polytope import decompose
from .render import render
from . import verify as verify_mod

ENV_MAX_STATES = "ASMSPIN_MAX_STATES"


def _default_max_states() -> int:
    raw = os.environ.get(ENV_MAX_STATES)
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        return int(raw)
    except ValueError:
        raise AsmError(f"{ENV_MAX_STATES} must be an integer, got {raw!r}")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--max-states", type=int, default=None,
                   help=f"DP state bound (default {DEFAULT_MAX_STATES}, "
                        f"or ${ENV_MAX_STATES})")
    p.add_argument("--threads", type=int, default=0,
                   help="worker hint; results never depend on it")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _read_input(args) -> str:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _max_states(args) -> int:
    if args.max_states is not None:
        return args.max_states
    return _default_max_states()


def _check_threads(args):
    if args.threads < 0:
        raise AsmError("--threads must be nonnegative")


KIND_NAMES = ("asm", "em", "csm", "mt", "cem")
_CONVERT_FROM_EDGE = {
    "asm": bijections.edge_to_asm,
    "em": lambda e: e,
    "csm": bijections.edge_to_corner,
    "mt": bijections.edge_to_triangle,
    "cem": bijections.edge_to_complementary,
}
_CONVERT_TO_EDGE = {
    AsmMatrix: bijections.asm_to_edge,
    EdgeMatrixPair: lambda e: e,
    CornerSumMatrix: bijections.corner_to_edge,
    MonotoneTriangle: bijections.triangle_to_edge,
    ComplementaryEdgePair: bijections.complementary_to_edge,
}


def _kind_of(obj) -> str:
    return jsonio.to_obj(obj)["kind"]


def _convert(obj, to_kind: str):
    edge = _CONVERT_TO_EDGE[type(obj)](obj)
    return _CONVERT_FROM_EDGE[to_kind](edge)


def _text_form(obj) -> str:
    d = jsonio.to_obj(obj)
    kind = d["kind"]
    def block(rows):
        return "\n".join(" ".join(str(x) for x in row) for row in rows)
    if kind == "asm":
        return block(d["entries"])
    if kind == "em":
        return block(d["H"]) + "\n\n" + block(d["V"])
    if kind == "csm":
        return block(d["C"])
    if kind == "mt":
        return block(d["rows"])
    return block(d["Hbar"]) + "\n\n" + block(d["Vbar"])


def cmd_count(args) -> int:
    _check_threads(args)
    q = CountQuery(args.n, args.r, args.family,
                   "interior" if args.interior else "closed")
    value = count(q, max_states=_max_states(args))
    if args.json:
        print(json.dumps({
            "n": q.n, "r": q.r, "family": q.family, "region": q.region,
            "count": str(value),
        }))
    else:
        print(value)
    return 0


def cmd_enumerate(args) -> int:
    _check_threads(args)
    region = "interior" if args.interior else "closed"
    for matrix in enumerate_asm(args.n, args.r, args.family, region, cap=args.cap):
        print(jsonio.dumps(matrix))
    return 0


def cmd_ehrhart(args) -> int:
    _check_threads(args)
    poly = interpolate(args.n, args.family, max_states=_max_states(args))
    payload = {"n": args.n, "family": args.family}
    if args.basis == "binomial":
        payload["binomial"] = {
            str(k): str(c) for k, c in poly.binomial_support().items()
        }
    else:
        payload["monomial"] = {
            str(p): str(c) for p, c in enumerate(poly.monomial)
        }
    print(json.dumps(payload))
    return 0


def cmd_convert(args) -> int:
    _check_threads(args)
    obj = jsonio.loads(_read_input(args))
    if args.from_kind and _kind_of(obj) != args.from_kind:
        raise AsmError(
            f"input is kind {_kind_of(obj)!r}, expected {args.from_kind!r}"
        )
    result = _convert(obj, args.to)
    print(jsonio.dumps(result) if args.json else _text_form(result))
    return 0


def cmd_decompose(args) -> int:
    _check_threads(args)
    point = jsonio.point_from_obj(json.loads(_read_input(args)))
    dec = decompose(point)
    print(json.dumps(jsonio.decomposition_to_obj(dec)))
    return 0


def cmd_fpl_count(args) -> int:
    _check_threads(args)
    obj = jsonio.loads(_read_input(args))
    if not isinstance(obj, ComplementaryEdgePair):
        obj = _convert(obj, "cem")
    value = count_fpl_expansions(obj)
    print(json.dumps({"count": str(value)}) if args.json else value)
    return 0


def cmd_render(args) -> int:
    _check_threads(args)
    obj = jsonio.loads(_read_input(args))
    sys.stdout.write(render(obj, args.format, args.view))
    return 0


def cmd_partition(args) -> int:
    _check_threads(args)
    weights = semimagic_weights(args.r) if args.weights == "semimagic" \
        else uniform_weights(args.r)
    value = partition_function(args.n, args.r, weights,
                               max_states=_max_states(args))
    text = str(Fraction(value))
    print(json.dumps({"value": text}) if args.json else text)
    return 0


def cmd_verify(args) -> int:
    _check_threads(args)
    ms = _max_states(args)
    if args.suite == "table1":
        results = verify_mod.suite_table1(max_states=ms)
    elif args.suite == "running-example":
        results = verify_mod.suite_running_example(max_states=ms)
    elif args.suite == "ehrhart":
        results = verify_mod.suite_ehrhart(args.n or 4, args.family, max_states=ms)
    elif args.suite == "size3":
        results = verify_mod.suite_size3(args.r if args.r is not None else 4,
                                         max_states=ms)
    elif args.suite == "polytope":
        results = verify_mod.suite_polytope(max_states=ms)
    else:
        results = verify_mod.suite_vertex_types(args.r if args.r is not None else 20)
    failures = 0
    for res in results:
        if res.ok:
            print(f"ok   {res.name}")
        else:
            failures += 1
            print(f"FAIL {res.name}: expected {res.expected}, actual {res.actual}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmspin",
        description="Exact counting, conversion and decomposition toolkit "
                    "for higher spin alternating sign matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact cardinality of a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--family", choices=("asm", "sms"), default="asm")
    p.add_argument("--interior", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream every member as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--family", choices=("asm", "sms"), default="asm")
    p.add_argument("--interior", action="store_true")
    p.add_argument("--cap", type=int, default=10**6)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("ehrhart", help="interpolate the counting polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("asm", "sms"), default="asm")
    p.add_argument("--basis", choices=("binomial", "monomial"), default="binomial")
    _add_common(p)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="from_kind", choices=KIND_NAMES, default=None)
    p.add_argument("--to", choices=KIND_NAMES, required=True)
    p.add_argument("--input", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("decompose", help="convex decomposition of a polytope point")
    p.add_argument("--input", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("fpl-count", help="loop configurations for a complementary pair")
    p.add_argument("--input", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_fpl_count)

    p = sub.add_parser("render", help="draw a lattice diagram")
    p.add_argument("--view", choices=("vertex", "paths", "cem"), default="vertex")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--input", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("partition", help="weighted configuration sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--weights", choices=("uniform", "semimagic"), default="uniform")
    _add_common(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True,
                   choices=("table1", "running-example", "ehrhart", "size3",
                            "polytope", "vertex-types"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--family", choices=("asm", "sms"), default="asm")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AsmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
