"""Command-line front end; every run is reproducible from argv alone.

Exit codes: 0 success, 1 usage error, 2 computation error. Domain errors
print one line to stderr as error[Code] message, where Code is the
exception class name. All randomness flows from explicit --seed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .claims import CLAIM_IDS, claims_report
from .errors import WorkbenchError
from .geometry import pyth_unit_vector
from .graph import UdGraph, degeneracy, from_dimacs, from_json, to_dimacs, to_json
from .plane import RatPoint, hex7_color, hex7_verify, rational2_color
from .solver import chromatic_number, to_cnf


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures remapped from exit status 2 to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"error[Usage] {message}\n")


def _resolve_graph(token: str) -> UdGraph:
    """Catalog names take precedence over file paths."""
    if token in catalog.names():
        return catalog.build(token)
    path = Path(token)
    if not path.exists():
        raise _UsageError(f"no catalog graph or file named {token!r}")
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_dimacs(text)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational number: {text!r}") from None


def _parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"not a number: {text!r}") from None


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            print(name)
        return 0
    g = catalog.build(args.name) if args.name in catalog.names() else None
    if g is None:
        raise _UsageError(f"unknown catalog graph {args.name!r}")
    print(f"name {args.name}")
    print(f"n {g.n}")
    print(f"m {g.m}")
    if g.is_geometric():
        for i, p in enumerate(g.points):
            print(f"point {i} {p}")
    for u, v in g.edges():
        print(f"edge {u} {v}")
    return 0


def _cmd_chromatic(args) -> int:
    g = _resolve_graph(args.graph)
    k, witness = chromatic_number(g, threads=args.threads)
    print(f"chromatic_number {k}")
    print("colors " + " ".join(str(c) for c in witness.colors))
    return 0


def _cmd_degeneracy(args) -> int:
    g = _resolve_graph(args.graph)
    report = degeneracy(g)
    print(f"min_degree {report.min_degree}")
    print(f"degeneracy {report.degeneracy}")
    print("order " + " ".join(str(v) for v in report.elimination_order))
    return 0


def _cmd_product(args) -> int:
    g = _resolve_graph(args.graph)
    label = args.graph
    for t in [args.t] + ([args.t2] if args.t2 is not None else []):
        g = catalog.minkowski_sum(g, pyth_unit_vector(t))
        label += f"+pyth({t})"
    print(f"name {label}")
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"min_degree {g.min_degree()}")
    return 0


def _cmd_claims(args) -> int:
    if args.id is not None and args.id not in CLAIM_IDS:
        raise _UsageError(f"unknown claim id {args.id!r}")
    report = claims_report(seed=args.seed, only=args.id)
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    for claim in report["claims"]:
        line = f"{claim['id']} {claim['verdict']}"
        if "proof_status" in claim:
            line += f" (proof: {claim['proof_status']})"
        print(line)
        print(f"  {claim['statement']}")
    for entry in report["out_of_scope"]:
        print(f"{entry['id']} OUT_OF_SCOPE")
        print(f"  {entry['statement']}")
    return 0


def _cmd_hexcolor(args) -> int:
    if args.values and args.values[0] == "verify":
        if len(args.values) != 1:
            raise _UsageError("hexcolor verify takes only flags")
        report = hex7_verify(args.samples, args.seed)
        print(json.dumps(report, indent=2))
        return 0
    if len(args.values) != 2:
        raise _UsageError("hexcolor needs <x> <y> or the verify action")
    x, y = (_parse_float(v) for v in args.values)
    print(f"color {hex7_color((x, y))}")
    return 0


def _cmd_ratcolor(args) -> int:
    p = RatPoint(_parse_fraction(args.x), _parse_fraction(args.y))
    print(f"color {rational2_color(p)}")
    return 0


def _cmd_export(args) -> int:
    g = _resolve_graph(args.graph)
    if args.format == "dimacs":
        sys.stdout.write(to_dimacs(g))
    elif args.format == "json":
        sys.stdout.write(to_json(g) + "\n")
    else:
        sys.stdout.write(to_cnf(g, args.k))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="udplane", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or show the named graphs")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", default="")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("chromatic", help="exact chromatic number")
    p.add_argument("graph", help="catalog name or graph file")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("degeneracy", help="elimination order and degeneracy")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_degeneracy)

    p = sub.add_parser(
        "product", help="translate by Pythagorean units and take the union"
    )
    p.add_argument("graph")
    p.add_argument("--t", type=_parse_fraction, required=True)
    p.add_argument("--t2", type=_parse_fraction, default=None)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("claims", help="evaluate the claim verdicts")
    p.add_argument("action", choices=["run"])
    p.add_argument("--id", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_claims)

    p = sub.add_parser("hexcolor", help="7-coloring queries and verification")
    p.add_argument("values", nargs="+", help="<x> <y>, or the word verify")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_hexcolor)

    p = sub.add_parser("ratcolor", help="2-coloring of a rational point")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_ratcolor)

    p = sub.add_parser("export", help="serialize a graph")
    p.add_argument("graph")
    p.add_argument(
        "--format", choices=["dimacs", "json", "cnf"], default="dimacs"
    )
    p.add_argument("--k", type=int, default=4, help="colors for cnf export")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error[Usage] {exc}", file=sys.stderr)
        return 1
    except WorkbenchError as exc:
        print(f"error[{exc.code}] {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error[Invalid] {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
