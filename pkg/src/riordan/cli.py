"""Command line front end.

Subcommands:

``matrix``
    Parse a scalar expression and a comma-separated map, build the
    element's monomial matrix, and print it as CSV or JSON.
``verify``
    Run a seeded verification campaign and print its JSON-lines
    report; the exit status says whether every trial passed.
``invert``
    Invert a series, a map, or a pair element; the inverse is checked
    by multiplying back before anything is printed.
``classic``
    Well-known one-variable examples, computed from their definitions.

Exit codes: 0 success, 1 a verification trial failed, 2 malformed
input (expression syntax, bad flags), 3 an algebraic failure such as
inverting a non-unit.  The default campaign seed comes from the
``RIORDAN_SEED`` environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .campaigns import ELEMENT_POOLS, SUITES, CampaignConfig, run_campaign
from .errors import AlgebraError, ExprSyntaxError
from .formal_maps import FormalMap
from .matrices import riordan_matrix
from .parser import parse_series
from .rings import ring_from_tag
from .riordan import RiordanElement
from .series import Series
from .verdestar import CONVENTIONS, LEFT_INTO_RIGHT


class _CliError(Exception):
    """Carries an exit code and a message naming the offending argument."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _ring_arg(tag: str):
    try:
        return ring_from_tag(tag)
    except ValueError as exc:
        raise _CliError(2, f"argument --ring: {exc}") from None


def _expr_arg(name: str, text: str, dim: int, trunc: int, ring) -> Series:
    try:
        return parse_series(text, dim, trunc, ring)
    except ExprSyntaxError as exc:
        raise _CliError(2, f"argument {name}: {exc}") from None
    except AlgebraError as exc:
        raise _CliError(3, f"argument {name}: {exc}") from None


def _map_arg(name: str, text: str, dim: int, trunc: int, ring) -> FormalMap:
    parts = text.split(",")
    if len(parts) != dim:
        noun = "component" if dim == 1 else "components"
        raise _CliError(
            2,
            f"argument {name}: expected {dim} comma-separated {noun}, got {len(parts)}",
        )
    comps = [
        _expr_arg(f"{name}[{i + 1}]", part, dim, trunc, ring)
        for i, part in enumerate(parts)
    ]
    try:
        return FormalMap(comps)
    except AlgebraError as exc:
        raise _CliError(3, f"argument {name}: {exc}") from None


def _csv_ints(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_seed() -> int:
    raw = os.environ.get("RIORDAN_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise _CliError(2, f"RIORDAN_SEED must be an integer, got {raw!r}")


def cmd_matrix(args) -> int:
    ring = _ring_arg(args.ring)
    f = _expr_arg("F", args.f, args.vars, args.trunc, ring)
    g = _map_arg("G", args.g, args.vars, args.trunc, ring)
    try:
        element = RiordanElement(f, g)
        matrix = riordan_matrix(element)
    except AlgebraError as exc:
        raise _CliError(3, str(exc)) from None
    if args.format == "csv":
        sys.stdout.write(matrix.to_csv())
    else:
        print(matrix.to_json())
    return 0


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        cfg = CampaignConfig(
            suite=args.suite,
            dims=args.dims,
            truncs=args.truncs,
            ring=args.ring,
            trials=args.trials,
            seed=seed,
            convention=args.convention,
            elements=args.elements,
            radius=args.radius,
            workers=args.workers,
        )
    except ValueError as exc:
        raise _CliError(2, str(exc)) from None
    report = run_campaign(cfg)
    sys.stdout.write(report.text())
    return 0 if report.ok else 1


def cmd_invert(args) -> int:
    ring = _ring_arg(args.ring)
    dim, trunc = args.vars, args.trunc
    if args.what == "series":
        if len(args.exprs) != 1:
            raise _CliError(2, "argument EXPR: inverting a series takes exactly one expression")
        s = _expr_arg("EXPR", args.exprs[0], dim, trunc, ring)
        try:
            inv = s.inverse()
        except AlgebraError as exc:
            raise _CliError(3, f"argument EXPR: {exc}") from None
        if s * inv != Series.one(dim, trunc, ring):
            raise _CliError(3, "internal check failed: inverse did not multiply back to 1")
        print(json.dumps(inv.to_payload(), separators=(",", ":")))
        return 0
    if args.what == "map":
        if len(args.exprs) != 1:
            raise _CliError(
                2, "argument G: inverting a map takes one comma-separated component list"
            )
        g = _map_arg("G", args.exprs[0], dim, trunc, ring)
        try:
            inv = g.inverse()
        except AlgebraError as exc:
            raise _CliError(3, f"argument G: {exc}") from None
        print(json.dumps(inv.to_payload(), separators=(",", ":")))
        return 0
    if len(args.exprs) != 2:
        raise _CliError(
            2, "arguments F G: inverting a pair takes a scalar expression and a component list"
        )
    f = _expr_arg("F", args.exprs[0], dim, trunc, ring)
    g = _map_arg("G", args.exprs[1], dim, trunc, ring)
    try:
        inv = RiordanElement(f, g).inverse()
    except AlgebraError as exc:
        raise _CliError(3, str(exc)) from None
    print(json.dumps(inv.to_payload(), separators=(",", ":")))
    return 0


def cmd_classic(args) -> int:
    ring = ring_from_tag("int")
    k = args.trunc
    if args.name == "pascal":
        f = parse_series("1/(1-x1)", 1, k, ring)
        g = FormalMap([parse_series("x1/(1-x1)", 1, k, ring)])
        matrix = riordan_matrix(RiordanElement(f, g))
        for i in range(k + 1):
            row = [matrix.entry((i,), (j,)) for j in range(i + 1)]
            print(json.dumps(row, separators=(",", ":")))
        return 0
    h = parse_series("x1+x1^2", 1, k, ring)
    inv = FormalMap([h]).inverse()
    coeffs = [inv.components[0].coeff((t,)) for t in range(k + 1)]
    print(
        json.dumps(
            {"name": "catalan-inverse", "trunc": k, "coefficients": coeffs},
            separators=(",", ":"),
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="riordan",
        description="Exact computation in the several-variable Riordan group.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print the monomial matrix of a pair element")
    p.add_argument("f", metavar="F", help="scalar factor, e.g. '1/(1-x1)'")
    p.add_argument("g", metavar="G", help="map components, comma-separated, e.g. 'x1/(1-x1)'")
    p.add_argument("--vars", type=int, required=True, help="number of variables")
    p.add_argument("--trunc", type=int, required=True, help="truncation order")
    p.add_argument("--ring", default="int", help="coefficient ring tag (int, rational, modp:P)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run a seeded verification campaign")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--dims", type=_csv_ints, default=(2,), help="dimensions, comma-separated")
    p.add_argument(
        "--truncs", type=_csv_ints, default=(4,), help="truncation orders, comma-separated"
    )
    p.add_argument("--ring", default="int")
    p.add_argument("--trials", type=int, default=100, help="trials per (dimension, order) cell")
    p.add_argument("--seed", type=int, default=None, help="campaign seed (default: RIORDAN_SEED)")
    p.add_argument("--convention", choices=CONVENTIONS, default=LEFT_INTO_RIGHT)
    p.add_argument("--elements", choices=ELEMENT_POOLS, default="invertible")
    p.add_argument("--radius", type=int, default=3, help="window box radius (verdestar suite)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invert", help="invert a series, map, or pair element")
    p.add_argument("--what", choices=("series", "map", "riordan"), required=True)
    p.add_argument("exprs", metavar="EXPR", nargs="+", help="expression(s) to invert")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--ring", default="int")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("classic", help="well-known one-variable examples")
    p.add_argument("name", choices=("pascal", "catalan-inverse"))
    p.add_argument("--trunc", type=int, required=True)
    p.set_defaults(func=cmd_classic)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
