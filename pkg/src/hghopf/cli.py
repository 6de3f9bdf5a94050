"""Command-line front end.

    hghopf poly FILE [--method direct|formula|both] [--format human|coeffs|csv]
    hghopf eval FILE --n N
    hghopf antipode FILE [--max-vertices 6]
    hghopf check [--scope lemmas,reciprocity,...] [--seed 0] [--max-vertices 4]

FILE may be ``-`` (or omitted) to read standard input.  Exit codes: 0
success, 1 verification mismatch, 2 parse/validation error, 3 size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import prod

from . import checks
from .hopf import antipode_takeuchi, chi_direct, chi_polynomial
from .instances import InstanceError, as_hypergraph, loads
from .orientations import chi_formula, count_pairs
from .polyring import RationalPoly
from .submonoids import SetOfPaths, count_tree_pairs, tree_pair_polynomial

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3

# direct summation costs n ** |I|
GUARD_VERTICES, GUARD_N = 10, 6


class SizeGuard(Exception):
    pass


def _guard(x, n: int, force: bool) -> None:
    if not force and len(x.ground) > GUARD_VERTICES and n > GUARD_N:
        raise SizeGuard(
            f"refusing direct enumeration with {len(x.ground)} vertices at n={n} "
            f"({n}^{len(x.ground)} colorings); pass --force to override"
        )


def read_instance(path: str | None):
    if path in (None, "-"):
        return loads(sys.stdin.read())
    with open(path) as fh:
        return loads(fh.read())


def formula_polynomial(x) -> RationalPoly:
    """Invariant by the non-summation route: orientation formula, or binary trees for paths."""
    if isinstance(x, SetOfPaths):
        return prod((tree_pair_polynomial(len(p)) for p in x.paths), start=RationalPoly([1]))
    return chi_formula(as_hypergraph(x))


def weak_pairs(x, n: int) -> int:
    if isinstance(x, SetOfPaths):
        return prod(count_tree_pairs(len(p), n, False) for p in x.paths)
    return count_pairs(as_hypergraph(x), n, False)


def render_poly(p: RationalPoly, fmt: str) -> str:
    if fmt == "coeffs":
        return json.dumps(p.to_strings())
    if fmt == "csv":
        return "\n".join(["degree,coefficient"] + [f"{i},{c}" for i, c in enumerate(p.to_strings())])
    return str(p)


def cmd_poly(args) -> int:
    x = read_instance(args.file)
    results = {}
    if args.method in ("direct", "both"):
        _guard(x, len(x.ground), args.force)
        results["direct"] = chi_polynomial(x)
    if args.method in ("formula", "both"):
        results["formula"] = formula_polynomial(x)
    values = list(results.values())
    if len(values) == 2 and values[0] != values[1]:
        for name, p in results.items():
            print(f"{name}: {render_poly(p, args.format)}")
        print("verdict: MISMATCH")
        return EXIT_MISMATCH
    print(render_poly(values[0], args.format))
    return EXIT_OK


def cmd_eval(args) -> int:
    x = read_instance(args.file)
    n = args.n
    _guard(x, abs(n), args.force)
    if n >= 0:
        value = chi_direct(x, n)
        print(f"{n},{value}" if args.format == "csv" else value)
        return EXIT_OK
    value = chi_polynomial(x)(n)
    pairs = weak_pairs(x, -n)
    ok = value == (-1) ** len(x.ground) * pairs
    verdict = "MATCH" if ok else "MISMATCH"
    if args.format == "csv":
        print("n,value,pairs,verdict")
        print(f"{n},{value},{pairs},{verdict}")
    else:
        print(f"value: {value}")
        print(f"pairs: {pairs}")
        print(f"verdict: {verdict}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_antipode(args) -> int:
    x = read_instance(args.file)
    k = len(x.ground)
    if k == 0:
        print("empty ground set: the antipode is the identity")
        return EXIT_OK
    if k > args.max_vertices:
        raise SizeGuard(
            f"refusing the antipode on {k} vertices (ordered Bell growth); "
            f"the bound is --max-vertices {args.max_vertices}"
        )
    S = antipode_takeuchi(x, signed=not args.unsigned)
    if args.format == "coeffs":
        print(json.dumps([{"coefficient": c, "element": y.to_dict()} for y, c in S.sorted_terms()]))
    elif args.format == "csv":
        print("coefficient,element")
        for y, c in S.sorted_terms():
            print(f'{c},"{y}"')
    else:
        print(S)
    return EXIT_OK


def cmd_check(args) -> int:
    scope = [s for item in args.scope for s in item.split(",") if s]
    cfg = checks.CheckConfig(
        seed=args.seed,
        max_vertices=args.max_vertices,
        signed_antipode=not args.inject_unsigned_antipode,
    )
    try:
        names = checks.resolve_scope(scope or ["all"])
    except KeyError as exc:
        print(f"unknown suite {exc.args[0]!r}; known: {', '.join(list(checks.SUITES) + list(checks.ALIASES))}",
              file=sys.stderr)
        return EXIT_PARSE
    failed = False
    for name in names:
        res = checks.SUITES[name](cfg)
        print(res.line(), flush=True)
        failed |= not res.passed
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hghopf", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, file=True):
        if file:
            p.add_argument("file", nargs="?", default="-", help="instance file, '-' for stdin")
        p.add_argument("--format", choices=("human", "coeffs", "csv"), default="human")
        p.add_argument("--force", action="store_true", help="bypass the direct-summation size guard")

    p = sub.add_parser("poly", help="print the basic invariant polynomial")
    add_common(p)
    p.add_argument("--method", choices=("direct", "formula", "both"), default="both")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", help="evaluate the invariant at an integer")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("antipode", help="print the antipode as a signed sum")
    add_common(p)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--unsigned", action="store_true", help="drop the (-1)^k signs (diagnostic)")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("check", help="run the verification suites")
    p.add_argument("--scope", action="append", default=[], help="comma-separated suites or aliases")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--inject-unsigned-antipode", action="store_true",
                   help="check with the unsigned antipode (expected to fail)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuard as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
