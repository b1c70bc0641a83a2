"""Command line interface.

Exit codes: 0 success, 1 internal error, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from .decision import cross_check, decide
from .enumeration import enumerate_semigroups
from .errors import InvalidInput, NotUnital
from .io import parse_input, render_semigroup
from .report import oracle_report, render_factors, render_oracle, render_verdict
from .semigroup import find_isomorphism


def _read(path: str, fmt):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_input(data, None if fmt == "auto" else fmt)


def _mode(args) -> str:
    return "json" if args.json else "text"


def cmd_decide(args) -> int:
    S = _read(args.file, args.format)
    cross = None
    if args.cross_check:
        try:
            cross = cross_check(S)
        except NotUnital:
            cross = None
    V = cross["verdict"] if cross else decide(S)
    sys.stdout.write(render_verdict(V, _mode(args), cross))
    if args.json:
        sys.stdout.write("\n")
    return 0


def cmd_oracle(args) -> int:
    S = _read(args.file, args.format)
    sys.stdout.write(render_oracle(oracle_report(S), _mode(args)))
    if args.json:
        sys.stdout.write("\n")
    return 0


def cmd_factors(args) -> int:
    S = _read(args.file, args.format)
    sys.stdout.write(render_factors(S, _mode(args)))
    if args.json:
        sys.stdout.write("\n")
    return 0


def cmd_catalog(args) -> int:
    if args.name is None:
        for name, entry in catalog_mod.catalog().items():
            print(f"{name}\t{entry.object.order}\t{entry.description}")
        return 0
    try:
        S = catalog_mod.get(args.name)
    except KeyError as exc:
        raise InvalidInput(exc.args[0]) from None
    out = render_semigroup(S, "text" if args.format == "text" else "json")
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_iso(args) -> int:
    A = _read(args.file_a, args.format)
    B = _read(args.file_b, args.format)
    phi = find_isomorphism(A, B, max_order=args.max_order)
    if args.json:
        print(json.dumps({"isomorphic": phi is not None, "map": phi}))
    else:
        print("isomorphic: " + ("yes" if phi is not None else "no"))
        if phi is not None:
            print("map: " + " ".join(f"{a}->{b}" for a, b in enumerate(phi)))
    return 0


def cmd_enumerate(args) -> int:
    rows = []
    for S in enumerate_semigroups(args.order, with_zero=args.with_zero, unital_only=args.unital_only):
        row = {"semigroup": S.to_dict()}
        if args.cross_check:
            try:
                c = cross_check(S)
                row.update(hyperbolic=c["verdict"].hyperbolic, radicalDim=c["details"]["radicalDim"],
                           consistent=c["consistent"])
            except NotUnital:
                row.update(hyperbolic=False, notUnital=True)
        rows.append(row)
    if args.json:
        print(json.dumps({"schemaVersion": 1, "order": args.order, "count": len(rows), "semigroups": rows}))
        return 0
    for row in rows:
        flat = ";".join(" ".join(map(str, r)) for r in row["semigroup"]["table"])
        extra = ""
        if "consistent" in row:
            extra = f"  hyperbolic={'yes' if row['hyperbolic'] else 'no'} dimJ={row['radicalDim']} " \
                    f"consistent={'yes' if row['consistent'] else 'no'}"
        elif row.get("notUnital"):
            extra = "  Q0S is not unital"
        print(flat + extra)
    print(f"count: {len(rows)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypsemi", description="Hyperbolic property of contracted semigroup algebras Q0S.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--format", choices=["auto", "json", "text"], default="auto", help="input format")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", parents=[common], help="decide the hyperbolic property")
    d.add_argument("file")
    d.add_argument("--cross-check", action="store_true", help="also run the algebra oracle")
    d.set_defaults(func=cmd_decide)

    o = sub.add_parser("oracle", parents=[common], help="exact algebra data of Q0S")
    o.add_argument("file")
    o.set_defaults(func=cmd_oracle)

    f = sub.add_parser("factors", parents=[common], help="principal factors and Rees data")
    f.add_argument("file")
    f.set_defaults(func=cmd_factors)

    c = sub.add_parser("catalog", parents=[common], help="print a catalog entry (or list them)")
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    i = sub.add_parser("iso", parents=[common], help="test two semigroups for isomorphism")
    i.add_argument("file_a")
    i.add_argument("file_b")
    i.add_argument("--max-order", type=int, default=16)
    i.set_defaults(func=cmd_iso)

    e = sub.add_parser("enumerate", parents=[common], help="semigroups of order <= 4 up to isomorphism")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--with-zero", action="store_true")
    e.add_argument("--unital-only", action="store_true")
    e.add_argument("--cross-check", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
