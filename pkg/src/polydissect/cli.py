"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import bijections
from .core import (
    InternallyOrderedPartition,
    NestedSet,
    ParenthesizedList,
    Partition2,
    Triple,
    ValidationError,
    check_params,
    dumps,
    from_json,
)
from .counting import (
    DissectionType,
    distinguished_count,
    kirkman_cayley,
    type_count,
    ward_number,
)
from .dissect import (
    PolygonDissection,
    dissection_from_parenthesization,
    render_svg,
)
from .enumeration import (
    enum_iop,
    enum_nested_sets,
    enum_parenthesizations,
    enum_partitions2,
    enum_triples,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_parens(text: str) -> ParenthesizedList:
    """Parse a string such as ``"(1,((2,3),(4,5)))"``.

    The whole string must be one outer pair; every pair holds at least two
    comma-separated entries; the leaves must be a permutation of ``1..n``.
    """
    tokens = []
    for num, sym in _TOKEN.findall(text.strip()):
        if num:
            tokens.append(int(num))
        elif sym in "(),":
            tokens.append(sym)
        elif sym.strip():
            raise ValidationError("malformed parenthesization", f"unexpected {sym!r}")
    perm: list[int] = []
    intervals: list[tuple[int, int]] = []
    pos = 0

    def expect(tok) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            found = tokens[pos] if pos < len(tokens) else "end of input"
            raise ValidationError("malformed parenthesization", f"expected {tok!r}, found {found!r}")
        pos += 1

    def group() -> None:
        nonlocal pos
        expect("(")
        start = len(perm) + 1
        entries = 0
        while True:
            if pos < len(tokens) and tokens[pos] == "(":
                group()
            elif pos < len(tokens) and isinstance(tokens[pos], int):
                perm.append(tokens[pos])
                pos += 1
            else:
                found = tokens[pos] if pos < len(tokens) else "end of input"
                raise ValidationError("malformed parenthesization", f"unexpected {found!r}")
            entries += 1
            if pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                continue
            break
        expect(")")
        if entries < 2:
            raise ValidationError("parenthesis pair with fewer than two entries")
        intervals.append((start, len(perm)))

    if not tokens or tokens[0] != "(":
        raise ValidationError("malformed parenthesization", "missing outer parentheses")
    group()
    if pos != len(tokens):
        raise ValidationError("malformed parenthesization", "trailing input after outer pair")
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValidationError("leaves must be a permutation of 1..n", f"{perm}")
    return ParenthesizedList(len(perm), perm, intervals)


def format_parens(p: ParenthesizedList) -> str:
    ivs = sorted(p.intervals, key=lambda iv: (iv[0], -iv[1]))

    def render(l: int, r: int, inner: list) -> str:
        parts = []
        pos = l
        while pos <= r:
            sub = next((iv for iv in inner if iv[0] == pos), None)
            if sub is None:
                parts.append(str(p.perm[pos - 1]))
                pos += 1
            else:
                nested = [iv for iv in inner if sub[0] <= iv[0] and iv[1] <= sub[1] and iv != sub]
                parts.append(render(sub[0], sub[1], nested))
                inner = [iv for iv in inner if iv not in nested and iv != sub]
                pos = sub[1] + 1
        return "(" + ",".join(parts) + ")"

    return render(1, p.n, [iv for iv in ivs if iv != (1, p.n)])


def parse_type(text: str) -> DissectionType:
    pairs = []
    for item in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*\^\s*(\d+)\s*", item)
        if not m:
            raise ValidationError("malformed type", f"{item!r} is not of the form i^m")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return DissectionType(tuple(pairs))


def _cmd_count(args) -> int:
    if args.what == "type":
        if args.type is None:
            raise ValidationError("--type is required for type counts")
        print(type_count(args.n, args.k, parse_type(args.type)))
        return 0
    fn = {"kirkman-cayley": kirkman_cayley, "distinguished": distinguished_count, "ward": ward_number}
    print(fn[args.what](args.n, args.k))
    return 0


def _ground(args) -> int:
    if args.m is not None:
        return args.m
    if args.n is None:
        raise ValidationError("give --m or --n")
    check_params(args.n, args.k)
    return args.n + args.k - 1


def _cmd_enum(args) -> int:
    if args.family in ("nested", "parens", "triple") and args.n is None:
        raise ValidationError("--n is required", f"for family {args.family}")
    if args.family == "nested":
        stream = enum_nested_sets(args.n, args.k)
    elif args.family == "parens":
        perm = None if args.perm is None else [int(x) for x in args.perm.split(",")]
        stream = enum_parenthesizations(args.n, args.k, perm)
    elif args.family == "triple":
        stream = enum_triples(args.n, args.k)
    elif args.family == "partition2":
        stream = enum_partitions2(_ground(args), args.k)
    else:
        stream = enum_iop(_ground(args), args.k)
    out = sys.stdout
    for i, obj in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        out.write(dumps(obj) + "\n")
    return 0


_MAP_INPUT = {
    "phi": NestedSet,
    "phi-inv": Partition2,
    "gamma": ParenthesizedList,
    "gamma-inv": InternallyOrderedPartition,
    "encode-triple": InternallyOrderedPartition,
    "decode-triple": Triple,
}


def _read_input(path: Optional[str]):
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ValidationError("malformed JSON", str(exc)) from exc


def _cmd_map(args) -> int:
    obj = _read_input(args.input)
    if not isinstance(obj, _MAP_INPUT[args.direction]):
        raise ValidationError(
            "wrong input type", f"{args.direction} takes {_MAP_INPUT[args.direction].__name__}"
        )
    d = args.direction
    if d == "phi":
        out = bijections.phi(obj, args.k)
    elif d == "phi-inv":
        out = bijections.phi_inv(obj, args.n, args.k)
    elif d == "gamma":
        out = bijections.gamma(obj)
    elif d == "gamma-inv":
        out = bijections.gamma_inv(obj, args.n, args.k)
    elif d == "encode-triple":
        out = bijections.encode_triple(obj, args.n, args.k)
    else:
        out = bijections.decode_triple(obj)
    print(dumps(out))
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_all

    if args.max_n < 2:
        raise ValidationError("n must be ≥ 2", f"--max-n {args.max_n}")
    if args.max_n > 8:
        raise ValidationError("--max-n is capped at 8", f"--max-n {args.max_n}")

    def report(r):
        print(r.line(), flush=True)

    results = run_all(args.max_n, report)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}")
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def _cmd_render(args) -> int:
    if args.parens is not None:
        d = dissection_from_parenthesization(parse_parens(args.parens))
    else:
        obj = _read_input(args.input)
        if isinstance(obj, ParenthesizedList):
            d = dissection_from_parenthesization(obj)
        elif isinstance(obj, PolygonDissection):
            d = obj
        else:
            raise ValidationError("wrong input type", "render takes a parenthesization or a dissection")
    svg = render_svg(d)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydissect",
        description="Nested sets, partitions and polygon dissections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact counts")
    p.add_argument("what", choices=["kirkman-cayley", "distinguished", "ward", "type"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--type", help='cell census such as "3^2,4^1"')
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enum", help="list a family, one JSON object per line")
    p.add_argument("family", choices=["nested", "partition2", "parens", "iop", "triple"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", help="comma-separated list for parens (default 1..n)")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("map", help="apply a bijection to a JSON object")
    p.add_argument("direction", choices=list(_MAP_INPUT))
    p.add_argument("--input", help="JSON file (default stdin)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("verify", help="run the exhaustive cross-checks")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw a dissection as SVG")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--parens", help='e.g. "(1,((2,3),(4,5)))"')
    src.add_argument("--input", help="JSON parenthesization or dissection")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
