"""Command line entry point.

Exit codes: 0 success, 1 usage error, 2 load/validation error,
3 structure mismatch between the two multisets.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .boolmat import BitMatrix, part_matrix, spy_pbm, spy_text
from .decision import block_matrix, decide
from .io import dump_report, load_multiset
from .model import SoftMultiset, ValidationError, part
from .products import ProductKind, StructureMismatchError, product_block

EXIT_OK, EXIT_USAGE, EXIT_LOAD, EXIT_MISMATCH = 0, 1, 2, 3

KINDS = [k.value for k in ProductKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="softmatrix", description="Soft matrices on soft multisets and max-min group decisions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parts", help="print the approximate value sets of one universe")
    p.add_argument("--in", dest="input", required=True, metavar="A.json")
    p.add_argument("--universe", type=int, required=True, metavar="I", help="1-based universe index")

    p = sub.add_parser("matrix", help="print a part matrix or the whole block matrix")
    p.add_argument("--in", dest="input", required=True, metavar="A.json")
    p.add_argument("--universe", type=int, metavar="I")

    for name, help_ in (("product", "print a product matrix"), ("spy", "write the sparsity pattern of a product")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--a", required=True, metavar="A.json")
        p.add_argument("--b", required=True, metavar="B.json")
        p.add_argument("--kind", choices=KINDS, default="and")
        p.add_argument("--universe", type=int, metavar="I")
        p.add_argument("--pbm", metavar="PATH", required=name == "spy", help="write a P1 portable bitmap")

    p = sub.add_parser("decide", help="run the max-min decision and report optimum elements")
    p.add_argument("--a", required=True, metavar="A.json")
    p.add_argument("--b", required=True, metavar="B.json")
    p.add_argument("--kind", choices=KINDS, default="and")
    p.add_argument("--out", metavar="report.json")
    return parser


def _check_universe(ms: SoftMultiset, i: int | None) -> None:
    if i is not None and not 1 <= i <= ms.n_universes:
        raise UsageError(f"--universe must be in 1..{ms.n_universes}, got {i}")


def _fmt_set(items) -> str:
    return "{" + ", ".join(items) + "}"


def _print_grid(m: BitMatrix) -> None:
    print(f"{m.nrows}x{m.ncols}")
    text = spy_text(m)
    if text:
        print(text)


def _product(args) -> BitMatrix:
    a, b = load_multiset(args.a), load_multiset(args.b)
    _check_universe(a, args.universe)
    if not a.same_structure(b):
        raise StructureMismatchError(f"{args.a} and {args.b} do not share universes and parameter spaces")
    prod = product_block(block_matrix(a), block_matrix(b), args.kind)
    if args.universe is not None:
        return prod.blocks[args.universe - 1]
    return prod.dense()


def _run(args) -> int:
    if args.command == "parts":
        ms = load_multiset(args.input)
        _check_universe(ms, args.universe)
        universe = ms.universes[args.universe - 1]
        for name, subset in part(ms, args.universe).mapping.items():
            print(f"{name}: {_fmt_set(e for e in universe.elements if e in subset)}")

    elif args.command == "matrix":
        ms = load_multiset(args.input)
        _check_universe(ms, args.universe)
        if args.universe is None:
            _print_grid(block_matrix(ms).dense())
        else:
            i = args.universe
            _print_grid(part_matrix(part(ms, i), ms.universes[i - 1], ms.parameters[i - 1]))

    elif args.command in ("product", "spy"):
        m = _product(args)
        if args.pbm:
            Path(args.pbm).write_text(spy_pbm(m), encoding="ascii")
        if args.command == "product":
            _print_grid(m)

    elif args.command == "decide":
        a, b = load_multiset(args.a), load_multiset(args.b)
        report = decide(a, b, args.kind)
        if args.out:
            dump_report(report, args.out)
        for d in report.universes:
            print(f"{d.universe.id}: {', '.join(d.optimum) if d.optimum else '(none)'}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _run(args)
    except UsageError as exc:
        print(f"softmatrix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StructureMismatchError as exc:
        print(f"softmatrix: structure mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValidationError as exc:
        print(f"softmatrix: invalid input: {exc}", file=sys.stderr)
        return EXIT_LOAD
    except OSError as exc:
        print(f"softmatrix: {exc}", file=sys.stderr)
        return EXIT_LOAD


if __name__ == "__main__":
    raise SystemExit(main())
