"""Command-line surface.

Subcommands::

    eval       evaluate a generator word under an algebra, emit matrix JSON
    invariant  closed-form value of the closed genus-k surface
    verify     run the Frobenius axiom checks, exit 0 iff all pass
    golden     regenerate the fixed structure matrices and diff byte-exactly
    scan       exhaustive pairwise-distinctness scan, emit a certificate
    zsigmondy  least primitive prime divisor of a^n + b^n
    separate   closing-context separation of two cobordism JSON files

Exit codes: 0 success, 1 verification failure / collision / exceptional
triple, 2 usage or parse errors.

Composition in terms reads left to right: ``a ; b`` is "a first, then
b" (pictures run top to bottom).  Rationals are printed as ``p/q``,
never as floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import diagram, faithfulness, golden, tqft
from .frobenius import (ALGEBRA_TAGS, FrobeniusAlgebra, algebra_by_tag,
                        verify_frobenius)
from .surface import Cobordism
from .tqft import AxiomFailure


def load_algebra(selector: str) -> FrobeniusAlgebra:
    """Resolve qz5 | zqs3 | A | file:<path> to a verified algebra."""
    if selector in ALGEBRA_TAGS:
        return algebra_by_tag(selector)
    if selector.startswith("file:"):
        with open(selector[5:]) as fh:
            algebra = FrobeniusAlgebra.from_json_obj(json.load(fh))
        report = verify_frobenius(algebra)
        if not report.all_pass:
            raise AxiomFailure(report)
        return algebra
    raise ValueError(
        f"unknown algebra {selector!r}: expected one of "
        f"{', '.join(ALGEBRA_TAGS)} or file:<path>")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_eval(args) -> int:
    algebra = load_algebra(args.algebra)
    K = diagram.elaborate(diagram.parse(args.term))
    ev = tqft.evaluate(algebra, K)
    obj = {"in": ev.n_in, "out": ev.n_out, "dim": algebra.dim,
           "matrix": ev.matrix.to_json_obj()}
    _emit(json.dumps(obj, separators=(",", ":")), args.output)
    return 0


def cmd_invariant(args) -> int:
    if args.algebra not in ALGEBRA_TAGS:
        print("error: the closed form is only available for qz5, zqs3, A; "
              "use `eval --term` with a closed word for other algebras",
              file=sys.stderr)
        return 2
    _emit(str(tqft.closed_invariant(args.algebra, args.genus)), args.output)
    return 0


def cmd_verify(args) -> int:
    algebra = load_algebra(args.algebra)
    report = verify_frobenius(algebra)
    for name, ok in report.results:
        print(f"{'pass' if ok else 'FAIL'}  {name}")
    return 0 if report.all_pass else 1


def cmd_golden(args) -> int:
    entries = golden.golden_report()
    bad = 0
    for entry in entries:
        print(f"{'pass' if entry.ok else 'FAIL'}  {entry.name}")
        if not entry.ok:
            bad += 1
            print(f"  produced: {entry.produced}")
            print(f"  expected: {entry.expected}")
    return 0 if bad == 0 else 1


def cmd_scan(args) -> int:
    bounds = faithfulness.ScanBounds(args.max_circles, args.max_genus,
                                     args.max_closed, args.max_closed_genus)
    algebra = load_algebra(args.algebra)
    cert = faithfulness.faithfulness_scan(bounds, algebra=algebra,
                                          tag=args.algebra,
                                          workers=args.workers)
    _emit(cert.to_json(), args.output)
    return 0 if cert.distinct else 1


def cmd_zsigmondy(args) -> int:
    try:
        _emit(str(faithfulness.zsigmondy_witness(args.a, args.b, args.n)),
              args.output)
    except faithfulness.ExceptionalTriple as err:
        print(f"exceptional triple: {err}", file=sys.stderr)
        return 1
    return 0


def cmd_separate(args) -> int:
    with open(args.left) as fh:
        K = Cobordism.from_json_obj(json.load(fh))
    with open(args.right) as fh:
        L = Cobordism.from_json_obj(json.load(fh))
    ms_k, ms_l = faithfulness.separating_closure(K, L)
    obj = {"left": {"genera": list(ms_k.genera),
                    "invariant": str(faithfulness.multiset_invariant(ms_k))},
           "right": {"genera": list(ms_l.genera),
                     "invariant": str(faithfulness.multiset_invariant(ms_l))}}
    _emit(json.dumps(obj, separators=(",", ":")), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobtqft",
        description="Exact evaluation of 2-cobordisms in commutative "
                    "Frobenius algebras, with faithfulness certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra(p):
        p.add_argument("--algebra", default="A",
                       help="qz5 | zqs3 | A | file:<path> (default A)")

    def add_output(p):
        p.add_argument("--output", "-o", help="write the result to a file")

    p = sub.add_parser("eval", help="evaluate a generator word to a matrix")
    add_algebra(p)
    p.add_argument("--term", required=True,
                   help='for example "delta ; mu" (composition reads left '
                        "to right)")
    add_output(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("invariant",
                       help="closed-form invariant of the closed genus-k surface")
    add_algebra(p)
    p.add_argument("--genus", type=int, required=True)
    add_output(p)
    p.set_defaults(fn=cmd_invariant)

    p = sub.add_parser("verify", help="check the Frobenius axioms")
    add_algebra(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("golden",
                       help="regenerate the fixed structure matrices and diff")
    p.set_defaults(fn=cmd_golden)

    p = sub.add_parser("scan", help="pairwise-distinctness certificate")
    add_algebra(p)
    p.add_argument("--max-circles", type=int, default=2)
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--max-closed", type=int, default=1)
    p.add_argument("--max-closed-genus", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    add_output(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("zsigmondy",
                       help="least primitive prime divisor of a^n + b^n")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_output(p)
    p.set_defaults(fn=cmd_zsigmondy)

    p = sub.add_parser("separate",
                       help="separate two cobordism JSON files by closure")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    add_output(p)
    p.set_defaults(fn=cmd_separate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except AxiomFailure as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
