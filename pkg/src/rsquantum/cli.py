"""Command-line front end: ``rsquantum <command> [flags] ...``.

Exit status is 0 on success, 1 when a verification suite reports a failure and
2 for usage errors (bad flags, unparsable input, out-of-range generators).
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .algebra import DEFAULT_DEGREE_CAP, DegreeTooLarge, Element, reduce_mod_ideal, weight
from .hopf import antipode, iterated_coproduct
from .lusztig import apply_symmetry, symmetry
from .pairing import NonTriangularInput, WrongSubalgebra, pair
from .parser import ParseError, parse_expression
from .rootdata import InvalidRank, RootDatum, build_root_datum, dump_tables
from .scalars import R, Scalar, scalar_substitute
from .suites import SUITES, SuiteUnavailable, run_suite


class UsageError(ValueError):
    """Invalid command-line input that no lower layer reports itself."""


USAGE_ERRORS = (UsageError, ParseError, InvalidRank, WrongSubalgebra, NonTriangularInput, DegreeTooLarge,
                SuiteUnavailable)


class Session:
    """Datum, degree cap and output conventions shared by every command."""

    def __init__(self, args: argparse.Namespace):
        if args.degree_cap < 1:
            raise UsageError(f"degree cap must be positive, got {args.degree_cap}")
        self.datum: RootDatum = build_root_datum(args.type, args.rank)
        self.cap: int = args.degree_cap
        self.specialized: bool = args.specialize == "q"

    def parse(self, text: str) -> Element:
        return parse_expression(text, self.datum.rank, allow_q=self.specialized)

    def scalar(self, c: Scalar) -> Scalar:
        return scalar_substitute(c, R, R.inverse()) if self.specialized else c

    def fmt(self, c: Scalar) -> str:
        return c.to_str(r_name="q") if self.specialized else c.to_str()

    def element(self, x: Element) -> str:
        return x.map_coefficients(self.scalar).to_str(self.fmt)


def _reduce(s: Session, args) -> str:
    return s.element(reduce_mod_ideal(s.parse(args.expr), s.datum, s.cap))


def _delta(s: Session, args) -> str:
    if args.k < 1:
        raise UsageError(f"-k must be at least 1, got {args.k}")
    t = iterated_coproduct(s.parse(args.expr), args.k)
    t = type(t)(t.slots, {key: s.scalar(c) for key, c in t.terms.items()})
    return t.to_str(s.fmt)


def _antipode(s: Session, args) -> str:
    return s.element(reduce_mod_ideal(antipode(s.parse(args.expr), s.datum), s.datum, s.cap))


def _pair(s: Session, args) -> str:
    return s.fmt(s.scalar(pair(s.parse(args.lower), s.parse(args.upper), s.datum)))


def _lusztig(s: Session, args) -> str:
    if not 1 <= args.i <= s.datum.rank:
        raise UsageError(f"-i must lie in 1..{s.datum.rank}, got {args.i}")
    image = apply_symmetry(symmetry(s.datum, args.i), s.parse(args.expr))
    return s.element(reduce_mod_ideal(image, s.datum, s.cap))


def _weight(s: Session, args) -> str:
    x = s.parse(args.expr)
    try:
        return str(weight(x, s.datum.rank))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(s: Session, args) -> str:
    return dump_tables(s.datum, lambda c: s.fmt(s.scalar(c)))


COMMANDS: dict[str, Callable[[Session, argparse.Namespace], str]] = {
    "reduce": _reduce,
    "delta": _delta,
    "antipode": _antipode,
    "pair": _pair,
    "lusztig": _lusztig,
    "weight": _weight,
    "dump-tables": _dump,
}


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    def default(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--type", choices=["A", "B", "C", "D"], type=str.upper, default=default("A"),
                   help="Lie type (default A)")
    p.add_argument("--rank", type=int, default=default(2), help="rank (default 2)")
    p.add_argument("--degree-cap", type=int, default=default(DEFAULT_DEGREE_CAP),
                   help=f"largest per-side degree reduced modulo the Serre ideal (default {DEFAULT_DEGREE_CAP})")
    p.add_argument("--specialize", choices=["q"], default=default(None),
                   help="set r = q and s = q^-1 in all printed coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsquantum", description="Exact computations in two-parameter quantum groups.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        return p

    command("reduce", "canonical form modulo the Serre relations").add_argument("expr")
    p = command("delta", "iterated coproduct")
    p.add_argument("-k", type=int, default=1, help="number of coproduct applications (default 1)")
    p.add_argument("expr")
    command("antipode", "antipode, in canonical form").add_argument("expr")
    p = command("pair", "pairing <lower, upper>")
    p.add_argument("lower", help="element of the lower Borel part (f, w')")
    p.add_argument("upper", help="element of the upper Borel part (e, w)")
    p = command("lusztig", "image under the symmetry T_i")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("expr")
    command("weight", "root-lattice weight of a homogeneous element").add_argument("expr")
    command("dump-tables", "Cartan matrix, (eps_k, alpha_j) table and torus pairings")
    p = command("verify", "run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        session = Session(args)
        if args.command == "verify":
            reports = run_suite(args.suite, session.datum, session.cap)
            if not reports:
                raise SuiteUnavailable(f"no suite applies to {session.datum.label()}")
            for rep in reports:
                print(rep.text())
            return 0 if all(r.passed for r in reports) else 1
        print(COMMANDS[args.command](session, args))
        return 0
    except USAGE_ERRORS as exc:
        print(f"rsquantum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
