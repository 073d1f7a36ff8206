"""
Command-line front end.

Exit codes: 0 success / all rows match, 1 theorem mismatch, 2 permutation
outside the bijection's class, 3 conjecture mismatch only, 64 usage error,
65 bad input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bijection, enumeration, verify
from .errors import DomainError, MembershipError, ResourceError, ShapeError, ValidationError
from .rsk import parse_permutation, rsk, rsk_inverse
from .tableaux import SkewWeight, Tableau, classify_tableau, rectangle, violations

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_MEMBERSHIP = 2
EXIT_CONJECTURE = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_tableau_file(path: str | Path) -> Tableau:
    """Load a tableau from JSON and reject anything that is not semistandard."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read tableau from {path}: {exc}") from exc
    try:
        t = Tableau.from_json(data)
    except ShapeError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
    if classify_tableau(t) == "invalid":
        raise ValidationError(f"{path}: not a tableau: " + "; ".join(violations(t)))
    return t


def _params(text: str) -> bijection.BijectionParams:
    try:
        w, n, k = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--params expects 'w,n,k', got {text!r}") from None
    return bijection.BijectionParams(w, n, k)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tableau-lab", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kostka", help="Kostka number of a rectangle with skewed content")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--a", type=int, default=None, help="repeated weight (default width-1)")
    p.add_argument("--emit-tableaux", action="store_true",
                   help="print every tableau as a JSON line instead of the count")

    p = sub.add_parser("count-perms", help="brute-force count of a permutation class")
    p.add_argument("--class", dest="cls", required=True, choices=enumeration.PERM_CLASSES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-m", type=int, default=None, help="override the brute-force cap")

    p = sub.add_parser("nc2", help="count colored noncrossing partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)

    p = sub.add_parser("catalan-rect", help="standard tableaux of an n-wide, m-tall rectangle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("biject", help="run the bijection forward or backward")
    bsub = p.add_subparsers(dest="direction", required=True, parser_class=_Parser)
    fwd = bsub.add_parser("forward")
    fwd.add_argument("--params", required=True, help="w,n,k")
    fwd.add_argument("--input", required=True, help="JSON file holding R")
    fwd.add_argument("--m-index", type=int, default=0)
    inv = bsub.add_parser("inverse")
    inv.add_argument("--params", required=True, help="w,n,k")
    inv.add_argument("--perm", required=True, help='one-line notation, e.g. "3 1 4 2"')

    p = sub.add_parser("verify", help="check counting identities over a grid")
    p.add_argument("--claim", required=True, help=f"one of {', '.join(verify.CLAIMS)} or all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-cells", type=int)
    p.add_argument("--max-size", type=int)
    p.add_argument("--w", type=_int_list, help="width(s), comma separated")
    p.add_argument("--k", type=_int_list, help="|k| value(s), comma separated")
    p.add_argument("--beyond-hypotheses", action="store_true",
                   help="for thm2.2, also include tuples with w >= n")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--no-timing", action="store_true",
                   help="leave elapsed_ms blank so reports are byte-identical across runs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the report here instead of stdout")
    return parser


def _cmd_kostka(args) -> int:
    a = args.width - 1 if args.a is None else args.a
    weight = SkewWeight(args.height, args.k, a)
    shape = rectangle(args.width, args.height)
    if args.emit_tableaux:
        for t in enumeration.enumerate_ssyt(shape, weight.expand()):
            print(t.dumps())
    else:
        print(enumeration.kostka(shape, weight.expand()))
    return EXIT_OK


def _cmd_biject(args) -> int:
    params = _params(args.params)
    if args.direction == "forward":
        r = parse_tableau_file(args.input)
        if params.k == 0:
            pair = bijection.forward_base(r, params.w, params.n)
        else:
            blocks = bijection.enumerate_m_blocks(params.k, params.w)
            if not 0 <= args.m_index < len(blocks):
                raise UsageError(f"--m-index must lie in [0, {len(blocks) - 1}]")
            pair = bijection.forward_skew(r, params, blocks[args.m_index])
        out = {"P": pair.P.to_json(), "Q": pair.Q.to_json(), "sigma": list(rsk_inverse(pair))}
    else:
        perm = parse_permutation(args.perm)
        if len(perm) != params.m:
            raise ValidationError(f"permutation has length {len(perm)}, expected m={params.m}")
        pair = rsk(perm)
        if params.k == 0:
            try:
                r = bijection.inverse_base(pair, params.w, params.n)
            except DomainError as exc:
                raise MembershipError(str(exc)) from exc
            out = {"R": r.to_json(params.w), "M": None}
        else:
            r, m = bijection.inverse_skew(pair, params)
            out = {"R": r.to_json(params.w), "M": m.to_json(params.w)}
    print(json.dumps(out, separators=(",", ":")))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.claim != "all" and args.claim not in verify.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; expected one of {', '.join(verify.CLAIMS)}, all")
    bounds = verify.Bounds(
        max_n=args.max_n,
        max_m=args.max_m,
        max_cells=args.max_cells,
        max_size=args.max_size,
        widths=args.w,
        ks=args.k,
        beyond_hypotheses=args.beyond_hypotheses,
    )
    reports = verify.run_verify(args.claim, bounds, jobs=args.jobs)
    timing = not args.no_timing
    if args.format == "json":
        text = verify.format_json(reports, timing) + "\n"
    else:
        text = verify.format_csv(reports, timing)
        for claim in dict.fromkeys(r.claim for r in reports):
            if claim in verify.NOTES:
                print(f"note [{claim}]: {verify.NOTES[claim]}", file=sys.stderr)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return verify.exit_code(reports)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "kostka":
            return _cmd_kostka(args)
        if args.command == "count-perms":
            print(enumeration.count_perm_class(args.cls, args.m, args.w, args.k, cap=args.max_m))
            return EXIT_OK
        if args.command == "nc2":
            print(enumeration.count_colored_noncrossing(args.n, args.colors))
            return EXIT_OK
        if args.command == "catalan-rect":
            print(enumeration.rect_catalan(args.n, args.m))
            return EXIT_OK
        if args.command == "biject":
            return _cmd_biject(args)
        return _cmd_verify(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except MembershipError as exc:
        print(f"membership error: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except (ValidationError, DomainError, ShapeError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
