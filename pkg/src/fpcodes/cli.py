"""Command-line interface.

    fpcodes table  --example nine-points
    fpcodes table  --cartesian "q=3 A2=0,1 A3=0,1,2" --dmax 3 --format json
    fpcodes fp     --ideal L.txt --dmax 6
    fpcodes degree --ideal L.txt --monomial 0,1,0
    fpcodes cover  --example six-points --dmax 4
    fpcodes verify --suite aug28

Exit status: 0 on success, 2 when a verification suite fails, 3 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import ci, codes, formats, verify
from . import monomial as mono
from .errors import FPCodesError, InputError, MissingInitialIdeal
from .ff import Fq, parse_field

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_INPUT = 3


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class Problem:
    """What the command operates on: a point set, an initial ideal, or both."""

    X: codes.PointSet | None = None
    L: mono.MonomialIdeal | None = None
    source: str = ""


def _source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", help="field order: p, p^k or a prime power")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--points", metavar="FILE", help="point-set file")
    src.add_argument("--cartesian", metavar="SPEC", help='e.g. "q=3 A2=0,1 A3=0,1,2"')
    src.add_argument("--torus", metavar="S", type=int, help="projective torus in P^(S-1)")
    src.add_argument("--pspace", metavar="S", type=int, help="all points of P^(S-1)")
    src.add_argument("--example", choices=sorted(formats.EXAMPLES), help="bundled example")
    p.add_argument("--ideal", metavar="FILE", help="initial ideal file (overrides the built-in one)")
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fpcodes", description="Footprint and minimum distance of Reed-Muller-type codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="d, |X|, H_X(d), delta_X(d), fp(d) per degree")
    _source_args(t)
    t.add_argument("--cap", type=int, default=codes.DEFAULT_CAP, help="enumeration cap")
    t.add_argument("--force", action="store_true", help="ignore the cap")

    f = sub.add_parser("fp", help="footprint function of the initial ideal")
    _source_args(f)

    dl = sub.add_parser("delta", help="minimum distance by enumeration")
    _source_args(dl)
    dl.add_argument("--cap", type=int, default=codes.DEFAULT_CAP)
    dl.add_argument("--force", action="store_true")

    dg = sub.add_parser("degree", help="degree and regularity of S/L, or of S/(L, t^a)")
    _source_args(dg)
    dg.add_argument("--monomial", metavar="A", help="exponent vector a, comma separated")

    c = sub.add_parser("cover", help="fewest hyperplanes covering X - {P} and missing P")
    _source_args(c)
    c.add_argument("--point", type=int, action="append", metavar="I", help="point index (default: all)")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", choices=sorted(verify.SUITES), metavar="NAME",
                   help=f"one of {', '.join(verify.SUITES)}; repeatable")
    return parser


def _field(args) -> Fq:
    if not args.field:
        raise UsageError("--field is required for this point set")
    return parse_field(args.field)


def resolve(args) -> Problem:
    prob = Problem()
    if args.example:
        prob.X, prob.L = formats.load_example(args.example)
        prob.source = args.example
    elif args.points:
        got = formats.read_points(args.points, parse_field(args.field) if args.field else None)
        if isinstance(got, formats.CartesianSpec):
            prob.X, prob.L = got.pointset(), codes.cartesian_initial_ideal(got.sizes)
        else:
            prob.X = got
        prob.source = args.points
    elif args.cartesian:
        spec = formats.parse_cartesian(args.cartesian, parse_field(args.field) if args.field else None)
        prob.X, prob.L = spec.pointset(), codes.cartesian_initial_ideal(spec.sizes)
        prob.source = "cartesian"
    elif args.torus is not None:
        F = _field(args)
        prob.X = codes.torus_pointset(F, args.torus)
        prob.L = codes.cartesian_initial_ideal((F.q - 1,) * (args.torus - 1))
        prob.source = "torus"
    elif args.pspace is not None:
        prob.X = codes.projective_space_pointset(_field(args), args.pspace)
        prob.source = "pspace"
    if args.ideal:
        prob.L = formats.read_ideal(args.ideal)
    if prob.X is None and prob.L is None:
        raise UsageError("give a point set (--points, --cartesian, --torus, --pspace, --example) or --ideal")
    if prob.X is not None and prob.L is not None and prob.L.s != prob.X.s:
        raise InputError(f"ideal has {prob.L.s} variables but the points live in {prob.X.s}")
    return prob


def _degrees(args, default_max: int) -> range:
    dmax = args.dmax if args.dmax is not None else default_max
    if args.dmin < 1:
        raise UsageError("--dmin must be >= 1")
    if args.dmin > dmax:
        raise UsageError(f"empty degree range {args.dmin}..{dmax}")
    return range(args.dmin, dmax + 1)


def _need_points(prob: Problem, what: str) -> codes.PointSet:
    if prob.X is None:
        raise UsageError(f"{what} needs a point set")
    return prob.X


def _fp_values(L: mono.MonomialIdeal, degrees) -> dict[int, int]:
    # the closed form applies when L is a CI; otherwise count from the definition
    try:
        shape = ci.classify_ci_dim1(L)
    except InputError:
        return {d: ci.fp_bruteforce(L, d) for d in degrees}
    return {d: ci.fp_closed_form(shape.sorted_degrees, d) for d in degrees}


def cmd_table(args, out, err) -> int:
    prob = resolve(args)
    X = _need_points(prob, "table")
    reg = codes.reg_X(X)
    degrees = _degrees(args, max(reg, 1))
    fp = None
    if prob.L is None:
        print("notice: no initial ideal available; fp column omitted (use --ideal)", file=err)
    else:
        fp = _fp_values(prob.L, degrees)
    rows = []
    for d in degrees:
        rec = {"d": d, "length": len(X), "dimension": codes.hilbert_X(X, d)}
        rec["delta"] = codes.min_distance_enum(X, d, cap=args.cap, force=args.force) if len(X) >= 2 else None
        if fp is not None:
            rec["fp"] = fp[d]
        rec["regularity"] = reg
        rec["degree"] = len(X)
        rows.append(rec)
    out.write(formats.render_records(rows, args.format))
    return EXIT_OK


def cmd_fp(args, out, err) -> int:
    prob = resolve(args)
    if prob.L is None:
        raise MissingInitialIdeal("fp needs an initial ideal: use --ideal, --cartesian, --torus or --example")
    prof = mono.hilbert_oracle(prob.L)
    degrees = _degrees(args, prof.regularity + 2)
    fp = _fp_values(prob.L, degrees)
    rows = [{"d": d, "fp": fp[d], "regularity": prof.regularity, "degree": prof.degree} for d in degrees]
    out.write(formats.render_records(rows, args.format))
    return EXIT_OK


def cmd_delta(args, out, err) -> int:
    X = _need_points(resolve(args), "delta")
    degrees = _degrees(args, max(codes.reg_X(X), 1))
    rows = [{"d": d, "length": len(X), "delta": codes.min_distance_enum(X, d, cap=args.cap, force=args.force)}
            for d in degrees]
    out.write(formats.render_records(rows, args.format))
    return EXIT_OK


def _parse_exponents(text: str, s: int) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad exponent vector {text!r}") from None
    if len(a) != s:
        raise UsageError(f"exponent vector needs {s} entries")
    return a


def cmd_degree(args, out, err) -> int:
    prob = resolve(args)
    if prob.L is None:
        raise MissingInitialIdeal("degree needs an ideal: use --ideal, --cartesian, --torus or --example")
    L = prob.L
    prof = mono.hilbert_oracle(L)
    rec = {"ideal": str(L), "dim": prof.dim, "degree": prof.degree, "regularity": prof.regularity}
    try:
        shape = ci.classify_ci_dim1(L)
    except InputError:
        shape = None
    if shape is not None:
        rec["ci_case"] = shape.variant
        rec["ci_degrees"] = " ".join(map(str, shape.sorted_degrees))
    if args.monomial:
        a = _parse_exponents(args.monomial, L.s)
        rec["monomial"] = mono.format_monomial(a)
        rec["degree_with_monomial"] = mono.degree_with_monomial(L, a)
        if shape is not None and mono.is_zero_divisor(L, a):
            b = shape.to_normal(a)
            if shape.variant == ci.CASE_I:
                rec["closed_form"] = ci.degree_case_i(shape.degrees, b)
            else:
                rec["closed_form"] = ci.degree_case_ii(shape, b)
    out.write(formats.render_records([rec], args.format))
    return EXIT_OK


def cmd_cover(args, out, err) -> int:
    X = _need_points(resolve(args), "cover")
    reg = codes.reg_X(X)
    dmax = args.dmax if args.dmax is not None else reg
    if dmax < 1:
        raise UsageError("--dmax must be >= 1")
    idx = args.point if args.point else range(len(X))
    rows = []
    for i in idx:
        if not 0 <= i < len(X):
            raise UsageError(f"point index {i} out of range 0..{len(X) - 1}")
        P = X.points[i]
        r = codes.min_hyperplane_cover(X, P, dmax)
        found = not isinstance(r, codes.NotFoundWithin)
        rows.append({"point": i, "coords": " ".join(map(str, P.coords)),
                     "cover": r if found else f">{dmax}",
                     "lower_bound": r if found else r.lower_bound, "regularity": reg})
    out.write(formats.render_records(rows, args.format))
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    results = verify.run_suites(args.suite)
    for r in results:
        print(r.line(), file=out)
        for msg in r.failures:
            print(f"  {msg}", file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


COMMANDS = {"table": cmd_table, "fp": cmd_fp, "delta": cmd_delta, "degree": cmd_degree,
            "cover": cmd_cover, "verify": cmd_verify}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out, err)
    except FPCodesError as exc:
        print(f"fpcodes: error: {exc}", file=err)
        return EXIT_INPUT
    except OSError as exc:
        print(f"fpcodes: error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
