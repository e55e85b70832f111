"""``wedge`` command line.

Exit codes: 0 when every check passes, 1 for a failed verification or
script assertion, 2 for usage, parse and domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import construction, geometry, proofs, render
from .errors import DomainError, ParseError, VerificationError
from .numeric import QuadValue, approx_decimal, format_rat, parse_rat
from .sexagesimal import (
    best_sex_approx,
    best_sex_approx_recip,
    format_sex,
    heron_sqrt_sex,
    parse_sex,
    sex_scale,
    sex_to_rational,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_SIDES = {"bm15285_p12": Fraction(60), "bm15285": Fraction(60), "ybc7289": Fraction(30)}

YBC_DIAGONAL = "1;24,51,10"
YBC_RECIPROCAL = "0;42,25,35"
YBC_SCALED = "42;25,35"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    script: str | None = None
    builtin: str | None = None
    side: Fraction | None = None
    svg: str | None = None
    json: str | None = None
    bound: int = proofs.DEFAULT_BOUND
    digits: int = 3

    def __post_init__(self):
        if self.script is not None and self.builtin is not None:
            raise UsageError("give either a script path or --builtin, not both")
        if self.side is not None and self.side <= 0:
            raise DomainError(f"--side must be positive, got {format_rat(self.side)}")
        if self.digits < 1:
            raise UsageError("--digits must be at least 1")


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ParseError:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} (use INT or INT/INT)")


def _emit(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def cmd_construct(cfg: RunConfig, shade: bool = False) -> int:
    if cfg.builtin is not None:
        scripts = construction.builtin_scripts()
        if cfg.builtin not in scripts:
            raise UsageError(f"unknown builtin {cfg.builtin!r}; have {', '.join(scripts)}")
        text = scripts[cfg.builtin]
        label = cfg.builtin
        side = cfg.side if cfg.side is not None else DEFAULT_SIDES.get(cfg.builtin)
    elif cfg.script is not None:
        label = cfg.script
        try:
            text = Path(cfg.script).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.script}: {exc.strerror}")
        side = cfg.side
    else:
        raise UsageError("construct needs a script path or --builtin")
    if "$side" in text:
        if side is None:
            raise UsageError("script uses $side; pass --side")
        text = construction.substitute_side(text, side)
    try:
        result = construction.execute(construction.parse_script(text))
    except ParseError as exc:
        print(f"{label}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    except construction.ExecutionError as exc:
        print(f"{label}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    fig = result.figure
    areas = fig.triangle_areas()
    for name, area in areas:
        vs = dict(fig.triangles)[name]
        print(f"{name} {''.join(vs)} area {format_rat(area)}")
    if areas:
        if len({a for _, a in areas}) == 1:
            print(f"T = {format_rat(areas[0][1])}")
        print(f"total = {format_rat(sum((a for _, a in areas), Fraction(0)))}")
    if {"A", "C"} <= fig.points.keys():
        print(f"diag_sq = {format_rat(geometry.sq_dist(fig.points['A'], fig.points['C']))}")
    for res in result.assertions:
        print(res.describe())
    _emit(cfg.json, fig.to_json())
    _emit(cfg.svg, render.render_svg(fig, shade=shade))
    return EXIT_OK if result.ok else EXIT_FAIL


def _check_line(name: str, lhs: str, rhs: str, ok: bool, rel: str = "=") -> str:
    shown = rel if ok else {"=": "!=", "<": ">="}[rel]
    return f"{'PASS' if ok else 'FAIL'}  {name}: {lhs} {shown} {rhs}"


def verify_ybc7289(side: Fraction) -> list[tuple[str, str, str, bool]]:
    """The YBC 7289 checks as (name, lhs, rhs, passed, relation) rows."""
    rows = []
    report = geometry.ybc7289_report(geometry.build_ybc7289_figure(side))
    two_s2 = 2 * side * side
    rows.append(("diag_sq = 2 side^2", format_rat(report.diag_sq), format_rat(two_s2), report.ok))
    best = format_sex(best_sex_approx(2, 3))
    rows.append(("best 3-place approximation of sqrt(2)", best, YBC_DIAGONAL, best == YBC_DIAGONAL))
    recip = format_sex(best_sex_approx_recip(2, 3))
    rows.append(("best 3-place approximation of 1/sqrt(2)", recip, YBC_RECIPROCAL, recip == YBC_RECIPROCAL))
    scaled = format_sex(sex_scale(YBC_DIAGONAL, 30, 3))
    rows.append(("30 x 1;24,51,10", scaled, YBC_SCALED, scaled == YBC_SCALED))
    err = QuadValue(0, 1, 2) - sex_to_rational(parse_sex(YBC_DIAGONAL))
    within = (abs(err) - Fraction(1, 10**6)).sign() < 0
    rows.append(("|1;24,51,10 - sqrt(2)| < 10^-6", approx_decimal(abs(err), 12), "0.000001", within, "<"))
    return rows


def cmd_verify(tablet: str, side: Fraction | None) -> int:
    if tablet == "bm15285":
        side = DEFAULT_SIDES["bm15285"] if side is None else side
        fig = geometry.build_bm15285_figure(side)
        try:
            report = geometry.verify_problem_xii(fig)
        except VerificationError as exc:
            print(_check_line(exc.identity, exc.lhs, exc.rhs, False))
            return EXIT_FAIL
        print(f"side = {format_rat(side)}, T = {format_rat(report.T)}")
        for name, lhs, rhs in report.rows():
            print(_check_line(name, lhs, rhs, True))
        return EXIT_OK
    side = DEFAULT_SIDES["ybc7289"] if side is None else side
    rows = verify_ybc7289(side)
    for row in rows:
        print(_check_line(*row))
    return EXIT_OK if all(r[3] for r in rows) else EXIT_FAIL


def cmd_prove(n: int, bound: int, json_path: str | None = None) -> int:
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if bound < 2:
        raise UsageError("--bound must be at least 2")
    cert = proofs.decide_sqrt_rational(n, bound)
    text = json.dumps(cert.to_dict(), indent=2) + "\n"
    sys.stdout.write(text)
    _emit(json_path, text)
    return EXIT_OK


def cmd_sexagesimal(args) -> int:
    if args.action == "parse":
        v = parse_sex(args.value)
        print(format_sex(v))
        print(format_rat(sex_to_rational(v)))
        return EXIT_OK
    if args.action == "approx":
        n = _int_arg(args.value)
        if args.recip:
            v = best_sex_approx_recip(n, args.digits)
            target = QuadValue(0, Fraction(1, n), n)
        else:
            v = best_sex_approx(n, args.digits)
            target = QuadValue(0, 1, n)
        err = target - sex_to_rational(v)
        text = approx_decimal(err, 12)
        sign = "" if text.startswith("-") else "+"
        print(format_sex(v))
        print(f"value {format_rat(sex_to_rational(v))}")
        print(f"error {sign}{text}")
        return EXIT_OK
    # heron
    n = _int_arg(args.value)
    iterates = heron_sqrt_sex(n, args.x0, args.digits, args.max_iter)
    for i, x in enumerate(iterates):
        print(f"{i}\t{format_sex(x)}\t{approx_decimal(sex_to_rational(x), 9)}")
    return EXIT_OK


def _int_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected a positive integer, got {text!r}")
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedge",
        description="Exact checks of the BM 15285 and YBC 7289 square-root-of-two figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="run a construction script")
    p.add_argument("script", nargs="?", help="path to a .ct script")
    p.add_argument("--builtin", help="bundled script name (bm15285_p12, ybc7289)")
    p.add_argument("--side", type=_rat_arg, help="value substituted for $side")
    p.add_argument("--svg", help="write the figure as SVG")
    p.add_argument("--json", help="write the figure as JSON")
    p.add_argument("--shade", action="store_true", help="fill triangles in a two-colour checker")

    p = sub.add_parser("verify", help="verify a tablet's claims")
    p.add_argument("tablet", choices=["bm15285", "ybc7289"])
    p.add_argument("--side", type=_rat_arg)

    p = sub.add_parser("prove", help="decide whether sqrt(n) is rational")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=proofs.DEFAULT_BOUND)
    p.add_argument("--json", help="also write the certificate here")

    p = sub.add_parser("sex", help="sexagesimal tools")
    p.add_argument("action", choices=["parse", "approx", "heron"])
    p.add_argument("value", help="numeral (parse) or integer n (approx, heron)")
    p.add_argument("--digits", type=int, default=3)
    p.add_argument("--recip", action="store_true", help="approximate 1/sqrt(n)")
    p.add_argument("--x0", default="1;30", help="starting value for heron")
    p.add_argument("--max-iter", type=int, default=20)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "construct":
            cfg = RunConfig("construct", script=args.script, builtin=args.builtin, side=args.side,
                            svg=args.svg, json=args.json)
            return cmd_construct(cfg, shade=args.shade)
        if args.command == "verify":
            RunConfig("verify", side=args.side)
            return cmd_verify(args.tablet, args.side)
        if args.command == "prove":
            return cmd_prove(args.n, args.bound, args.json)
        if args.digits < 1:
            raise UsageError("--digits must be at least 1")
        return cmd_sexagesimal(args)
    except (UsageError, DomainError, ParseError) as exc:
        print(f"wedge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
