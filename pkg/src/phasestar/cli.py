"""Command-line front end.

Subcommands:

    star       moyal | clifford | mc products of two expressions
    factorize  build the factorized system for a superpotential and verify it
    genvalue   oscillator star-genvalue checks for the partner pair
    verify     superpotential-independent identity suites

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage or parse error.
Reports print to stdout; diagnostics go to stderr.  Pass '-' as an
expression to read it from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .expr import ExprError, parse_multivector, parse_poly
from .gausswigner import bopp_star_left, oscillator_wigner
from .phasepoly import PhasePoly, moyal_star
from .report import Report
from .scalars import HbarScalar
from .susy import (
    HolomorphicFrame,
    Superpotential,
    SusySystem,
    ladder_check,
    projector_check,
    verify_pauli_algebra,
    verify_susy_algebra,
)

USAGE_ERROR = 2
IDENTITY_FAILURE = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasestar",
        description="Exact star products on phase space and supersymmetric factorization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    star = sub.add_parser("star", help="star product of two expressions")
    star.add_argument("kind", choices=["moyal", "clifford", "mc"])
    star.add_argument("lhs", help="left operand ('-' reads stdin)")
    star.add_argument("rhs", help="right operand ('-' reads stdin)")
    star.add_argument("--dim", type=int, default=2, help="generator count (default 2)")

    factorize = sub.add_parser("factorize", help="factorize a superpotential")
    factorize.add_argument("-W", "--superpotential", required=True, metavar="EXPR")
    factorize.add_argument("--format", choices=["text", "json"], default="text")

    genvalue = sub.add_parser("genvalue", help="oscillator star-genvalue checks")
    genvalue.add_argument("--n", type=int, default=0, help="highest level (default 0)")
    genvalue.add_argument("--max-n", type=int, default=6, help="configured ceiling")
    genvalue.add_argument("--format", choices=["text", "json"], default="text")
    genvalue.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)

    verify = sub.add_parser("verify", help="superpotential-independent identities")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _read_expr(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    return text


def _emit(report: Report, fmt: str, superpotential: str | None, h1: str | None, h2: str | None) -> int:
    if fmt == "json":
        payload = {
            "superpotential": superpotential,
            "H1": h1,
            "H2": h2,
            "identities": report.identities_json(),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(report.to_text())
    return 0 if report.all_passed else IDENTITY_FAILURE


def _cmd_star(args) -> int:
    lhs_src = _read_expr(args.lhs)
    rhs_src = _read_expr(args.rhs)
    if args.kind == "moyal":
        result = moyal_star(parse_poly(lhs_src), parse_poly(rhs_src))
        print(result.render())
        return 0
    if args.dim < 1:
        print("error: --dim must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    lhs = parse_multivector(lhs_src, args.dim)
    rhs = parse_multivector(rhs_src, args.dim)
    if args.kind == "clifford":
        result = lhs.clifford_star(rhs)
    else:
        result = lhs.moyal_clifford_star(rhs)
    print(result.render())
    return 0


def _cmd_factorize(args) -> int:
    poly = parse_poly(_read_expr(args.superpotential))
    try:
        w = Superpotential(poly)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    system = SusySystem.assemble(w)
    report = Report(
        title=f"factorize W = {w!r}",
        summary={
            "W": repr(w),
            "w": repr(system.w),
            "H_S": repr(system.h_s),
            "H1": system.h1.render(),
            "H2": system.h2.render(),
            "Q+": repr(system.q_plus),
            "Q-": repr(system.q_minus),
        },
    )
    report.extend(verify_susy_algebra(system))
    report.extend(verify_pauli_algebra(system.metric))
    report.extend(ladder_check(HolomorphicFrame.build(w, system.metric)))
    return _emit(report, args.format, repr(w), system.h1.render(), system.h2.render())


def _cmd_genvalue(args) -> int:
    if args.n < 0:
        print("error: --n must be nonnegative", file=sys.stderr)
        return USAGE_ERROR
    if args.n > args.max_n:
        print(f"error: --n exceeds the configured maximum {args.max_n}", file=sys.stderr)
        return USAGE_ERROR
    w = Superpotential(PhasePoly.var_q())
    system = SusySystem.assemble(w)
    report = Report(
        title="oscillator star-genvalue checks",
        summary={"W": repr(w), "H1": system.h1.render(), "H2": system.h2.render()},
    )
    for level in range(args.n + 1):
        wigner = oscillator_wigner(level)
        e1 = HbarScalar.of(level, 1)
        if args.tamper and level == 0:
            e1 = e1 + 1  # deliberate fault to demonstrate the failure path
        e2 = HbarScalar.of(level + 1, 1)
        report.add(
            f"H1 * W{level} = ({e1.render()})*W{level}",
            bopp_star_left(system.h1, wigner),
            wigner.scale(e1),
        )
        report.add(
            f"H2 * W{level} = ({e2.render()})*W{level}",
            bopp_star_left(system.h2, wigner),
            wigner.scale(e2),
        )
    return _emit(report, args.format, repr(w), system.h1.render(), system.h2.render())


def _cmd_verify(args) -> int:
    report = Report(title="superpotential-independent identities")
    report.extend(verify_pauli_algebra())
    report.extend(projector_check())
    report.extend(ladder_check(HolomorphicFrame.build(Superpotential(PhasePoly.zero()))))
    return _emit(report, args.format, None, None, None)


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        if args.command == "star":
            return _cmd_star(args)
        if args.command == "factorize":
            return _cmd_factorize(args)
        if args.command == "genvalue":
            return _cmd_genvalue(args)
        return _cmd_verify(args)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
