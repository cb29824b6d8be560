"""Command-line front end: ``orbjac {verify,sigma,jacobian,reduce,series}``.

Exit codes: 0 when every requested check passes, 1 when a verification
fails, 2 for usage, parse or case-data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cases import BUILTIN_CASES, CaseDefinition, CaseError, builtin_case, load_case_file, verify_case
from .milnor import NonIsolatedSingularityError, UnsupportedSingularityError
from .parser import ParseError
from .qseries import SERIES_NAMES, theta_series, verify_series_identity

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text_lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **obj} if isinstance(obj, dict) else obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cases(args, allow_all: bool = True) -> list[CaseDefinition]:
    if getattr(args, "case_file", None):
        return [load_case_file(args.case_file)]
    if args.case is None:
        raise UsageError("one of --case or --case-file is required")
    if args.case == "all":
        if not allow_all:
            raise UsageError("--case all is only valid for verify")
        return [builtin_case(n) for n in BUILTIN_CASES]
    return [builtin_case(args.case)]


def cmd_verify(args) -> int:
    reports = [verify_case(c, args.series_order) for c in _cases(args)]
    if args.json:
        _emit({"cases": [r.as_dict() for r in reports], "ok": all(r.ok for r in reports)}, True, [])
    else:
        for r in reports:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.case}")
            print(f"  theorem    {'ok' if r.theorem.holds else 'FAILED'}  (|G|={r.theorem.group_order}, mu={r.theorem.mu})")
            print(f"  lhs        {r.theorem.lhs}")
            print(f"  rhs        {r.theorem.rhs}")
            if not r.theorem.holds:
                print(f"  difference {r.theorem.difference}")
            print(f"  trace      {'ok' if r.trace.holds else 'FAILED'}  (value {r.trace.value})")
            print(f"  reductions {'ok' if r.reductions.holds else 'FAILED ' + '; '.join(r.reductions.failed)}")
            if r.series is not None:
                s = r.series
                detail = f"to order {s.order}" if s.holds else f"first mismatch at q^{s.first_mismatch}"
                print(f"  series     {'ok' if s.holds else 'FAILED'}  ({detail})")
            if not r.mu_ok:
                print(f"  mu         FAILED (expected {r.theorem.mu})")
            for sector, coeff in sorted(r.theorem.other_sectors.items()):
                print(f"  sector {sector}: {coeff}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_sigma(args) -> int:
    (case,) = _cases(args, allow_all=False)
    orb = case.orbifold
    h, hp = orb.element(args.h), orb.element(args.hprime)
    if args.reduced:
        value = orb.reduce_in_sector(h * hp, orb.sigma(h, hp))
    else:
        value = orb.sigma(h, hp)
    sector = str(h * hp)
    _emit(
        {"case": case.name, "h": str(h), "hprime": str(hp), "sector": sector, "reduced": args.reduced, "sigma": str(value)},
        args.json,
        [f"sigma[{h},{hp}] -> sector {sector}", str(value)],
    )
    return 0


def cmd_jacobian(args) -> int:
    (case,) = _cases(args, allow_all=False)
    J = case.jacobian
    info = J.info()
    lines = [f"mu = {info['mu']}", f"order = {info['order']}"]
    if args.info:
        lines.append("basis: " + ", ".join(info["basis"]))
        lines.append("groebner basis:")
        lines.extend(f"  {g}" for g in info["groebner_basis"])
        lines.append(f"hessian class: {info['hessian_class']}")
    payload = {"case": case.name, **(info if args.info else {"mu": info["mu"], "order": info["order"]})}
    _emit(payload, args.json, lines)
    return 0


def cmd_reduce(args) -> int:
    (case,) = _cases(args, allow_all=False)
    p = case.parse(args.poly)
    nf = case.jacobian.normal_form(p)
    _emit({"case": case.name, "input": str(p), "normal_form": str(nf)}, args.json, [str(nf)])
    return 0


def cmd_series(args) -> int:
    if args.identity:
        r = verify_series_identity(args.identity, args.series_order)
        line = f"{'PASS' if r.holds else 'FAIL'} {r.case} identity to order {r.order}"
        if not r.holds:
            line += f" (first mismatch at q^{r.first_mismatch}: {r.lhs_coeff} != {r.rhs_coeff})"
        _emit(r.as_dict(), args.json, [line])
        return 0 if r.holds else 1
    if not args.name:
        raise UsageError("series needs --name or --identity")
    s = theta_series(args.name, args.series_order)
    payload = {
        "name": args.name,
        "order": s.order,
        "coefficients": [{"exponent": e, "coeff": str(c)} for e, c in s.items()],
    }
    _emit(payload, args.json, [f"{e}: {c}" for e, c in s.items()])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbjac", description="Orbifold Jacobian algebra products and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def case_flags(sp, allow_all: bool):
        choices = list(BUILTIN_CASES) + (["all"] if allow_all else [])
        sp.add_argument("--case", choices=choices)
        sp.add_argument("--case-file", help="TOML case description")
        sp.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="check the point-class identity, trace, reductions and series")
    case_flags(v, True)
    v.add_argument("--series-order", type=int, default=200)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sigma", help="structure constant of xi_h . xi_h'")
    case_flags(s, False)
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--hprime", type=int, required=True)
    s.add_argument("--reduced", action="store_true")
    s.set_defaults(func=cmd_sigma)

    j = sub.add_parser("jacobian", help="Milnor number, basis and Groebner basis")
    case_flags(j, False)
    j.add_argument("--info", action="store_true")
    j.add_argument("--order", choices=["grlex"], default="grlex")
    j.set_defaults(func=cmd_jacobian)

    r = sub.add_parser("reduce", help="normal form of a polynomial in Jac(W)")
    case_flags(r, False)
    r.add_argument("--poly", required=True)
    r.add_argument("--order", choices=["grlex"], default="grlex")
    r.set_defaults(func=cmd_reduce)

    q = sub.add_parser("series", help="print a coefficient series or check an identity")
    q.add_argument("--name", choices=SERIES_NAMES)
    q.add_argument("--identity", choices=["z3", "z4"])
    q.add_argument("--series-order", type=int, default=200)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_series)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "series_order", 1) < 1:
            parser.error("--series-order must be positive")
    except SystemExit as exc:  # argparse exits with 2 on bad usage and 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, CaseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonIsolatedSingularityError, UnsupportedSingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
