"""Command line front end.

    agflag <preset> [preset options] <command> [command options]

Presets: ``hermitian --q Q``, ``norm-trace --q Q --ell L``,
``gen-hermitian --q Q --ell L``, ``custom --p P --k K --m M --f C0,C1,...``.
Commands: ``grid``, ``flag``, ``isodual-list``, ``verify``, ``semigroup``.
Q is always the first root of f in canonical element order.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Sequence

from . import arith, presets
from .codes import code_dims, hb_star_via_rank
from .curve import CurveError, EvaluationSupport, standard_support
from .field import FieldError
from .flags import (b_max, hermitian_hb_star, hermitian_isodual, isodual_b_list,
                    isodual_fast, isodual_kummer, verify_flag)

GRID_HEADER = ["b", "a", "ell", "dim", "in_hb", "in_hbstar", "in_hpq"]


def _parse_coeffs(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from None


def resolve_preset(args: argparse.Namespace):
    if args.preset == "hermitian":
        return presets.hermitian(args.q)
    if args.preset == "norm-trace":
        return presets.norm_trace(args.q, args.ell)
    if args.preset == "gen-hermitian":
        return presets.gen_hermitian(args.q, args.ell)
    return presets.custom(args.p, args.k, args.m, args.f)


def grid_records(support: EvaluationSupport, b_top: int, a_top: int) -> list[dict]:
    params = support.params
    out = []
    for b in range(b_top + 1):
        for a in range(a_top + 1):
            ell = arith.ell(params, a, b)
            out.append({
                "b": b,
                "a": a,
                "ell": ell,
                "dim": arith.code_dim(params, a, b),
                "in_hb": int(ell > arith.ell(params, a - 1, b)),
                "in_hbstar": int(arith.in_hb_star_closed(params, a, b)),
                "in_hpq": int(arith.semigroup_membership(params, a, b)),
            })
    return out


def grid_summary(support: EvaluationSupport, b_top: int) -> list[dict]:
    params = support.params
    out = []
    for b in range(b_top + 1):
        try:
            top = arith.max_hb_star(params, b)
        except arith.EmptyJumpSet:
            top = None
        out.append({
            "b": b,
            "max_hb_star": top,
            "lower_bound": params.n - b,
            "upper_bound": params.top - b,
            "isodual": isodual_fast(params, b) if b <= b_max(params) else None,
        })
    return out


def cmd_grid(support: EvaluationSupport, args: argparse.Namespace, out) -> int:
    params = support.params
    b_top = args.b_max if args.b_max is not None else 2 * params.m
    a_top = args.a_max if args.a_max is not None else params.top
    records = grid_records(support, b_top, a_top)
    summary = grid_summary(support, b_top)
    if args.format == "json":
        json.dump({"n": params.n, "genus": params.g, "records": records, "summary": summary},
                  out, indent=1)
        out.write("\n")
        return 0
    writer = csv.DictWriter(out, fieldnames=GRID_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    out.write("# summary b,max_hb_star,lower_bound,upper_bound,isodual\n")
    for row in summary:
        cells = ["" if v is None else str(v).lower() for v in row.values()]
        out.write("# " + ",".join(cells) + "\n")
    return 0


def cmd_flag(support: EvaluationSupport, args: argparse.Namespace, out) -> int:
    report = verify_flag(support, args.b, verify=args.verify)
    json.dump(report.to_json(), out)
    out.write("\n")
    return 0


def cmd_isodual_list(support: EvaluationSupport, args: argparse.Namespace, out) -> int:
    json.dump(isodual_b_list(support.params), out)
    out.write("\n")
    return 0


def cmd_semigroup(support: EvaluationSupport, args: argparse.Namespace, out) -> int:
    params = support.params
    w = args.window if args.window is not None else params.window
    grid = [[int(arith.semigroup_membership(params, a, b)) for a in range(w + 1)]
            for b in range(w + 1)]
    json.dump({
        "genus": params.g,
        "hp_gaps": arith.gaps_p(params),
        "hq_gaps": arith.gaps_q(params),
        "gamma": [list(p) for p in arith.gamma_set(params)],
        "window": w,
        "hpq_grid": grid,
    }, out)
    out.write("\n")
    return 0


def run_checks(support: EvaluationSupport, b_top: int, a_top: int,
               hermitian_q: int | None = None) -> dict[str, tuple[int, int]]:
    """Cross-check battery; maps check name to (passed, total)."""
    params = support.params
    results: dict[str, list[int]] = {}

    def record(name: str, ok: bool) -> None:
        tally = results.setdefault(name, [0, 0])
        tally[0] += bool(ok)
        tally[1] += 1

    for b in range(b_top + 1):
        closed = list(arith.hb_star_closed(params, b))
        record("hb_star closed = via ell", closed == list(arith.hb_star_via_ell(params, b)))
        record("hb_star closed = via rank", closed == hb_star_via_rank(support, b))
        if b <= params.top:
            record("max_hb_star formula", arith.max_hb_star(params, b) == max(closed))
            record("n-b <= max <= n+2g-1-b", params.n - b <= max(closed) <= params.top - b)
        dims = code_dims(support, b, a_top)
        record("rank = code_dim", dims == [arith.code_dim(params, a, b)
                                           for a in range(-1, a_top + 1)])
        if b <= b_max(params):
            record("fast general = m | 2b+1", isodual_fast(params, b) == isodual_kummer(params.m, b))
        if hermitian_q is not None and b <= hermitian_q:
            record("Hermitian H_b* = closed", hermitian_hb_star(hermitian_q, b) == closed)
    w = min(a_top, params.window)
    for a in range(w + 1):
        for b in range(w + 1):
            record("lub closure = H(P,Q)",
                   arith.lub_membership(params, a, b) == arith.semigroup_membership(params, a, b))
    gamma = arith.gamma_set(params)
    record("|Gamma| = g", len(gamma) == params.g)
    record("Gamma partners = G(Q)", sorted(c for _, c in gamma) == arith.gaps_q(params))
    if hermitian_q is not None:
        for b in range(b_max(params) + 1):
            record("Hermitian congruence = m | 2b+1",
                   hermitian_isodual(hermitian_q, b) == isodual_kummer(params.m, b))
    return {k: (v[0], v[1]) for k, v in results.items()}


def cmd_verify(support: EvaluationSupport, args: argparse.Namespace, out) -> int:
    params = support.params
    b_top = args.b_max if args.b_max is not None else 12
    a_top = args.a_max if args.a_max is not None else 4 * params.g
    herm = args.q if args.preset == "hermitian" else None
    results = run_checks(support, b_top, a_top, herm)
    failed = 0
    for name, (ok, total) in results.items():
        status = "PASS" if ok == total else "FAIL"
        failed += ok != total
        out.write(f"{status} {name}: {ok}/{total}\n")
    out.write(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}\n")
    return 1 if failed else 0


COMMANDS: dict[str, Callable] = {
    "grid": cmd_grid,
    "flag": cmd_flag,
    "isodual-list": cmd_isodual_list,
    "verify": cmd_verify,
    "semigroup": cmd_semigroup,
}


def _add_commands(parser: argparse.ArgumentParser) -> None:
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("grid", help="per-(b, a) table of l, dim and set memberships")
    p.add_argument("--b-max", type=int)
    p.add_argument("--a-max", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p = sub.add_parser("flag", help="flag report at one b, as JSON")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="run the linear-algebra oracle")
    sub.add_parser("isodual-list", help="all b with an isometry-dual flag, as JSON")
    p = sub.add_parser("verify", help="run the cross-check battery")
    p.add_argument("--b-max", type=int)
    p.add_argument("--a-max", type=int)
    p = sub.add_parser("semigroup", help="gaps, Gamma(P,Q) and H(P,Q) grid, as JSON")
    p.add_argument("--window", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agflag",
        description="Two-point AG codes on Kummer curves: jump sets, semigroups, isometry-dual flags.")
    presets_sub = parser.add_subparsers(dest="preset", required=True)
    p = presets_sub.add_parser("hermitian", help="y^(q+1) = x^q + x over GF(q^2)")
    p.add_argument("--q", type=int, required=True)
    _add_commands(p)
    for name, doc in [("norm-trace", "norm-trace curve over GF(q^ell)"),
                      ("gen-hermitian", "y^(q^ell+1) = x^q + x over GF(q^(2 ell)), ell odd")]:
        p = presets_sub.add_parser(name, help=doc)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--ell", type=int, required=True)
        _add_commands(p)
    p = presets_sub.add_parser("custom", help="y^m = f(x) over GF(p^k)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", type=_parse_coeffs, required=True,
                   help="coefficient encodings of f, constant term first")
    _add_commands(p)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        support = standard_support(resolve_preset(args), 1)
        return COMMANDS[args.command](support, args, out)
    except (CurveError, FieldError, ValueError) as exc:
        print(f"agflag: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
