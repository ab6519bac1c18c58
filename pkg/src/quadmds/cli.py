"""Command-line front end.

Subcommands: count-a, coeff, inner, eval, check {fe-s1, fe-s2, fe-shintani},
weyl {closure, word}, quadspace verify, special verify-legendre, verify-all.
Exit status: 0 on success or a passing check, 1 on a failing check, 2 on a
usage error (argparse's convention).  Complex values are written re,im.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import lseries, mdseval, quadspace, specialfn, verify, weyl
from .arith import count_sqrt_mod
from .coefficients import TableBounds, coefficient_table, table_to_csv, table_to_jsonl
from .errors import QuadMdsError
from .weyl import SpectralPoint


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected re or re,im, got {text!r}")


def _policy(args, **overrides) -> mdseval.TruncationPolicy:
    kwargs = dict(
        max_outer=getattr(args, "max_d", None) or 400,
        max_inner=getattr(args, "max_m", None) or 200_000,
        tolerance=getattr(args, "tol", None) or 1e-6,
        workers=getattr(args, "threads", None) or 1,
    )
    kwargs.update(overrides)
    return mdseval.TruncationPolicy(**kwargs)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _map_to_rationals(m: weyl.AffineMap3) -> list[str]:
    flat = [x for row in m.linear for x in row] + list(m.shift)
    return [str(x) for x in flat]


def _map_from_rationals(vals: list[str]) -> weyl.AffineMap3:
    if len(vals) != 12:
        raise argparse.ArgumentTypeError("a map is 12 rationals: 9 linear + 3 shift")
    fr = [Fraction(v) for v in vals]
    rows = [fr[0:3], fr[3:6], fr[6:9]]
    return weyl.AffineMap3.from_rows(rows, fr[9:12])


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_count_a(args) -> int:
    res = count_sqrt_mod(args.m, args.n)
    _emit({"m": res.modulus, "n": res.residue, "count": res.count})
    return 0


def _cmd_coeff(args) -> int:
    bounds = TableBounds(args.max_m or 20, args.max_n or (args.max_m or 20), args.max_d or 100)
    table = coefficient_table(bounds, 1 if args.sign >= 0 else -1, workers=args.threads or 1)
    if args.format == "csv":
        sys.stdout.write(table_to_csv(table))
    else:
        sys.stdout.write(table_to_jsonl(table))
    return 0


def _cmd_inner(args) -> int:
    val = lseries.inner_series(
        args.E, args.s, method=args.method, variant=args.variant,
        max_terms=args.max_m or lseries.DEFAULT_DIRECT_TERMS,
    )
    _emit(
        {
            "E": val.E,
            "s": [val.s.real, val.s.imag],
            "method": val.method,
            "value": [val.value.real, val.value.imag],
            "error_bound": val.error_bound,
            "error_is_rigorous": val.error_is_rigorous,
        }
    )
    return 0


def _cmd_eval(args) -> int:
    policy = _policy(args)
    rows = []
    for pt in args.point:
        s1, s2, w = pt
        which = []
        if args.series in ("xi", "both-signs"):
            for sign in ((1, -1) if args.series == "both-signs" else ((1,) if args.sign >= 0 else (-1,))):
                val = mdseval.eval_xi(sign, SpectralPoint(s1, s2, w), args.method, policy)
                which.append((f"xi{'+' if sign > 0 else '-'}", val))
        for tag, val in which:
            rows.append(
                {
                    "series": tag,
                    "point": [[s1.real, s1.imag], [s2.real, s2.imag], [w.real, w.imag]],
                    "method": val.method,
                    "value": [val.value.real, val.value.imag],
                    "reported_error": val.reported_error,
                    "error_mode": val.mode,
                }
            )
    if args.format == "csv":
        print("series,s1,s2,w,value_re,value_im,reported_error,error_mode")
        for r in rows:
            p = r["point"]
            print(
                f'{r["series"]},{p[0][0]}+{p[0][1]}j,{p[1][0]}+{p[1][1]}j,'
                f'{p[2][0]}+{p[2][1]}j,{r["value"][0]},{r["value"][1]},'
                f'{r["reported_error"]},{r["error_mode"]}'
            )
    else:
        for r in rows:
            _emit(r)
    return 0


def _cmd_check(args) -> int:
    policy = _policy(args, max_outer=args.max_d or (3000 if args.which == "fe-shintani" else 1500))
    if args.which == "fe-shintani":
        rep = mdseval.check_fe_shintani(args.i, args.s, args.w, policy)
    else:
        i = 1 if args.which == "fe-s1" else 2
        point = SpectralPoint(*args.point[0])
        rep = mdseval.check_fe_s(i, 1 if args.sign >= 0 else -1, point, policy)
    _emit(rep.to_json_dict())
    return 0 if rep.passed else 1


def _cmd_weyl(args) -> int:
    if args.what == "closure":
        maps = weyl.group_closure()
        out = [{"word": list(weyl.find_word(g)), "map": _map_to_rationals(g)} for g in maps]
        _emit({"order": len(maps), "elements": out})
        return 0
    target = _map_from_rationals(args.target)
    word = weyl.find_word(target)
    if word is None:
        _emit({"found": False})
        return 1
    _emit({"found": True, "word": list(word)})
    return 0


def _cmd_quadspace(args) -> int:
    reports = quadspace.verify_all(args.trials, args.seed)
    all_pass = all(r.passed for r in reports)
    for r in reports:
        mark = "PASS" if r.passed else "FAIL"
        print(f"[{mark}] {r.name}" + (f": {r.detail}" if r.detail else ""))
    return 0 if all_pass else 1


def _cmd_special(args) -> int:
    # pass/fail table with the max residual per grid point
    failures = 0
    print("identity,u,t,s,residual,status")
    for u in (0.1, 0.3, 0.7):
        for t in (0.5, 1.0, 2.0):
            if 2.0 * u / math.sqrt(t) >= math.sqrt(3.0):
                continue
            for s in (1.2, 1.4, 1.7):
                spec = specialfn.ThetaIntegralSpec(1, u, t, s)
                gap = abs(
                    specialfn.theta_integral(spec)
                    - specialfn.theta_plus_closed_form(u, t, s)
                )
                ok = gap <= args.tol
                failures += not ok
                print(f"plus,{u},{t},{s},{gap:.3e},{'pass' if ok else 'fail'}")
    for t in (0.5, 1.0, 2.0):
        for ratio in (1.1, 1.4, 1.7):
            u = 0.5 * math.sqrt(t) * ratio
            for s in (1.2, 1.4, 1.7):
                spec = specialfn.ThetaIntegralSpec(-1, u, t, s)
                gap = abs(
                    specialfn.theta_integral(spec)
                    - specialfn.theta_minus_closed_form(u, t, s)
                )
                ok = gap <= args.tol
                failures += not ok
                print(f"minus,{u:.6f},{t},{s},{gap:.3e},{'pass' if ok else 'fail'}")
    return 0 if failures == 0 else 1


def _cmd_verify_all(args) -> int:
    numbers = None
    if args.criteria:
        numbers = sorted(int(k) for k in args.criteria.split(","))
    results = verify.run_all(numbers)
    summary = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "elapsed_s": round(r.elapsed, 2),
                "detail": r.detail,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    _emit(summary)
    return 0 if summary["all_passed"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadmds",
        description="quadratic-congruence counts, multiple Dirichlet series, "
        "and functional-equation verification",
    )
    parser.add_argument("--cache-dir", help="cache directory (else MDS_CACHE_DIR)")
    parser.add_argument("--threads", type=int, default=1, help="worker count")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count-a", help="congruence count A(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_count_a)

    p = sub.add_parser("coeff", help="coefficient table")
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-d", type=int)
    p.add_argument("--sign", type=int, default=1)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(fn=_cmd_coeff)

    p = sub.add_parser("inner", help="inner Dirichlet series B(E, s)")
    p.add_argument("--E", type=int, required=True)
    p.add_argument("--s", type=_parse_complex, required=True)
    p.add_argument("--method", choices=("euler", "direct"), default="euler")
    p.add_argument("--variant", choices=("4m", "m"), default="4m")
    p.add_argument("--max-m", type=int)
    p.set_defaults(fn=_cmd_inner)

    p = sub.add_parser("eval", help="triple series values")
    p.add_argument(
        "--point",
        type=lambda t: tuple(_parse_complex(x) for x in t.split("/")),
        action="append",
        required=True,
        help="s1/s2/w with each component re,im (repeatable for grids)",
    )
    p.add_argument("--method", choices=("direct", "factored"), default="factored")
    p.add_argument("--series", choices=("xi", "both-signs"), default="both-signs")
    p.add_argument("--sign", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--max-d", type=int)
    p.add_argument("--max-m", type=int)
    p.add_argument("--tol", type=float)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("check", help="functional-equation residual checks")
    p.add_argument("which", choices=("fe-s1", "fe-s2", "fe-shintani"))
    p.add_argument("--s", type=_parse_complex, help="s for fe-shintani")
    p.add_argument("--w", type=_parse_complex, help="w for fe-shintani")
    p.add_argument("--i", type=int, default=1, help="series index for fe-shintani")
    p.add_argument(
        "--point",
        type=lambda t: tuple(_parse_complex(x) for x in t.split("/")),
        action="append",
        help="s1/s2/w for fe-s1 and fe-s2",
    )
    p.add_argument("--sign", type=int, default=1)
    p.add_argument("--tol", type=float)
    p.add_argument("--max-d", type=int)
    p.add_argument("--max-m", type=int)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("weyl", help="the functional-equation group")
    p.add_argument("what", choices=("closure", "word"))
    p.add_argument("--target", nargs=12, help="12 rationals: 9 linear + 3 shift")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(fn=_cmd_weyl)

    p = sub.add_parser("quadspace", help="exact matrix identity checks")
    p.add_argument("what", choices=("verify",))
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(fn=_cmd_quadspace)

    p = sub.add_parser("special", help="special-function identity checks")
    p.add_argument("what", choices=("verify-legendre",))
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(fn=_cmd_special)

    p = sub.add_parser("verify-all", help="run the acceptance criteria")
    p.add_argument("--criteria", help="comma-separated criterion numbers")
    p.set_defaults(fn=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ["MDS_CACHE_DIR"] = args.cache_dir
    if args.command == "check" and args.which == "fe-shintani":
        if args.s is None or args.w is None:
            parser.error("fe-shintani requires --s and --w")
    if args.command == "check" and args.which in ("fe-s1", "fe-s2") and not args.point:
        parser.error(f"{args.which} requires --point s1/s2/w")
    if args.command == "weyl" and args.what == "word" and not args.target:
        parser.error("weyl word requires --target")
    if args.command == "quadspace":
        args.seed = args.seed or 0
    try:
        return args.fn(args)
    except QuadMdsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
