"""Command-line front end.

Subcommands::

    series     evaluate a named closed-form sum inside a window
    enumerate  run the lattice enumeration (generating function or objects)
    product    build and expand a chain's product side
    system     build the coupled functional-equation system
    solve      solve a system by graded fixed-point iteration
    verify     run registered identity cases and report comparisons
    fit        solve for weights matching a target product
    balance    census of the pair-exponent symmetry over all profiles

Exit codes: 0 success; 1 any verification inequality; 2 usage or
infeasibility errors.  Output is deterministic for a fixed invocation,
including under ``verify --jobs``: cases are emitted in sorted label
order regardless of completion order.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional

from .fitkit import FitProblem, fit_report
from .identities import (
    CONVENTIONS,
    get_case,
    registry,
    report_text,
    sum_alternating_mod4,
    sum_double_mod7,
    sum_euler,
    sum_goellnitz,
    sum_mod12,
    sum_rogers_ramanujan,
    sum_schmidt_distinct_even,
    sum_schmidt_distinct_odd,
    sum_signed_distinct_mod2,
    verify,
)
from .lattice import KINDS, enumerate_objects, genfun_by_enumeration
from .products import (
    ORIENTATIONS,
    balance_census,
    cp_product_spec,
    dspp_product_spec,
    scp_product_spec,
)
from .recur import build_system, solve_fixed_point, system_to_json
from .series import TruncatedSeries, Window, series_to_json

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _parse_profile(text: str) -> tuple:
    cleaned = text.strip().strip("()[]")
    try:
        entries = tuple(int(x) for x in cleaned.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            "profile must be comma-separated +1/-1 entries, e.g. '-1,1'"
        )
    if not entries or any(x not in (1, -1) for x in entries):
        raise argparse.ArgumentTypeError(
            "profile must be comma-separated +1/-1 entries, e.g. '-1,1'"
        )
    return entries


def _parse_weights(text: str) -> tuple:
    cleaned = text.strip().strip("()[]")
    try:
        return tuple(Fraction(x.strip()) for x in cleaned.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "weights must be comma-separated rationals, e.g. '1,2,1' or '1/2,1'"
        )


def _parse_target(text: str) -> tuple:
    """'1,4,5@5' -> ((1, 4, 5), 5)."""
    try:
        exps, modulus = text.split("@")
        return (
            tuple(Fraction(x.strip()) for x in exps.split(",") if x.strip()),
            Fraction(modulus.strip()),
        )
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "target must look like 'e1,e2,...@modulus', e.g. '1,4,5@5'"
        )


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("window bounds must be >= 1")
    return value


def _window(args, *, default_d: Optional[int] = None) -> Window:
    d = args.D if args.D is not None else default_d
    return Window(args.N, d)


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))


def _series_lines(series: TruncatedSeries) -> list:
    lines = []
    bivariate = any(z for z, _, _ in series.items())
    for z_deg, q_exp, c in series.items():
        if bivariate:
            lines.append("z^%d q^%s: %d" % (z_deg, q_exp, c))
        else:
            lines.append("q^%s: %d" % (q_exp, c))
    return lines or ["0"]


def _print_series(series: TruncatedSeries, args, header: str) -> None:
    if args.format == "json":
        _emit(
            {
                "schema": "cylq-cli/1",
                "command": header,
                "conventions": dict(CONVENTIONS),
                "series": series_to_json(series),
            },
            args,
        )
        return
    w = series.window
    print(
        "%s  [window q<%s z<=%s scale=%s]"
        % (header, w.q_truncation, w.z_truncation, w.q_scale)
    )
    for line in _series_lines(series):
        print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

_SUMS = {
    "euler": lambda args, w: sum_euler(w),
    "rogers-ramanujan-1": lambda args, w: sum_rogers_ramanujan(0, w),
    "rogers-ramanujan-2": lambda args, w: sum_rogers_ramanujan(1, w),
    "double-mod7": lambda args, w: sum_double_mod7(w),
    "alternating-mod4": lambda args, w: sum_alternating_mod4(w),
    "signed-distinct-mod2": lambda args, w: sum_signed_distinct_mod2(w),
    "goellnitz-GG1": lambda args, w: sum_goellnitz("GG1", w),
    "goellnitz-LG1": lambda args, w: sum_goellnitz("LG1", w),
    "goellnitz-GG2": lambda args, w: sum_goellnitz("GG2", w),
    "goellnitz-LG2": lambda args, w: sum_goellnitz("LG2", w),
    "mod12": lambda args, w: sum_mod12(_require_profile(args), w),
    "schmidt-distinct-odd": lambda args, w: sum_schmidt_distinct_odd(w),
    "schmidt-distinct-even": lambda args, w: sum_schmidt_distinct_even(w),
}


def _require_profile(args) -> tuple:
    if args.profile is None:
        raise ValueError("this sum needs --profile (e.g. --profile '1,-1,1')")
    return args.profile


def _cmd_series(args) -> int:
    series = _SUMS[args.sum](args, _window(args))
    _print_series(series, args, "series %s" % args.sum)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    window = _window(args)
    if args.objects:
        objs = enumerate_objects(
            args.kind,
            args.profile,
            args.weights,
            max_weighted_size=args.N - 1,
            max_part=args.D,
        )
        if args.format == "json":
            _emit(
                {
                    "schema": "cylq-cli/1",
                    "command": "enumerate-objects",
                    "kind": args.kind,
                    "profile": list(args.profile),
                    "objects": [
                        [list(diag) for diag in obj.diagonals] for obj in objs
                    ],
                },
                args,
            )
        else:
            print("%d objects" % len(objs))
            for obj in objs:
                print(" ; ".join(",".join(str(x) for x in d) for d in obj.diagonals))
        return EXIT_OK
    series = genfun_by_enumeration(
        args.kind, args.profile, args.weights, window=window
    )
    if args.collapse_z:
        series = series.collapse_z()
    _print_series(series, args, "enumerate %s %s" % (args.kind, args.profile))
    return EXIT_OK


def _cmd_product(args) -> int:
    if args.kind == "cylindric":
        spec = cp_product_spec(args.profile, args.weights, args.orientation)
    elif args.kind == "skew-shifted":
        spec = dspp_product_spec(args.profile, args.weights)
    else:  # symmetric: profile is the half profile, weights are implied
        spec = scp_product_spec(args.profile)
    if args.spec_only:
        if args.format == "json":
            _emit(
                {
                    "schema": "cylq-cli/1",
                    "command": "product-spec",
                    "conventions": dict(CONVENTIONS),
                    "product": spec.to_json(),
                },
                args,
            )
        else:
            for label, pairs in (("num", spec.num), ("den", spec.den)):
                print(
                    "%s: %s"
                    % (label, " ".join("(q^%s;q^%s)" % (e, m) for e, m in pairs))
                    if pairs
                    else "%s: 1" % label
                )
        return EXIT_OK
    series = spec.expand(_window(args))
    if args.format == "json":
        _emit(
            {
                "schema": "cylq-cli/1",
                "command": "product",
                "conventions": dict(CONVENTIONS),
                "product": spec.to_json(),
                "series": series_to_json(series),
            },
            args,
        )
    else:
        _print_series(series, args, "product %s %s" % (args.kind, args.profile))
    return EXIT_OK


def _cmd_system(args) -> int:
    system = build_system(args.kind, args.profile, args.weights, args.normalized)
    if args.format == "json":
        _emit(
            {
                "schema": "cylq-cli/1",
                "command": "system",
                "system": system_to_json(system),
            },
            args,
        )
    else:
        print(system.pretty())
    return EXIT_OK


def _cmd_solve(args) -> int:
    system = build_system(args.kind, args.profile, args.weights, args.normalized)
    window = _window(args, default_d=args.N)
    solved = solve_fixed_point(system, window)
    chosen = sorted(solved) if args.select is None else [args.select]
    if args.select is not None and args.select not in solved:
        raise ValueError(
            "profile %s is not part of the solved closure %s"
            % (args.select, sorted(solved))
        )
    if args.format == "json":
        _emit(
            {
                "schema": "cylq-cli/1",
                "command": "solve",
                "symbol": system.symbol(),
                "solutions": {
                    ",".join(str(x) for x in p): series_to_json(solved[p])
                    for p in chosen
                },
            },
            args,
        )
        return EXIT_OK
    for p in chosen:
        _print_series(
            solved[p], args, "%s[%s]" % (system.symbol(), ",".join(map(str, p)))
        )
    return EXIT_OK


def _override_window(case, n: Optional[int], d: Optional[int]) -> Optional[Window]:
    if n is None and d is None:
        return None
    base = case.window
    return Window(
        n if n is not None else base.q_truncation,
        d if d is not None else base.z_truncation,
    )


def _cmd_verify(args) -> int:
    labels = sorted(set(args.case)) if args.case else list(registry())
    cases = [get_case(label) for label in labels]  # KeyError -> usage error
    windows = [_override_window(c, args.N, args.D) for c in cases]

    def run(pair):
        case, window = pair
        return verify(case, window)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, zip(cases, windows)))
    else:
        reports = [run(pair) for pair in zip(cases, windows)]

    total = sum(len(r["comparisons"]) for r in reports)
    equal = sum(1 for r in reports for c in r["comparisons"] if c["equal"])
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": "cylq-cli/1",
                    "command": "verify",
                    "reports": reports,
                    "comparisons_equal": equal,
                    "comparisons_total": total,
                },
                sort_keys=True,
                indent=2,
            )
        )
    else:
        for report in reports:
            print(report_text(report))
            print()
        bounds = {r["window"]["q_truncation"] for r in reports}
        tail = " through q^%d" % (bounds.pop() - 1) if len(bounds) == 1 else ""
        print(
            "%d/%d comparisons equal%s across %d case%s"
            % (equal, total, tail, len(reports), "" if len(reports) == 1 else "s")
        )
    return EXIT_OK if equal == total else EXIT_UNEQUAL


def _cmd_fit(args) -> int:
    if args.problem is not None:
        raw = (
            sys.stdin.read()
            if args.problem == "-"
            else open(args.problem, "r", encoding="utf-8").read()
        )
        problem = FitProblem.from_json(json.loads(raw))
    else:
        if args.kind is None or args.profile is None or not args.target:
            raise ValueError(
                "fit needs either --problem JSON or --kind/--profile/--target"
            )
        problem = FitProblem.make(
            args.kind,
            args.profile,
            tuple(args.target),
            nonnegative=not args.allow_negative,
            integral=not args.rational,
        )
    report = fit_report(problem)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        if not report["feasible_shape"]:
            print("infeasible by shape: %s" % report["reason"])
        elif not report["solutions"]:
            print("no weight vectors found within the constraints")
        else:
            for sol in report["solutions"]:
                print(
                    "weights %s (forward check: %s)"
                    % (
                        ",".join(str(w) for w in sol["weights"]),
                        "ok" if sol["forward_check"] else "FAILED",
                    )
                )
    return EXIT_OK if report["feasible_shape"] else EXIT_USAGE


def _cmd_balance(args) -> int:
    census = balance_census(args.max_width)
    balanced = sum(b for b, _ in census.values())
    total = sum(t for _, t in census.values())
    if args.format == "json":
        _emit(
            {
                "schema": "cylq-cli/1",
                "command": "balance",
                "census": {str(k): [b, t] for k, (b, t) in sorted(census.items())},
                "balanced": balanced,
                "total": total,
            },
            args,
        )
    else:
        for width, (b, t) in sorted(census.items()):
            print("width %d: %d/%d balanced" % (width, b, t))
        if balanced == total:
            print("all %d profiles balanced" % total)
        else:
            print("%d/%d profiles balanced" % (balanced, total))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub, *, window: bool = True, profile: bool = False) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    if window:
        sub.add_argument("--N", type=_positive_int, required=True,
                         help="q-window: coefficients below q^N are exact")
        sub.add_argument("--D", type=_positive_int, default=None,
                         help="z-window bound (needed for bivariate output)")
    if profile:
        sub.add_argument("--profile", type=_parse_profile, required=True)
        sub.add_argument("--weights", type=_parse_weights, default=None,
                         help="comma-separated weights (default: standard)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylq",
        description="Exact verification kit for weighted chain counts and "
        "their q-series identities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("series", help="evaluate a named closed-form sum")
    p.add_argument("--sum", choices=sorted(_SUMS), required=True)
    p.add_argument("--profile", type=_parse_profile, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_series)

    p = commands.add_parser("enumerate", help="enumerate lattice objects")
    p.add_argument("--kind", choices=KINDS, required=True)
    _add_common(p, profile=True)
    p.add_argument("--collapse-z", action="store_true",
                   help="set z = 1 in the generating function")
    p.add_argument("--objects", action="store_true",
                   help="list the objects instead of the generating function")
    p.set_defaults(func=_cmd_enumerate)

    p = commands.add_parser("product", help="expand a chain's product side")
    p.add_argument("--kind", choices=("cylindric", "skew-shifted", "symmetric"),
                   required=True)
    p.add_argument("--orientation", choices=ORIENTATIONS, default="direct")
    p.add_argument("--spec-only", action="store_true",
                   help="print the factor list without expanding")
    _add_common(p, profile=True)
    p.set_defaults(func=_cmd_product)

    p = commands.add_parser("system", help="build the coupled system")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--normalized", default="auto",
                   type=lambda s: {"auto": "auto", "true": True, "false": False}[s])
    _add_common(p, window=False, profile=True)
    p.set_defaults(func=_cmd_system)

    p = commands.add_parser("solve", help="solve the coupled system")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--normalized", default="auto",
                   type=lambda s: {"auto": "auto", "true": True, "false": False}[s])
    p.add_argument("--select", type=_parse_profile, default=None,
                   help="print only this profile's solution")
    _add_common(p, profile=True)
    p.set_defaults(func=_cmd_solve)

    p = commands.add_parser("verify", help="run registered identity cases")
    p.add_argument("--case", dest="case", action="append", default=[],
                   metavar="LABEL", help="case label (repeatable; default: all)")
    p.add_argument("--list", action="store_true", help="list case labels and exit")
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--N", type=_positive_int, default=None)
    p.add_argument("--D", type=_positive_int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = commands.add_parser("fit", help="fit weights to a target product")
    p.add_argument("--problem", default=None,
                   help="path to a cylq-fit/1 JSON file, or - for stdin")
    p.add_argument("--kind", choices=("cylindric", "skew-shifted"), default=None)
    p.add_argument("--profile", type=_parse_profile, default=None)
    p.add_argument("--target", type=_parse_target, action="append", default=[],
                   metavar="EXPS@MOD", help="e.g. '1,4,5@5' (repeat for open chains)")
    p.add_argument("--allow-negative", action="store_true")
    p.add_argument("--rational", action="store_true",
                   help="allow non-integer weights")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_fit)

    p = commands.add_parser("balance", help="pair-exponent symmetry census")
    p.add_argument("--max-width", type=_positive_int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_balance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        for label in registry():
            print(label)
        return EXIT_OK
    try:
        return args.func(args)
    except KeyError as err:
        print("error: %s" % (err.args[0] if err.args else err), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
