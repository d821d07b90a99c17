"""``hexatile`` command line.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 domain error, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath

from . import asymptotics as asy
from . import formulas as fm
from .exactnum import DomainError
from .oracle import CapacityError, OracleConfig, count_pp_restricted, count_tilings, enumerate_pp
from .region import (
    build_h_double_prime,
    build_h_prime,
    build_hexagon,
    build_intruded,
    build_R,
    build_Rbar,
    split_factorization,
)
from .render import to_svg
from .verify import SUITES, Limits, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _grid(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("grid values must be positive integers")
    return values


def _ratio(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _oracle_config(args) -> OracleConfig:
    cfg = OracleConfig.from_env()
    if getattr(args, "max_width", None) is not None:
        cfg = OracleConfig(max_width=args.max_width, max_pp_cells=cfg.max_pp_cells, max_pp_height=cfg.max_pp_height)
    return cfg


# -- subcommands ---------------------------------------------------------


def cmd_count(args) -> int:
    m, b, c, d = args.left, args.b, args.c, args.d
    tc = fm.intrusion_count(m, b, c, d)
    ratio = fm.intrusion_ratio(fm.Parity.of(m), m // 2, b, c, d)
    out = {
        "region": tc.region.as_dict(),
        "count": str(int(tc)),
        "ratio": _ratio(ratio),
        "source": "formula",
    }
    if args.oracle:
        oc = count_tilings(build_intruded(m, b, c, d), _oracle_config(args))
        out["oracle"] = str(oc)
        out["agrees"] = oc == int(tc)
    _emit(out)
    return EXIT_OK


def cmd_pp(args) -> int:
    if args.d is None:
        n = enumerate_pp(args.b, args.c, args.h)
    else:
        n = count_pp_restricted(args.b, args.c, args.h, args.d)
    out = {"b": args.b, "c": args.c, "h": args.h, "d": args.d, "count": str(n), "source": "oracle:backtracking"}
    if args.d is not None and args.b <= args.c:
        out["formula"] = str(int(fm.intrusion_count(args.h, args.b, args.c, args.d)))
        out["agrees"] = out["formula"] == out["count"]
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    limits = Limits(
        max_m=args.max_m, max_a=args.max_a, max_c=args.max_c, max_n=args.max_n, max_N=args.max_N,
        oracle=_oracle_config(args),
    )
    checks = run_suite(args.suite, limits)
    passed = sum(c.passed for c in checks)
    if args.json:
        _emit({
            "suite": args.suite,
            "passed": passed,
            "failed": len(checks) - passed,
            "checks": [{"name": c.name, "params": list(c.params), "passed": c.passed, "detail": c.detail} for c in checks],
        })
    else:
        for c in checks:
            print(c.line())
        print(f"{args.suite}: {passed}/{len(checks)} checks passed")
    return EXIT_OK if passed == len(checks) else EXIT_FAILED


def cmd_asym(args) -> int:
    parity = fm.Parity.parse(args.parity)
    cls = asy.classify_limit(parity, args.a, args.b, args.c, args.d)
    rows = []
    for N in args.grid:
        exact = asy.exact_ratio(parity, args.a, args.b, args.c, args.d, N)
        est = asy.asym_ratio(parity, args.a, args.b, args.c, args.d, N)
        q = asy.convergence_quotient(parity, args.a, args.b, args.c, args.d, N)
        with mpmath.workdps(asy.WORKING_DPS):
            exact_dec = mpmath.mpf(exact.numerator) / exact.denominator
        rows.append({
            "N": N,
            "exact": mpmath.nstr(exact_dec, 20),
            "asymptotic": mpmath.nstr(est.value, 20),
            "quotient": mpmath.nstr(q, 20),
        })
    classification = {"outcome": cls.outcome.value, "criterion": _ratio(cls.criterion) if cls.criterion is not None else None}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["N", "exact", "asymptotic", "quotient"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
        sys.stdout.write(f"# limit: {classification['outcome']}\n")
    else:
        _emit({
            "parity": parity.value,
            "params": {"a": args.a, "b": args.b, "c": args.c, "d": args.d},
            "rows": rows,
            "classification": classification,
        })
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"family {args.family!r} needs --{', --'.join(missing)}")
    return [getattr(args, n) for n in names]


def _build_for_render(args):
    fam = args.family
    if fam == "hexagon":
        return build_hexagon(*_need(args, "left", "b", "c"))
    if fam == "intruded":
        return build_intruded(*_need(args, "left", "b", "c", "d"))
    if fam == "hprime":
        return build_h_prime(*_need(args, "a", "b", "c", "k"))
    if fam == "hdoubleprime":
        return build_h_double_prime(*_need(args, "a", "b", "c", "k"))
    if fam == "r":
        return build_R(*_need(args, "m", "n", "x"))
    if fam == "rbar":
        return build_Rbar(*_need(args, "m", "n", "x"))
    left, c, d = _need(args, "left", "c", "d")
    plus, minus = split_factorization(left, c, d)
    return plus if fam == "plus" else minus


def cmd_render(args) -> int:
    region = _build_for_render(args)
    text = region.to_json(indent=2) + "\n" if args.format == "json" else to_svg(region)
    if args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"hexatile: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# -- parser --------------------------------------------------------------

RENDER_FAMILIES = ("hexagon", "intruded", "hprime", "hdoubleprime", "r", "rbar", "plus", "minus")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hexatile", description="Count, check and draw tilings of hexagons with a cut along the left bisector.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="tiling count of H_{m,b,c;d} from the product formula")
    c.add_argument("--left", type=_nonneg, required=True, help="left side m")
    c.add_argument("--b", type=_nonneg, required=True)
    c.add_argument("--c", type=_nonneg, required=True)
    c.add_argument("--d", type=_nonneg, required=True, help="number of removed lozenges or bowties")
    c.add_argument("--oracle", action="store_true", help="also count with the transfer-matrix oracle")
    c.add_argument("--max-width", type=_nonneg, default=None)
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    for flag in ("--max-m", "--max-a", "--max-c", "--max-n"):
        v.add_argument(flag, type=_nonneg, default=None)
    v.add_argument("--max-N", dest="max_N", type=_nonneg, default=None)
    v.add_argument("--max-width", type=_nonneg, default=None)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("asym", help="exact versus asymptotic ratio along a scaling grid")
    a.add_argument("--parity", choices=["even", "odd"], type=str.lower, required=True)
    for flag in ("--a", "--b", "--c", "--d"):
        a.add_argument(flag, type=_nonneg, required=True)
    a.add_argument("--grid", type=_grid, default=[4, 8, 16])
    a.add_argument("--format", choices=["json", "csv"], default="json")
    a.set_defaults(func=cmd_asym)

    q = sub.add_parser("pp", help="count plane partitions in a box by backtracking")
    q.add_argument("--b", type=_nonneg, required=True)
    q.add_argument("--c", type=_nonneg, required=True)
    q.add_argument("--h", type=_nonneg, required=True)
    q.add_argument("--d", type=_nonneg, default=None, help="pin d anti-diagonal entries to h/2")
    q.set_defaults(func=cmd_pp)

    r = sub.add_parser("render", help="draw a region as SVG (or dump it as JSON)")
    r.add_argument("--family", choices=RENDER_FAMILIES, required=True)
    for flag in ("--left", "--a", "--b", "--c", "--d", "--k", "--m", "--n"):
        r.add_argument(flag, type=_nonneg, default=None)
    r.add_argument("--x", type=int, default=None)
    r.add_argument("--format", choices=["svg", "json"], default="svg")
    r.add_argument("--out", required=True, help="output path, or - for stdout")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"hexatile: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapacityError as exc:
        print(f"hexatile: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
