"""Command-line front end.

Exit codes: 0 success or verified, 1 verification mismatch, 2 invalid
parameters, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from typing import Sequence

from . import bounds, construct, counting, oracle
from .errors import CapacityError, InvalidParameterError, MinWeightError
from .ff import field_of_order, make_field
from .poly import Polynomial

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _index_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return sorted({int(t) for t in text.split(",")})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated degrees, got {text!r}")


def _emit(obj: dict, fmt: str, table: str, csv_text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    elif fmt == "csv":
        if csv_text is None:
            raise InvalidParameterError("csv output is only available for distributions")
        sys.stdout.write(csv_text)
    else:
        print(table)


def _rows(pairs) -> str:
    width = max((len(str(a)) for a, _ in pairs), default=0)
    return "\n".join(f"{str(a).ljust(width)}  {b}" for a, b in pairs)


def _field(args):
    if getattr(args, "q", None) is not None:
        return field_of_order(args.q)
    if getattr(args, "p", None) is not None:
        return make_field(args.p)
    return make_field(None)


# -- subcommands


def cmd_bound(args) -> int:
    F = _field(args)
    if args.poly is not None:
        f = Polynomial.parse(F, args.poly)
        report = bounds.check_bound(f, F.parse(args.root))
        out = report.to_json()
        table = _rows(
            [("poly", out["poly"]), ("field", str(F)), ("k", out["k"]),
             ("bound", out["bound"]), ("weight", out["weight"]),
             ("holds", out["holds"]), ("tight", out["tight"])]
        )
        _emit(out, args.format, table)
        return EXIT_OK if report.holds else EXIT_MISMATCH
    if args.k is None:
        raise InvalidParameterError("bound needs --k (or --poly with --root)")
    if F.is_finite:
        exp = bounds.padic_digits(args.k, F.p)
        out = {"k": args.k, "p": F.p, "digits": list(exp.digits), "bound": str(exp.bound)}
        table = _rows([("k", args.k), ("p", F.p), ("digits", list(exp.digits)), ("bound", exp.bound)])
    else:
        b = bounds.weight_lower_bound(args.k, F)
        out = {"k": args.k, "p": None, "digits": None, "bound": str(b)}
        table = _rows([("k", args.k), ("characteristic", 0), ("bound", b)])
    _emit(out, args.format, table)
    return EXIT_OK


def cmd_construct(args) -> int:
    F = _field(args)
    if args.boundary:
        if not F.is_finite or F.m != 1:
            raise InvalidParameterError("--boundary needs a prime field (--p or prime --q)")
        ex = construct.example_n_equals_p(F.p, args.k)
        out = ex.to_json()
        table = f"{ex.description()} (count {ex.count})\n" + "\n".join(str(f) for f in ex.polynomials)
        _emit(out, args.format, table)
        return EXIT_OK
    if args.n is None:
        raise InvalidParameterError("construct needs --n")
    if args.zeros is None:
        polys = construct.all_extremal(args.n, args.k, F)
        items = [
            {"zeros": sorted(I), "poly": str(f), "weight": f.weight}
            for I, f in sorted(polys.items(), key=lambda kv: sorted(kv[0]))
        ]
        out = {"n": args.n, "k": args.k, "field": F.to_json(),
               "count": str(construct.count_extremal_formula(args.n, args.k)),
               "polynomials": items}
        table = _rows([(",".join(map(str, it["zeros"])) or "-", it["poly"]) for it in items])
        _emit(out, args.format, table)
        return EXIT_OK
    spec = construct.SupportSpec.from_zeros(args.n, args.zeros)
    f = construct.construct_extremal(args.n, args.k, spec, F)
    out = {**spec.to_json(), "k": args.k, "poly": str(f), "weight": f.weight,
           "coeffs": f.to_json()["coeffs"], "field": F.to_json()}
    _emit(out, args.format, str(f))
    return EXIT_OK


def cmd_count(args) -> int:
    if args.w is not None:
        counting.check_regime(args.q, args.n, args.k)
        mw = counting.m_w(args.q, args.k, args.w)
        total = counting.binomial_exact(args.n, args.w - 1) * mw
        out = {"q": args.q, "n": args.n, "k": args.k, "w": args.w, "m_w": str(mw), "count": str(total)}
        _emit(out, args.format, _rows([("M_w", mw), ("count", total)]))
        return EXIT_OK
    dist = counting.weight_distribution(args.q, args.n, args.k)
    _emit(dist.to_json(), args.format, _rows([("w", "count")] + sorted(dist.counts.items())), dist.to_csv())
    return EXIT_OK


def _sweep_config(args) -> oracle.SweepConfig:
    return oracle.SweepConfig(args.q, args.n, args.k, args.budget, args.workers)


def cmd_enumerate(args) -> int:
    cfg = _sweep_config(args)
    if args.support is not None:
        c = oracle.empirical_fixed_support_count(cfg, args.support)
        out = {"config": cfg.to_json(), "support": args.support, "count": str(c)}
        _emit(out, args.format, str(c))
        return EXIT_OK
    report = oracle.sweep_report(cfg, timing=args.timing)
    dist = oracle.empirical_weight_distribution(cfg) if args.format == "csv" else None
    table = _rows(
        [("w", "count  witness")]
        + [(w, f"{c}  {report['witnesses'][w]}") for w, c in report["distribution"]["counts"].items()]
    )
    _emit(report, args.format, table, dist.to_csv() if dist else None)
    return EXIT_OK


def _default_checks(workers: int):
    for cfg in oracle.default_grid():
        yield "distribution", dataclasses.replace(cfg, partitions=workers)
    for p, d in ((2, 10), (3, 6)):
        yield "bound", (p, d)
    for p in (3, 5, 7):
        for k in range(1, p):
            yield "boundary", (p, k)


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.q is not None or args.n is not None or args.k is not None:
        if None in (args.q, args.n, args.k):
            raise InvalidParameterError("verify needs all of --q, --n, --k (or none for the default grid)")
        checks = [("distribution", _sweep_config(args))]
    else:
        checks = list(_default_checks(args.workers))
    results, all_ok = [], True
    for kind, item in checks:
        if kind == "distribution":
            v = oracle.verify(item)
            ok, msg, payload = v.ok, v.message(), v.to_json()
        elif kind == "bound":
            r = oracle.bound_sweep(*item, budget=args.budget, workers=args.workers)
            ok = r.ok
            msg = (f"bound sweep p={item[0]} max_degree={item[1]}: "
                   f"{len(r.violations)} violations, minima {'match' if ok else 'DIFFER'}")
            payload = r.to_json()
        else:
            p, k = item
            b = oracle.boundary_sweep(p, k, args.budget, args.workers)
            expected = counting.binomial_exact(p - 1, k) + 1
            ok = b.low_weight == expected and b.low_weight_constant_nonzero == 1
            msg = f"n=p boundary p={p} k={k}: {b.low_weight} of weight <= {k + 1} (expected {expected})"
            payload = {"p": p, "k": k, "count": str(b.low_weight), "expected": str(expected),
                       "constant_nonzero": str(b.low_weight_constant_nonzero), "ok": ok}
        all_ok &= ok
        results.append((kind, msg, payload))
    if args.format == "json":
        out = {"ok": all_ok, "checks": [{"kind": k, "message": m, "report": p} for k, m, p in results]}
        if args.timing:
            out["wall_time_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        print(json.dumps(out, sort_keys=True))
    else:
        for _, msg, _ in results:
            print(msg)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minweight", description="Minimum-weight polynomials with a repeated nonzero root.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = dict(choices=("table", "json", "csv"), default="table")

    b = sub.add_parser("bound", help="weight lower bound for multiplicity k")
    b.add_argument("--k", type=int)
    b.add_argument("--p", type=int, help="characteristic; omit for characteristic 0")
    b.add_argument("--q", type=int, help="field order (its characteristic is used)")
    b.add_argument("--poly", help="check a concrete polynomial, e.g. 'x^5 + x^4 + x + 1'")
    b.add_argument("--root", default="1", help="nonzero root for --poly (default 1)")
    b.add_argument("--format", **formats)
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("construct", help="weight-(k+1) multiple of (x+1)^k with given zero coefficients")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--zeros", type=_index_list, help="forced-zero degrees I, e.g. 0,2; omit to list all")
    c.add_argument("--p", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--boundary", action="store_true", help="the n = p case over F_p")
    c.add_argument("--format", **formats)
    c.set_defaults(func=cmd_construct)

    for name, func, help_ in (
        ("count", cmd_count, "closed-form weight distribution"),
        ("enumerate", cmd_enumerate, "exhaustive weight distribution"),
        ("verify", cmd_verify, "formula against enumeration; default grid when q, n, k are omitted"),
    ):
        s = sub.add_parser(name, help=help_)
        required = name == "count"
        s.add_argument("--q", type=int, required=required)
        s.add_argument("--n", type=int, required=required)
        s.add_argument("--k", type=int, required=required)
        if name == "count":
            s.add_argument("--w", type=int, help="single weight: print M_w and C(n, w-1) M_w")
        else:
            s.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
            s.add_argument("--workers", type=int, default=1)
            s.add_argument("--timing", action="store_true", help="add wall_time_ms to JSON")
        if name == "enumerate":
            s.add_argument("--support", type=_index_list, help="count one fixed support J only")
        s.add_argument("--format", **formats)
        s.set_defaults(func=func)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "enumerate" and None in (args.q, args.n, args.k):
        print("minweight: enumerate needs --q, --n and --k", file=sys.stderr)
        return EXIT_INVALID
    if getattr(args, "workers", 1) < 1:
        print("minweight: --workers must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except CapacityError as e:
        print(f"minweight: capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InvalidParameterError, ZeroDivisionError, ValueError) as e:
        print(f"minweight: {e}", file=sys.stderr)
        return EXIT_INVALID
    except MinWeightError as e:
        print(f"minweight: {e}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
