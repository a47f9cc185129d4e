"""Command-line front end.

    ammroot root --p 19 --r 3 --delta 8 --all
    ammroot legendre --a 3 --p 7
    ammroot bench --p 101 --r-list 5 --trials 20 --seed 1

Exit codes: 0 success, 1 delta is not a residue, 2 invalid input,
3 internal verification failure.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time

from . import oracle
from .amm import coprime_root, extract, rth_root
from .errors import (
    AMMError,
    InternalVerificationFailed,
    InvalidInput,
    NotAResidue,
)
from .field import (
    FieldCtx,
    find_irreducible,
    format_coeffs,
    format_element,
    make_field,
    parse_coeffs,
    parse_element,
)
from .ntcore import factor_out, is_probable_prime, legendre

EXIT_OK = 0
EXIT_NOT_RESIDUE = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise InvalidInput(f"p = {p} is not an odd prime")


def _field_from_args(args, rng: random.Random, echo) -> FieldCtx:
    _require_odd_prime(args.p)
    if args.modulus is not None:
        coeffs = parse_coeffs(args.modulus)
        if args.m is not None and len(coeffs) != args.m + 1:
            raise InvalidInput(f"--modulus has degree {len(coeffs) - 1}, --m is {args.m}")
        return make_field(args.p, coeffs)
    m = 1 if args.m is None else args.m
    if m < 1:
        raise InvalidInput(f"--m must be >= 1, got {m}")
    if m == 1:
        return make_field(args.p)
    coeffs = find_irreducible(args.p, m, rng)
    echo(f"modulus={format_coeffs(coeffs)}")
    return make_field(args.p, coeffs)


def cmd_root(args, out) -> int:
    rng = random.Random(args.seed)
    lines = []
    ctx = _field_from_args(args, rng, lines.append)
    delta = parse_element(ctx, args.delta)
    r = args.r
    report = extract(ctx, delta, r, rng, want_all=args.all)
    roots = sorted(report.all_roots) if args.all else [report.root]
    for x in roots:
        if ctx.pow(x, r) != delta:
            raise InternalVerificationFailed(f"{x}^{r} != {delta}")
    lines.extend(format_element(x) for x in roots)
    if args.verify_oracle:
        truth = oracle.brute_root(ctx, delta, r, bound=args.oracle_bound)
        if not set(roots) <= truth or (args.all and set(roots) != truth):
            raise InternalVerificationFailed("oracle disagrees with the computed roots")
        lines.append("oracle=ok")
    if args.counters:
        lines.append(report.counters.format())
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_legendre(args, out) -> int:
    _require_odd_prime(args.p)
    out.write(f"{legendre(args.a, args.p)}\n")
    return EXIT_OK


def _parse_r_list(text: str) -> list:
    try:
        rs = [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse --r-list {text!r}") from None
    for r in rs:
        if not is_probable_prime(r):
            raise InvalidInput(f"--r-list entry {r} is not prime")
    return rs


def cmd_bench(args, out) -> int:
    rng = random.Random(args.seed)
    rs = _parse_r_list(args.r_list)
    if args.trials < 1:
        raise InvalidInput("--trials must be >= 1")
    ctx = _field_from_args(args, rng, lambda line: print(line, file=sys.stderr))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "q", "t", "trials", "loop", "dlogmul", "fieldmul", "nanos"])
    for r in rs:
        t, _ = factor_out(ctx.q_minus_1, r)
        for _ in range(args.trials):
            delta = ctx.pow(ctx.random_nonzero(rng), r)
            start = time.perf_counter_ns()
            if args.dispatch:
                report = extract(ctx, delta, r, rng)
            elif t:
                report = rth_root(ctx, delta, r, rng)
            else:
                report = coprime_root(ctx, delta, r)
            nanos = 0 if args.no_timing else time.perf_counter_ns() - start
            c = report.counters
            writer.writerow([
                r, ctx.q, t, c.nonresidue_trials, c.loop_iterations,
                c.dlog_multiplications, c.field_multiplications, nanos,
            ])
    return EXIT_OK


def _add_field_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("--m", type=int, default=None, help="extension degree (default 1)")
    sp.add_argument("--modulus", default=None,
                    help="monic modulus coefficients, constant term first, e.g. 1,0,1")
    sp.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ammroot", description="Root extraction over finite fields."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("root", help="solve x^r = delta")
    _add_field_flags(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--delta", required=True, help="element, e.g. 4 or 2,1")
    sp.add_argument("--all", action="store_true", help="print every root, sorted")
    sp.add_argument("--verify-oracle", action="store_true",
                    help="cross-check against exhaustive enumeration")
    sp.add_argument("--oracle-bound", type=int, default=oracle.DEFAULT_BOUND)
    sp.add_argument("--counters", action="store_true")
    sp.set_defaults(func=cmd_root)

    sp = sub.add_parser("legendre", help="Legendre symbol (a|p)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_legendre)

    sp = sub.add_parser("bench", help="emit per-trial operation counts as CSV")
    _add_field_flags(sp)
    sp.add_argument("--r-list", required=True, help="comma separated primes")
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--no-timing", action="store_true",
                    help="write 0 in the nanos column for reproducible output")
    sp.add_argument("--dispatch", action="store_true",
                    help="use the specialized r = 2, 3 paths instead of the general one")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NotAResidue:
        print("not a residue", file=sys.stderr)
        return EXIT_NOT_RESIDUE
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AMMError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
