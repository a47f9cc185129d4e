"""Exhaustive ground truth for small fields.

Powers are formed by plain repeated multiplication (binary powering only
for exponents above ``NAIVE_LIMIT``) without going through
:meth:`FieldCtx.pow`, so the oracle shares no exponentiation code with the
algorithms it checks.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import FieldTooLarge
from .field import FieldCtx, FieldElement

DEFAULT_BOUND = 10**6
NAIVE_LIMIT = 64


def _check_bound(ctx: FieldCtx, bound: int) -> None:
    if ctx.q > bound:
        raise FieldTooLarge(f"q = {ctx.q} exceeds oracle bound {bound}")


def _naive_pow(ctx: FieldCtx, x: FieldElement, r: int) -> FieldElement:
    if ctx.m == 1:
        if r > NAIVE_LIMIT:
            return FieldElement(ctx, (pow(x.coeffs[0], r, ctx.p),))
        v = 1
        for _ in range(r):
            v = v * x.coeffs[0] % ctx.p
        return FieldElement(ctx, (v,))
    acc = ctx.one().coeffs
    if r > NAIVE_LIMIT:
        # right-to-left binary, deliberately unlike FieldCtx.pow
        base = x.coeffs
        while r:
            if r & 1:
                acc = ctx._mul_coeffs(acc, base)
            base = ctx._mul_coeffs(base, base)
            r >>= 1
        return FieldElement(ctx, acc)
    for _ in range(r):
        acc = ctx._mul_coeffs(acc, x.coeffs)
    return FieldElement(ctx, acc)


def brute_root(
    ctx: FieldCtx, delta: FieldElement, r: int, bound: int = DEFAULT_BOUND
) -> set:
    """``{x in F_q : x**r == delta}`` by enumerating the whole field."""
    _check_bound(ctx, bound)
    ctx._check(delta)
    return {x for x in ctx.elements() if _naive_pow(ctx, x, r) == delta}


def residues(ctx: FieldCtx, r: int, bound: int = DEFAULT_BOUND) -> set:
    """``{x**r : x in F_q^*}``."""
    _check_bound(ctx, bound)
    return {_naive_pow(ctx, x, r) for x in ctx.elements() if x}


def root_table(ctx: FieldCtx, r: int, bound: int = DEFAULT_BOUND) -> dict:
    """Map each r-th power to the set of its r-th roots, in a single pass.

    Equivalent to calling :func:`brute_root` for every delta, but O(q)
    instead of O(q**2) when a test sweeps the whole field.
    """
    _check_bound(ctx, bound)
    table = defaultdict(set)
    for x in ctx.elements():
        table[_naive_pow(ctx, x, r)].add(x)
    return dict(table)
