"""Discrete logarithms in a subgroup of prime order r."""

from __future__ import annotations

import math
from typing import Optional

from .counters import Counters
from .errors import InvalidInput, NotInSubgroup
from .field import FieldCtx, FieldElement


def subgroup_dlog(
    ctx: FieldCtx,
    a: FieldElement,
    d: FieldElement,
    r: int,
    counters: Optional[Counters] = None,
    strategy: str = "brute",
) -> int:
    """Return the ``e`` in ``[0, r)`` with ``a**e == d``, where ``a`` has order r.

    The default brute-force walk costs at most r - 1 multiplications and is
    the cost model the benchmarks measure. ``strategy="bsgs"`` switches to
    baby-step giant-step and exists for comparison only.
    """
    if a.is_one():
        raise InvalidInput("generator must not be 1")
    if strategy == "brute":
        return _brute(ctx, a, d, r, counters)
    if strategy == "bsgs":
        return _bsgs(ctx, a, d, r, counters)
    raise ValueError(f"unknown strategy {strategy!r}")


def _brute(ctx, a, d, r, counters):
    acc = ctx.one()
    if acc == d:
        return 0
    for e in range(1, r):
        acc = ctx.mul(acc, a)
        if counters is not None:
            counters.dlog_multiplications += 1
        if acc == d:
            return e
    raise NotInSubgroup(f"{d} is not a power of {a} of order {r}")


def _bsgs(ctx, a, d, r, counters):
    n = math.isqrt(r - 1) + 1
    baby = {}
    acc = ctx.one()
    for j in range(n):
        baby.setdefault(acc, j)
        acc = ctx.mul(acc, a)
        if counters is not None:
            counters.dlog_multiplications += 1
    # acc == a**n now
    giant = ctx.inv(acc)
    gamma = d
    for i in range(n):
        j = baby.get(gamma)
        if j is not None:
            e = i * n + j
            if e < r:
                return e
        gamma = ctx.mul(gamma, giant)
        if counters is not None:
            counters.dlog_multiplications += 1
    raise NotInSubgroup(f"{d} is not a power of {a} of order {r}")
