"""Adleman-Manders-Miller root extraction over F_p and F_{p^m}.

Four algorithms share one shape: find an r-th nonresidue rho, split
q - 1 = r**t * s with r not dividing s, then walk t - 1 correction steps
that each kill one r-adic digit of the order of ``b`` by multiplying in a
suitable power of rho**s. They differ in how the correction exponent is
found:

* ``sqrt_prime`` / ``sqrt_ext``: the digit is 0 or 1, read off ``d == 1``.
* ``cbrt``: the digit is read off by comparing ``d`` with rho**(s*3**(t-1)).
* ``rth_root``: the digit needs a discrete log in the order-r subgroup.

Every algorithm checks its own answer before returning it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .counters import Counters, counting, uncounted
from .dlog import subgroup_dlog
from .errors import (
    InternalVerificationFailed,
    NotAResidue,
    NotCoprime,
    RDoesNotDivide,
    RNotPrime,
    UnsupportedExponent,
)
from .field import FieldCtx, FieldElement, make_prime_field
from .ntcore import factor_out, is_probable_prime, least_alpha, legendre, mod_inverse
from .residue import sample_nonresidue

__all__ = [
    "Counters",
    "Params",
    "RootReport",
    "sqrt_prime",
    "sqrt_ext",
    "cbrt",
    "rth_root",
    "coprime_root",
    "extract",
]


class Params(NamedTuple):
    """Decomposition q - 1 = r**t * s and the exponent applied to delta at the end."""

    t: int
    s: int
    alpha: int


@dataclass
class RootReport:
    root: FieldElement
    counters: Counters
    params: Params
    r: int
    nonresidue: Optional[FieldElement] = None
    all_roots: Optional[list] = None


def _verify(ctx: FieldCtx, root: FieldElement, delta: FieldElement, r: int) -> None:
    with uncounted():
        ok = ctx.pow(root, r) == delta
    if not ok:
        raise InternalVerificationFailed(
            f"{root}^{r} != {delta} in {ctx}; is p prime and the modulus irreducible?"
        )


def _check_loop_invariant(ctx: FieldCtx, b: FieldElement, e: int) -> None:
    if __debug__:
        with uncounted():
            ok = ctx.pow(b, e).is_one()
        if not ok:
            raise InternalVerificationFailed(f"loop invariant b^{e} = 1 broken in {ctx}")


def _zero_report(ctx: FieldCtx, r: int, params: Params) -> RootReport:
    return RootReport(ctx.zero(), Counters(), params, r)


def _require_residue(ctx: FieldCtx, delta: FieldElement, r: int) -> None:
    if not ctx.pow(delta, ctx.q_minus_1 // r).is_one():
        raise NotAResidue(f"{delta} is not a {_ordinal(r)} power in {ctx}")


def _ordinal(r: int) -> str:
    return {2: "square", 3: "cube"}.get(r, f"{r}-th")


# -- square roots ---------------------------------------------------------------


def _square_loop(ctx, delta, rho, t, s, counters) -> FieldElement:
    a = ctx.pow(rho, s)
    b = ctx.pow(delta, s)
    h = ctx.one()
    for i in range(1, t):
        d = ctx.pow(b, 1 << (t - 1 - i))
        a2 = ctx.mul(a, a)
        if not d.is_one():
            b = ctx.mul(b, a2)
            h = ctx.mul(h, a)
        a = a2
        counters.loop_iterations += 1
        _check_loop_invariant(ctx, b, 1 << (t - 1 - i))
    return ctx.mul(ctx.pow(delta, (s + 1) // 2), h)


def sqrt_prime(p: int, delta: int, rng: random.Random) -> RootReport:
    """Square root of ``delta`` modulo an odd prime ``p``.

    The nonresidue is found with the Legendre symbol rather than by
    exponentiation, and residuosity of ``delta`` is checked the same way.
    """
    ctx = make_prime_field(p)
    x = ctx.element([delta])
    t, s = factor_out(p - 1, 2)
    params = Params(t, s, (s + 1) // 2)
    if delta == 0:
        return _zero_report(ctx, 2, params)
    if legendre(delta, p) == -1:
        raise NotAResidue(f"{delta} is not a square mod {p}")
    counters = Counters()
    with counting(counters):
        rho = sample_nonresidue(ctx, 2, rng, counters)
        root = _square_loop(ctx, x, rho, t, s, counters)
    _verify(ctx, root, x, 2)
    return RootReport(root, counters, params, 2, rho)


def sqrt_ext(ctx: FieldCtx, delta: FieldElement, rng: random.Random) -> RootReport:
    """Square root in any odd-characteristic field, residuosity by Euler's criterion."""
    ctx._check(delta)
    t, s = factor_out(ctx.q_minus_1, 2)
    params = Params(t, s, (s + 1) // 2)
    if not delta:
        return _zero_report(ctx, 2, params)
    counters = Counters()
    with counting(counters):
        _require_residue(ctx, delta, 2)
        rho = sample_nonresidue(ctx, 2, rng, counters)
        root = _square_loop(ctx, delta, rho, t, s, counters)
    _verify(ctx, root, delta, 2)
    return RootReport(root, counters, params, 2, rho)


# -- cube roots -----------------------------------------------------------------


def cbrt(ctx: FieldCtx, delta: FieldElement, rng: random.Random) -> RootReport:
    """Cube root; needs 3 | q - 1.

    With q - 1 = 3**t * s, write s = 3l + 1 or s = 3l - 1. The loop leaves
    (delta**l * h)**3 equal to delta**-1 in the first case and to delta in
    the second, hence the final inversion when s = 3l + 1.
    """
    ctx._check(delta)
    if ctx.q_minus_1 % 3:
        raise RDoesNotDivide(f"3 does not divide q - 1 = {ctx.q_minus_1}")
    t, s = factor_out(ctx.q_minus_1, 3)
    invert = s % 3 == 1
    ell = (s - 1) // 3 if invert else (s + 1) // 3
    params = Params(t, s, ell)
    if not delta:
        return _zero_report(ctx, 3, params)
    counters = Counters()
    with counting(counters):
        _require_residue(ctx, delta, 3)
        rho = sample_nonresidue(ctx, 3, rng, counters)
        a = ctx.pow(rho, s)
        a_top = ctx.pow(rho, 3 ** (t - 1) * s)
        b = ctx.pow(delta, s)
        h = ctx.one()
        for i in range(1, t):
            d = ctx.pow(b, 3 ** (t - 1 - i))
            if d.is_one():
                k = 0
            elif d == a_top:
                k = 2
            else:
                k = 1
            a3 = ctx.pow(a, 3)
            if k:
                b = ctx.mul(b, ctx.pow(a3, k))
                h = ctx.mul(h, ctx.pow(a, k))
            a = a3
            counters.loop_iterations += 1
            _check_loop_invariant(ctx, b, 3 ** (t - 1 - i))
        root = ctx.mul(ctx.pow(delta, ell), h)
        if invert:
            root = ctx.inv(root)
    _verify(ctx, root, delta, 3)
    return RootReport(root, counters, params, 3, rho)


# -- general prime r ------------------------------------------------------------


def rth_root(ctx: FieldCtx, delta: FieldElement, r: int, rng: random.Random) -> RootReport:
    """r-th root for prime r dividing q - 1.

    Each of the t - 1 steps solves a brute-force discrete log in the order-r
    subgroup generated by rho**(s * r**(t-1)), so the cost grows linearly in r.
    """
    ctx._check(delta)
    if not is_probable_prime(r):
        raise RNotPrime(f"r = {r} is not prime")
    if ctx.q_minus_1 % r:
        raise RDoesNotDivide(f"r = {r} does not divide q - 1 = {ctx.q_minus_1}")
    t, s = factor_out(ctx.q_minus_1, r)
    alpha = least_alpha(r, s)
    params = Params(t, s, alpha)
    if not delta:
        return _zero_report(ctx, r, params)
    counters = Counters()
    with counting(counters):
        _require_residue(ctx, delta, r)
        rho = sample_nonresidue(ctx, r, rng, counters)
        a = ctx.pow(rho, r ** (t - 1) * s)
        # s == 1 forces alpha == 0, where r*alpha - 1 = -1
        b = ctx.pow(delta, r * alpha - 1) if alpha else ctx.inv(delta)
        c = ctx.pow(rho, s)
        h = ctx.one()
        for i in range(1, t):
            d = ctx.pow(b, r ** (t - 1 - i))
            if d.is_one():
                j = 0
            else:
                j = (r - subgroup_dlog(ctx, a, d, r, counters)) % r
            cr = ctx.pow(c, r)
            if j:
                b = ctx.mul(b, ctx.pow(cr, j))
                h = ctx.mul(h, ctx.pow(c, j))
            c = cr
            counters.loop_iterations += 1
            _check_loop_invariant(ctx, b, r ** (t - 1 - i))
        root = ctx.mul(ctx.pow(delta, alpha), h)
    _verify(ctx, root, delta, r)
    return RootReport(root, counters, params, r, rho)


def coprime_root(ctx: FieldCtx, delta: FieldElement, r: int) -> RootReport:
    """The unique r-th root when gcd(r, q - 1) = 1: delta**(r^-1 mod q-1)."""
    ctx._check(delta)
    if math.gcd(r, ctx.q_minus_1) != 1:
        raise NotCoprime(f"gcd({r}, {ctx.q_minus_1}) != 1")
    e = mod_inverse(r, ctx.q_minus_1)
    counters = Counters()
    with counting(counters):
        root = ctx.pow(delta, e)
    _verify(ctx, root, delta, r)
    return RootReport(root, counters, Params(0, ctx.q_minus_1, e), r)


# -- dispatch -------------------------------------------------------------------


def extract(
    ctx: FieldCtx,
    delta: FieldElement,
    r: int,
    rng: random.Random,
    want_all: bool = False,
) -> RootReport:
    """Pick the right algorithm for ``x**r == delta`` and optionally list every root."""
    ctx._check(delta)
    if r < 2:
        raise UnsupportedExponent(f"exponent must be >= 2, got {r}")
    if not delta:
        t, s = factor_out(ctx.q_minus_1, r)
        report = _zero_report(ctx, r, Params(t, s, 0))
    elif math.gcd(r, ctx.q_minus_1) == 1:
        report = coprime_root(ctx, delta, r)
    elif not is_probable_prime(r):
        raise UnsupportedExponent(
            f"composite r = {r} sharing a factor with q - 1 = {ctx.q_minus_1}"
        )
    elif r == 2 and ctx.m == 1:
        report = sqrt_prime(ctx.p, delta.coeffs[0], rng)
    elif r == 2:
        report = sqrt_ext(ctx, delta, rng)
    elif r == 3:
        report = cbrt(ctx, delta, rng)
    else:
        report = rth_root(ctx, delta, r, rng)
    if want_all:
        report.all_roots = all_roots(ctx, report, delta)
    return report


def all_roots(ctx: FieldCtx, report: RootReport, delta: FieldElement) -> list:
    """Every r-th root of ``delta``: ``root * omega**i`` for a primitive r-th root omega."""
    if not delta or report.nonresidue is None:
        return [report.root]
    r = report.r
    t, s, _ = report.params
    with uncounted():
        omega = ctx.pow(report.nonresidue, s * r ** (t - 1))
        units = [ctx.one()]
        for _ in range(r - 1):
            units.append(ctx.mul(units[-1], omega))
        if len(set(units)) != r:
            raise InternalVerificationFailed(f"roots of unity not distinct in {ctx}")
        roots = [ctx.mul(report.root, u) for u in units]
    for x in roots:
        _verify(ctx, x, delta, r)
    return roots
