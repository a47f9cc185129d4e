"""Dense polynomials over F_p as Python lists, constant term first.

Results are always trimmed (no trailing zeros); ``[]`` is the zero
polynomial. These helpers back irreducibility testing and inversion in
extension fields; element multiplication lives in :mod:`ammroot.field`.
"""

from __future__ import annotations


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list[int]) -> int:
    return len(f) - 1 if f else -1


def sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def divmod_(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim([c % p for c in f])
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    q = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        c = r[-1] * lead_inv % p
        q[shift] = c
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
        r = trim(r)
    return trim(q), r


def mod(f: list[int], g: list[int], p: int) -> list[int]:
    return divmod_(f, g, p)[1]


def mulmod(f: list[int], g: list[int], h: list[int], p: int) -> list[int]:
    return mod(mul(f, g, p), h, p)


def powmod(f: list[int], e: int, h: list[int], p: int) -> list[int]:
    result = [1]
    base = mod(f, h, p)
    while e:
        if e & 1:
            result = mulmod(result, base, h, p)
        base = mulmod(base, base, h, p)
        e >>= 1
    return mod(result, h, p)


def monic(f: list[int], p: int) -> list[int]:
    f = trim(f)
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def gcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd of ``f`` and ``g``."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def xgcd(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Return ``(d, u, v)`` with ``u*f + v*g = d`` and ``d`` monic."""
    r0, r1 = trim(f), trim(g)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, rem = divmod_(r0, r1, p)
        r0, r1 = r1, rem
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        v0, v1 = v1, sub(v0, mul(q, v1, p), p)
    if not r0:
        return [], u0, v0
    inv = pow(r0[-1], p - 2, p)
    scale = [inv]
    return mul(r0, scale, p), mul(u0, scale, p), mul(v0, scale, p)
