"""Integer number theory used by the root-extraction algorithms.

All values are Python ints, so arithmetic is exact at any size.
"""

from __future__ import annotations

import random

from .errors import (
    BothZero,
    EvenModulus,
    ModulusTooSmall,
    NotCoprime,
    NotInvertible,
)

# Miller-Rabin with these bases is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_ROUNDS = 32


def modpow(base: int, exp: int, modulus: int) -> int:
    """Return ``base**exp % modulus`` by repeated squaring."""
    if modulus < 2:
        raise ModulusTooSmall(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b)`` and ``a*x + b*y = g``."""
    if a == 0 and b == 0:
        raise BothZero("ext_gcd(0, 0) is undefined")
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(a: int, n: int) -> int:
    if n < 2:
        raise ModulusTooSmall(f"modulus must be >= 2, got {n}")
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotInvertible(f"{a} has no inverse mod {n} (gcd {g})")
    return x % n


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, returning -1, 0 or 1.

    Computed with the binary Jacobi reduction (quadratic reciprocity plus
    the supplementary law for 2), so it never exponentiates. Primality of
    ``p`` is not checked; for composite odd ``p`` the result is the Jacobi
    symbol.
    """
    if p % 2 == 0:
        raise EvenModulus(f"modulus must be odd, got {p}")
    if p < 3:
        raise ModulusTooSmall(f"modulus must be >= 3, got {p}")
    a %= p
    n = p
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def factor_out(n: int, r: int) -> tuple[int, int]:
    """Split ``n = r**t * s`` with ``r`` not dividing ``s``; returns ``(t, s)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    t = 0
    while n % r == 0:
        n //= r
        t += 1
    return t, n


def least_alpha(r: int, s: int) -> int:
    """Least ``alpha >= 0`` such that ``s`` divides ``r*alpha - 1``."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if s == 1:
        return 0
    g, x, _ = ext_gcd(r % s, s)
    if g != 1:
        raise NotCoprime(f"gcd({r}, {s}) = {g}")
    return x % s


def is_probable_prime(n: int, rounds: int = _MR_EXTRA_ROUNDS) -> bool:
    """Strong pseudoprime test.

    Deterministic for n < 3.3e24; above that, ``rounds`` extra bases are
    drawn from an RNG seeded by ``n`` so the answer is reproducible.
    """
    if n < 2:
        return False
    for sp in _MR_BASES:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if any(witness(a) for a in _MR_BASES):
        return False
    if n < 3_317_044_064_679_887_385_961_981:
        return True
    rng = random.Random(n)
    return not any(witness(rng.randrange(2, n - 1)) for _ in range(rounds))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of a small positive integer, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
